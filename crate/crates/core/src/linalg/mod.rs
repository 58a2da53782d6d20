//! Small self-contained linear algebra kernels.
//!
//! The discrete operators here are banded when interior nodes are ordered
//! row-major, so shifted systems `A - λI` are factored with band
//! Cholesky (real SPD shifts) or band LDLᵀ (complex shifts) without
//! pivoting.  The eigensolver is a shift-invert block Lanczos with full
//! reorthogonalization; dense symmetric eigendecomposition (nalgebra)
//! doubles as fallback and as the differential-test oracle.

pub mod banded;
pub mod csr;
pub mod dense;
pub mod lanczos;
pub mod power;

pub use banded::{BandedCholesky, BandedLdlt};
pub use csr::CsrMatrix;
