//! Numerical laboratory for inverse spectral problems on the unit box.
//!
//! The crate discretizes the Schrödinger operator `-Δ + q` on `(0,1)^n`
//! (n = 2 or 3) with the standard 2n+1-point stencil and Dirichlet
//! elimination, computes its low Dirichlet eigenpairs together with the
//! Neumann traces of the eigenfunctions, and builds the
//! Dirichlet-to-Neumann map both by direct shifted sparse solves and by
//! eigenfunction series.  On top of that sit the quantitative checks this
//! crate exists for: decay of DN-map differences as the spectral parameter
//! goes to -∞, derivative series of the DN map, the low-mode rational
//! contribution behind incomplete spectral data, resolvent norm bounds,
//! Weyl-law diagnostics, and Fourier recovery of a potential difference
//! from boundary data probed with complex exponentials.
//!
//! Modules follow the pipeline:
//!
//! * [`mesh`] — grid, potential sampling, operator assembly, boundary lifting
//! * [`norms`] — discrete volume / gradient / spectral Sobolev / boundary norms
//! * [`spectrum`] — eigenpairs, Neumann traces, Weyl fits
//! * [`resolvent`] — shifted solves, series application, norm-bound checks
//! * [`dnmap`] — DN matrices, decay, derivative series, low-mode sums
//! * [`isozaki`] — complex-parameter boundary functional and recovery
//!
//! All value types are immutable after construction and safe to share
//! across threads; operations are pure functions of their inputs.

pub mod dnmap;
pub mod error;
pub mod field;
pub mod isozaki;
pub mod linalg;
pub mod mesh;
pub mod norms;
pub mod resolvent;
pub mod spectrum;

pub use error::{Error, Result};
pub use field::{BoundaryFunction, InteriorField};
pub use mesh::{
    assemble_hamiltonian, build_grid, lift_boundary, sample_potential, DiscreteOperator, Grid,
    PotentialDescriptor, PotentialField,
};
pub use spectrum::{compute_spectrum, neumann_traces, shift_to_positive, SpectralData, TraceMode};

/// Complex scalar used throughout.
pub type C64 = num_complex::Complex64;
