//! Error taxonomy shared by every module.

use thiserror::Error;

/// Errors reported by grid construction, assembly, solvers and estimators.
#[derive(Debug, Error)]
pub enum Error {
    #[error("grid too small: need at least 4 points per axis, got {0}")]
    GridTooSmall(usize),
    #[error("unsupported dimension {0}: only n = 2 and n = 3 are implemented")]
    UnsupportedDim(usize),
    #[error("bad potential descriptor: {0}")]
    BadDescriptor(String),
    #[error("grid mismatch: {0}")]
    GridMismatch(String),
    #[error("linear solve failed: {0}")]
    SolveFailure(String),
    #[error("bad exponent p = {0}: need p >= 1 or p = inf")]
    BadExponent(f64),
    #[error("spectrum not strictly positive (lambda_{idx} = {value}); shift it first")]
    NonPositiveSpectrum { idx: usize, value: f64 },
    #[error("eigensolver failed to converge: {0}")]
    ConvergenceFailure(String),
    #[error("requested K = {k} eigenpairs but the operator has dimension {dim}")]
    KTooLarge { k: usize, dim: usize },
    #[error("unknown trace mode: {0}")]
    BadMode(String),
    #[error("range too small: {0}")]
    RangeTooSmall(String),
    #[error("shifted operator is numerically singular (condition estimate {cond:.3e} at lambda = {lambda})")]
    NearSingular { lambda: num_complex::Complex64, cond: f64 },
    #[error("spectral parameter {0} falls on the computed spectrum")]
    SpectrumHit(num_complex::Complex64),
    #[error("bad query: {0}")]
    BadQuery(String),
    #[error("xi and eta are not orthogonal: xi . eta = {0:.3e}")]
    NotOrthogonal(f64),
    #[error("|xi| = {xi} too large for m = {m}: need |xi| < 2m")]
    XiTooLarge { xi: f64, m: u32 },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("index range error: {0}")]
    RangeError(String),
    #[error("sqrt branch ambiguous for lambda on the positive real axis ({0})")]
    BranchAmbiguous(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
