//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimMismatch { expected: String, got: String },

    #[error("qudit dimension d = {d} is invalid: {requirement}")]
    BadDimension { d: usize, requirement: &'static str },

    #[error("index ({m}, {n}) out of range for d = {d}")]
    IndexOutOfRange { m: usize, n: usize, d: usize },

    #[error("matrix is not Hermitian: max |M[i][j] - conj(M[j][i])| = {defect:e}")]
    NotHermitian { defect: f64 },

    #[error("invalid weights: {reason}")]
    InvalidWeights { reason: String },

    #[error("parameter out of range: {reason}")]
    ParamOutOfRange { reason: String },

    #[error("invalid permutation: {reason}")]
    InvalidPermutation { reason: String },

    #[error("precondition failed: {reason}")]
    Precondition { reason: String },

    #[error("eigensolver did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
