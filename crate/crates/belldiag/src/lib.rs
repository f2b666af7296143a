//! Construction and separability classification of Bell-diagonal two-qudit
//! states with maximal abelian symmetry.
//!
//! The crate builds the shift/phase unitaries and Bell projectors on
//! C^d ⊗ C^d, the diagonal projector families derived from them, a matching
//! family of entanglement witnesses, and exact analytic PPT/separability
//! tests cross-validated by a dense partial-transpose eigenvalue oracle and
//! explicit separable decompositions.
//!
//! All kernels are generic over the real scalar type ([`scalar::Real`],
//! implemented for `f32` and `f64`); the `*64` aliases below are the
//! concrete types most callers want.

pub mod bell;
pub mod classify;
pub mod error;
pub mod matrix;
pub mod sampling;
pub mod scalar;
pub mod witness;

mod eigen;

pub use eigen::JacobiSettings;
pub use error::{Error, Result};
pub use scalar::Real;

/// Complex scalar over `f64`.
pub type C64 = num_complex::Complex<f64>;
/// Complex scalar over `f32`.
pub type C32 = num_complex::Complex<f32>;

pub type ComplexMatrix64 = matrix::ComplexMatrix<f64>;
pub type ComplexMatrix32 = matrix::ComplexMatrix<f32>;
pub type Ket64 = matrix::Ket<f64>;
pub type DensityMatrix64 = bell::DensityMatrix<f64>;
pub type BellSpectrum64 = bell::BellSpectrum<f64>;
pub type FamWeights64 = bell::FamWeights<f64>;
pub type FamGWeights64 = bell::FamGWeights<f64>;
pub type FamUUWeights64 = bell::FamUUWeights<f64>;
pub type PhaseVector64 = bell::PhaseVector<f64>;
pub type Verdict64 = classify::Verdict<f64>;
pub type SeparableEnsemble64 = classify::SeparableEnsemble<f64>;
pub type DetectionResult64 = witness::DetectionResult<f64>;
