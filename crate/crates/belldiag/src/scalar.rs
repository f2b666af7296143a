//! Scalar abstraction: every kernel is generic over the real floating-point
//! type carrying the complex arithmetic.

use std::fmt;
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};

/// Real floating-point scalar backing all matrix and state arithmetic.
///
/// The associated tolerances scale with the precision of the type. All
/// constructions in this crate are exact rationals times roots of unity, so
/// `TOL_EXACT` is a roundoff allowance, not a modelling error bar.
pub trait Real:
    Float + FloatConst + FromPrimitive + NumAssign + Sum<Self> + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    /// Drift allowed for algebra that is exact up to roundoff
    /// (hermiticity defects, weight normalization, symmetry residuals).
    const TOL_EXACT: Self;
    /// Tolerance on numerically computed eigenvalues.
    const TOL_EIG: Self;
    /// A witness expectation below `-TOL_DETECT` counts as a violation.
    const TOL_DETECT: Self;
    /// Slack for closed-form inequality comparisons.
    const TOL_ANALYTIC: Self;
    /// Relative off-diagonal Frobenius mass at which the Jacobi sweep stops.
    const JACOBI_REL_TOL: Self;

    fn from_index(i: usize) -> Self {
        Self::from_usize(i).expect("index fits in scalar")
    }
}

impl Real for f64 {
    const TOL_EXACT: Self = 1e-12;
    const TOL_EIG: Self = 1e-10;
    const TOL_DETECT: Self = 1e-12;
    const TOL_ANALYTIC: Self = 1e-15;
    const JACOBI_REL_TOL: Self = 1e-14;
}

impl Real for f32 {
    const TOL_EXACT: Self = 1e-4;
    const TOL_EIG: Self = 1e-3;
    const TOL_DETECT: Self = 1e-4;
    const TOL_ANALYTIC: Self = 1e-6;
    const JACOBI_REL_TOL: Self = 1e-6;
}
