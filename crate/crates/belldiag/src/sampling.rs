//! Seeded random inputs for property checks: unit kets, phase vectors and
//! simplex weights. Everything draws through caller-provided RNGs so runs
//! are reproducible.

use num_complex::Complex;
use rand::Rng;
use rand_distr::{Distribution, Exp1, StandardNormal};

use crate::bell::{FamGWeights, FamWeights, PhaseVector};
use crate::classify::separable_analytic;
use crate::matrix::Ket;
use crate::scalar::Real;

/// Unit vector with independent complex-normal entries (rotation invariant).
pub fn random_unit_ket<T: Real, R: Rng + ?Sized>(d: usize, rng: &mut R) -> Ket<T> {
    let amplitudes = (0..d)
        .map(|_| {
            let re: f64 = StandardNormal.sample(rng);
            let im: f64 = StandardNormal.sample(rng);
            Complex::new(
                T::from_f64(re).expect("normal sample fits"),
                T::from_f64(im).expect("normal sample fits"),
            )
        })
        .collect();
    Ket::from_amplitudes(amplitudes).normalized()
}

/// Phases drawn uniformly from [0, 2π)^d.
pub fn random_phase_vector<T: Real, R: Rng + ?Sized>(d: usize, rng: &mut R) -> PhaseVector<T> {
    let x = (0..d)
        .map(|_| {
            let u: f64 = rng.gen();
            T::from_f64(u).expect("uniform sample fits") * T::TAU()
        })
        .collect();
    PhaseVector::new(x).expect("finite phases")
}

fn simplex_point<T: Real, R: Rng + ?Sized>(len: usize, rng: &mut R) -> Vec<T> {
    // Normalized iid Exp(1) draws are uniform on the simplex.
    let raw: Vec<f64> = (0..len).map(|_| Exp1.sample(rng)).collect();
    let total: f64 = raw.iter().sum();
    raw.into_iter().map(|v| T::from_f64(v / total).expect("weight fits")).collect()
}

/// Uniformly random weights (λ_1, ..., λ_d).
pub fn random_fam_weights<T: Real, R: Rng + ?Sized>(d: usize, rng: &mut R) -> FamWeights<T> {
    FamWeights::new(d, simplex_point(d, rng)).expect("simplex point is valid")
}

/// Uniformly random weights (λ_0, ..., λ_d).
pub fn random_fam_g_weights<T: Real, R: Rng + ?Sized>(d: usize, rng: &mut R) -> FamGWeights<T> {
    FamGWeights::new(d, simplex_point(d + 1, rng)).expect("simplex point is valid")
}

/// Random weights conditioned on the analytic separability condition
/// (rejection sampling; acceptance is ~1/d).
pub fn random_separable_fam_weights<T: Real, R: Rng + ?Sized>(d: usize, rng: &mut R) -> FamWeights<T> {
    loop {
        let w = random_fam_weights(d, rng);
        if separable_analytic(&w).satisfied {
            return w;
        }
    }
}
