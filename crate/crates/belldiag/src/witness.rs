//! Entanglement witnesses built from the diagonal projector family:
//! W = (d-k) Π_0 + Σ_{i=1}^{k} Π_{π(i)} − P⁺ for a permutation π of
//! {1, ..., d-1}, plus evaluation, block-positivity sampling, and an
//! exhaustive detection sweep.

use itertools::Itertools;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bell::{max_entangled, pi_state, DensityMatrix};
use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::sampling::random_unit_ket;
use crate::scalar::Real;

/// Identifies one witness: dimension d, cutoff k, and a permutation of
/// {1, ..., d-1} listed as the images (π(1), ..., π(d-1)).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessSpec {
    d: usize,
    k: usize,
    pi: Vec<usize>,
}

impl WitnessSpec {
    pub fn new(d: usize, k: usize, pi: Vec<usize>) -> Result<Self> {
        if d < 2 {
            return Err(Error::BadDimension { d, requirement: "d >= 2" });
        }
        if !(1..d).contains(&k) {
            return Err(Error::ParamOutOfRange {
                reason: format!("k = {k} outside 1..={}", d - 1),
            });
        }
        if pi.len() != d - 1 {
            return Err(Error::InvalidPermutation {
                reason: format!("expected {} images, got {}", d - 1, pi.len()),
            });
        }
        let mut seen = vec![false; d];
        for &image in &pi {
            if image == 0 || image >= d || seen[image] {
                return Err(Error::InvalidPermutation {
                    reason: format!("images must be a bijection on 1..={}, got {pi:?}", d - 1),
                });
            }
            seen[image] = true;
        }
        Ok(Self { d, k, pi })
    }

    /// The identity permutation for the given (d, k).
    pub fn identity(d: usize, k: usize) -> Result<Self> {
        Self::new(d, k, (1..d).collect())
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Images (π(1), ..., π(d-1)).
    pub fn pi(&self) -> &[usize] {
        &self.pi
    }
}

/// Outcome of the exhaustive witness sweep over all (k, π).
#[derive(Debug, Clone, PartialEq)]
pub struct DetectionResult<T> {
    /// True iff the best value lies below the detection threshold.
    pub detected: bool,
    /// Spec achieving the minimal trace, earliest in (k, π) order on ties.
    pub best_spec: Option<WitnessSpec>,
    /// Minimal Tr(ρ W) found.
    pub best_value: T,
}

/// Dense witness matrix (d-k) Π_0 + Σ_{i=1}^{k} Π_{π(i)} − P⁺.
pub fn witness_matrix<T: Real>(spec: &WitnessSpec) -> ComplexMatrix<T> {
    let d = spec.d;
    let n = d * d;
    let mut acc = ComplexMatrix::zeros(n, n);
    let pi0 = pi_state::<T>(d, 0).expect("index in range");
    acc.add_assign_scaled(pi0.matrix(), T::from_index(d - spec.k));
    for i in 0..spec.k {
        let p = pi_state::<T>(d, spec.pi[i]).expect("index in range");
        acc.add_assign_scaled(p.matrix(), T::one());
    }
    let plus = max_entangled::<T>(d).expect("d >= 2");
    acc.add_assign_scaled(plus.matrix(), -T::one());
    acc
}

/// (I ⊗ R) P⁺ where R(X) = I·Tr(X) − X acts on the second factor.
///
/// Built directly from the map, block by block; equals the k = d-1,
/// identity-permutation witness entrywise.
pub fn reduction_witness<T: Real>(d: usize) -> Result<ComplexMatrix<T>> {
    let plus = max_entangled::<T>(d)?;
    let src = plus.matrix();
    let n = d * d;
    let mut out = ComplexMatrix::zeros(n, n);
    for i in 0..d {
        for k in 0..d {
            // B-factor block (i, k) of P⁺ as a d×d matrix.
            let mut block_trace = num_complex::Complex::new(T::zero(), T::zero());
            for j in 0..d {
                block_trace += src[(i * d + j, k * d + j)];
            }
            for j in 0..d {
                for l in 0..d {
                    let mut v = -src[(i * d + j, k * d + l)];
                    if j == l {
                        v += block_trace;
                    }
                    out.set(i * d + j, k * d + l, v);
                }
            }
        }
    }
    Ok(out)
}

/// Tr(ρ W) for the witness identified by `spec`.
pub fn evaluate<T: Real>(rho: &DensityMatrix<T>, spec: &WitnessSpec) -> Result<T> {
    if rho.local_dim() != spec.d {
        return Err(Error::DimMismatch {
            expected: format!("local dimension {}", spec.d),
            got: format!("local dimension {}", rho.local_dim()),
        });
    }
    let w = witness_matrix::<T>(spec);
    let tr = rho.matrix().trace_product(&w)?;
    debug_assert!(tr.im.abs() <= T::TOL_EXACT, "witness trace should be real");
    Ok(tr.re)
}

/// Minimum of <a⊗b| W |a⊗b> over seeded pseudorandom unit product vectors.
///
/// This is a falsification test of block positivity, not a certified global
/// minimum; a legitimate witness stays above -TOL_DETECT.
pub fn product_positivity_check<T: Real>(spec: &WitnessSpec, samples: usize, seed: u64) -> T {
    assert!(samples >= 1, "at least one sample required");
    let w = witness_matrix::<T>(spec);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut min = T::infinity();
    for _ in 0..samples {
        let a = random_unit_ket::<T, _>(spec.d, &mut rng);
        let b = random_unit_ket::<T, _>(spec.d, &mut rng);
        let value = a.tensor(&b).expectation(&w).re;
        min = min.min(value);
    }
    min
}

/// Exhaustive sweep of Tr(ρ W) over every k and every permutation of
/// {1, ..., d-1}; ties resolve to the earliest (k, π) in lexicographic order.
///
/// W is linear in Π_0, ..., Π_{d-1} and P⁺, so the sweep reduces every
/// candidate to a combination of d+1 precomputed dense traces.
pub fn detect<T: Real>(rho: &DensityMatrix<T>) -> DetectionResult<T> {
    let d = rho.local_dim();
    let mut pi_traces = Vec::with_capacity(d);
    for n in 0..d {
        let p = pi_state::<T>(d, n).expect("index in range");
        pi_traces.push(rho.matrix().trace_product(p.matrix()).expect("dims match").re);
    }
    let plus = max_entangled::<T>(d).expect("d >= 2");
    let plus_trace = rho.matrix().trace_product(plus.matrix()).expect("dims match").re;

    let mut best_value = T::infinity();
    let mut best_spec = None;
    for k in 1..d {
        for perm in (1..d).permutations(d - 1) {
            let mut value = T::from_index(d - k) * pi_traces[0] - plus_trace;
            for &image in perm.iter().take(k) {
                value += pi_traces[image];
            }
            if value < best_value {
                best_value = value;
                best_spec = Some(WitnessSpec { d, k, pi: perm });
            }
        }
    }
    DetectionResult { detected: best_value < -T::TOL_DETECT, best_spec, best_value }
}
