//! Independent numeric oracles for the values the library promises in
//! closed form: brute-force expansions, exhaustive enumerations, and
//! hand-expanded small cases. These deliberately avoid the production
//! construction paths they check.

use belldiag::bell::{
    bell_diagonal, bell_projector, epsilon_family, fam_state, horodecki_family, max_entangled,
    pi_state, BellSpectrum, FamWeights,
};
use belldiag::classify::separable_decomposition;
use belldiag::matrix::Ket;
use belldiag::witness::{evaluate, witness_matrix, WitnessSpec};
use belldiag::{C64, ComplexMatrix64, FamGWeights64};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn r(re: f64) -> C64 {
    C64::new(re, 0.0)
}

fn assert_close(m: &ComplexMatrix64, expect: &ComplexMatrix64, tol: f64, what: &str) {
    let diff = (m - expect).max_abs_entry();
    assert!(diff <= tol, "{what}: matrices differ by {diff:e}");
}

/// Partial transpose of P⁺_2, expanded by hand in the basis (00, 01, 10, 11):
/// swapping the B indices of (1/2)Σ|ii><jj| moves the corner entries onto
/// the (01, 10) pair, giving half the SWAP matrix.
#[test]
fn partial_transpose_of_p_plus_2_is_half_swap() {
    let plus = max_entangled::<f64>(2).unwrap();
    let pt = plus.matrix().partial_transpose_b(2).unwrap();
    let half_swap = ComplexMatrix64::new(
        4,
        4,
        vec![
            r(0.5), r(0.0), r(0.0), r(0.0),
            r(0.0), r(0.0), r(0.5), r(0.0),
            r(0.0), r(0.5), r(0.0), r(0.0),
            r(0.0), r(0.0), r(0.0), r(0.5),
        ],
    );
    assert_close(&pt, &half_swap, 0.0, "PT(P+_2)");
    let vals = pt.hermitian_eigenvalues().unwrap();
    let expect = [-0.5, 0.5, 0.5, 0.5];
    for (v, e) in vals.iter().zip(expect) {
        assert!((v - e).abs() < 1e-14);
    }
}

/// PT(P⁺_d) is (1/d)·SWAP: eigenvalue +1/d on the symmetric subspace
/// (dimension d(d+1)/2) and −1/d on the antisymmetric one (d(d-1)/2).
#[test]
fn partial_transpose_of_p_plus_spectrum() {
    for d in 2..=4 {
        let plus = max_entangled::<f64>(d).unwrap();
        let pt = plus.matrix().partial_transpose_b(d).unwrap();
        let vals = pt.hermitian_eigenvalues().unwrap();
        let neg = d * (d - 1) / 2;
        for (idx, v) in vals.iter().enumerate() {
            let expect = if idx < neg { -1.0 / d as f64 } else { 1.0 / d as f64 };
            assert!((v - expect).abs() < 1e-12, "d={d} idx={idx}: {v}");
        }
    }
}

/// Brute-force check of the phase-ensemble identity behind every separable
/// decomposition: averaging |e⟩⟨e| ⊗ |ē⟩⟨ē| over all exponent tuples equals
/// (1/d)(Σ_{n>=1} Π_n + P⁺). Built here from scratch, without the library's
/// ensemble code.
#[test]
fn phase_ensemble_average_identity() {
    for d in [2usize, 3, 4] {
        let order: usize = if d == 2 { 4 } else { d };
        let count = order.pow(d as u32);
        let unit = 1.0 / (d as f64).sqrt();
        let mut avg = ComplexMatrix64::zeros(d * d, d * d);
        for code in 0..count {
            // Decode the exponent tuple in base `order`.
            let mut exps = Vec::with_capacity(d);
            let mut rest = code;
            for _ in 0..d {
                exps.push(rest % order);
                rest /= order;
            }
            let amps: Vec<C64> = exps
                .iter()
                .map(|&e| C64::from_polar(unit, std::f64::consts::TAU * e as f64 / order as f64))
                .collect();
            let ket_a = Ket::from_amplitudes(amps);
            let ket_b = ket_a.conj();
            avg.add_assign_scaled(&ket_a.tensor(&ket_b).projector(), 1.0 / count as f64);
        }
        let mut target = ComplexMatrix64::zeros(d * d, d * d);
        for n in 1..d {
            target.add_assign_scaled(pi_state::<f64>(d, n).unwrap().matrix(), 1.0 / d as f64);
        }
        target.add_assign_scaled(max_entangled::<f64>(d).unwrap().matrix(), 1.0 / d as f64);
        assert_close(&avg, &target, 1e-12, &format!("phase ensemble average d={d}"));
    }
}

/// The decomposition of the uniform-weight state is checked against the
/// state built through the projector route, term weights and all.
#[test]
fn uniform_state_decomposition_reconstructs() {
    for d in [2usize, 3] {
        let w: FamGWeights64 = FamWeights::uniform(d).unwrap().into();
        let ensemble = separable_decomposition(&w).unwrap();
        let expected_terms = if d == 2 { 16 } else { 27 };
        assert_eq!(ensemble.term_count(), expected_terms);
        let target = fam_state(&FamWeights::<f64>::uniform(d).unwrap());
        assert!(ensemble.max_error_vs(target.matrix()) <= 1e-12);
    }
}

/// The conjugation route (I ⊗ U) P⁺ (I ⊗ U)† must agree with the closed
/// form P_mn[(i, i+n), (j, j+n)] = ω^{m(i-j)}/d, zeros elsewhere: an
/// independent check on the phase bookkeeping of the unitary lift.
#[test]
fn bell_projectors_match_their_closed_form() {
    for d in [2usize, 3, 5] {
        for m in 0..d {
            for n in 0..d {
                let built = bell_projector::<f64>(d, m, n).unwrap();
                let mut direct = ComplexMatrix64::zeros(d * d, d * d);
                for i in 0..d {
                    for j in 0..d {
                        let angle = std::f64::consts::TAU * (m * ((i + d - j) % d)) as f64 / d as f64;
                        let value = C64::from_polar(1.0 / d as f64, angle);
                        direct.set(i * d + (i + n) % d, j * d + (j + n) % d, value);
                    }
                }
                assert_close(built.matrix(), &direct, 1e-14, &format!("P_{m}{n} d={d}"));
            }
        }
    }
}

/// Exhaustive Bell-basis resolution: Σ_m P_mn = d·Π_n for every diagonal n.
#[test]
fn bell_projectors_resolve_pi_states() {
    for d in [2usize, 3] {
        for n in 0..d {
            let mut acc = ComplexMatrix64::zeros(d * d, d * d);
            for m in 0..d {
                acc = &acc + bell_projector::<f64>(d, m, n).unwrap().matrix();
            }
            let target = pi_state::<f64>(d, n).unwrap().matrix().scaled_real(d as f64);
            assert_close(&acc, &target, 1e-12, &format!("sum_m P_m{n} for d={d}"));
        }
    }
}

/// Spectrum of a Bell-diagonal mixture equals its weight table as a
/// multiset: checked against seeded random spectra by full eigensolve.
#[test]
fn bell_diagonal_spectrum_equals_weights() {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    for d in [2usize, 3] {
        for _ in 0..5 {
            let raw: Vec<f64> = (0..d * d).map(|_| rng.gen_range(0.0..1.0)).collect();
            let total: f64 = raw.iter().sum();
            let p: Vec<f64> = raw.into_iter().map(|v| v / total).collect();
            let mut expect = p.clone();
            expect.sort_by(f64::total_cmp);
            let spec = BellSpectrum::new(d, p).unwrap();
            let vals = bell_diagonal(&spec).matrix().hermitian_eigenvalues().unwrap();
            for (v, e) in vals.iter().zip(expect) {
                assert!((v - e).abs() < 1e-10, "d={d}: eigenvalue {v} vs weight {e}");
            }
        }
    }
}

/// Witness traces against the dense route for the single-cutoff family, over
/// the exact weight values of the generalized construction.
#[test]
fn witness_trace_closed_forms() {
    // Tr(ρ W_{d,1}) = (λ_1 − λ_d)/d on the plain family.
    for d in [3usize, 4, 5] {
        let w = horodecki_family::<f64>(d, 1.3).unwrap();
        let rho = fam_state(&w);
        let spec = WitnessSpec::identity(d, 1).unwrap();
        let dense = evaluate(&rho, &spec).unwrap();
        let closed = (w.lambda(1) - w.lambda_d()) / d as f64;
        assert!((dense - closed).abs() < 1e-14, "d={d}");
    }
    // Permutation covariance: Tr(ρ W^π_{d,1}) = (λ_{π(1)} − λ_d)/d.
    let d = 4;
    let w = epsilon_family::<f64>(d, 2.0).unwrap();
    let rho = fam_state(&w);
    for first in 1..d {
        let mut pi: Vec<usize> = (1..d).collect();
        pi.retain(|&x| x != first);
        pi.insert(0, first);
        let spec = WitnessSpec::new(d, 1, pi).unwrap();
        let dense = evaluate(&rho, &spec).unwrap();
        let closed = (w.lambda(first) - w.lambda_d()) / d as f64;
        assert!((dense - closed).abs() < 1e-14, "pi(1)={first}");
    }
}

/// Frozen oracle values for witness traces on P⁺ and Π_0; both follow from
/// Tr(Π_0 P⁺) = 1/d, which the dense route confirms.
#[test]
fn witness_trace_on_extreme_states() {
    let d = 4;
    let plus = max_entangled::<f64>(d).unwrap();
    let spec = WitnessSpec::identity(d, 3).unwrap();
    let value = evaluate(&plus, &spec).unwrap();
    assert!((value + 0.75).abs() < 1e-13, "Tr(P+ W_4,3) = -3/4, got {value}");

    for k in 1..d {
        let spec = WitnessSpec::identity(d, k).unwrap();
        let value = evaluate(&plus, &spec).unwrap();
        assert!((value + k as f64 / d as f64).abs() < 1e-13);

        let pi0 = pi_state::<f64>(d, 0).unwrap();
        let value = evaluate(&pi0, &spec).unwrap();
        assert!((value - (d as f64 - k as f64 - 1.0) / d as f64).abs() < 1e-13);
    }
}

/// Orthogonality relations used throughout, via the trace-product kernel:
/// Tr(Π_m Π_n) = δ_mn/d and Tr(Π_n P⁺) = 1/d iff n = 0... (n >= 1 vanishes).
#[test]
fn projector_trace_table() {
    let d = 5;
    let plus = max_entangled::<f64>(d).unwrap();
    for m in 0..d {
        let pm = pi_state::<f64>(d, m).unwrap();
        for n in 0..d {
            let pn = pi_state::<f64>(d, n).unwrap();
            let tr = pm.matrix().trace_product(pn.matrix()).unwrap();
            let expect = if m == n { 1.0 / d as f64 } else { 0.0 };
            assert!((tr - r(expect)).norm() < 1e-14);
        }
        let tr = pm.matrix().trace_product(plus.matrix()).unwrap();
        let expect = if m == 0 { 1.0 / d as f64 } else { 0.0 };
        assert!((tr - r(expect)).norm() < 1e-14);
    }
}

/// The witness family written against its I/d resolution: for k = d-1,
/// W = I/d − P⁺ exactly, independent of permutation.
#[test]
fn full_cutoff_witness_closed_form() {
    for d in 2..=5 {
        let mut expect = ComplexMatrix64::identity(d * d).scaled_real(1.0 / d as f64);
        expect.add_assign_scaled(max_entangled::<f64>(d).unwrap().matrix(), -1.0);
        // Any permutation gives the same operator at full cutoff.
        let mut pi: Vec<usize> = (1..d).collect();
        pi.reverse();
        let spec = WitnessSpec::new(d, d - 1, pi).unwrap();
        assert_close(&witness_matrix::<f64>(&spec), &expect, 1e-15, "W_{d,d-1}");
    }
}
