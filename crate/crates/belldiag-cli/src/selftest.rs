//! Built-in invariant suites: projector algebra, Bell-basis structure,
//! abelian symmetry, reduction-map identity, analytic-vs-numeric PPT oracle
//! agreement, witness block positivity, and decomposition soundness.

use belldiag::bell::{
    bell_projector, check_symmetry, fam_g_state, fam_state, fam_uu_state, pi_state, FamUUWeights,
};
use belldiag::classify::{ppt_analytic, separable_decomposition};
use belldiag::sampling::{
    random_fam_g_weights, random_fam_weights, random_phase_vector, random_separable_fam_weights,
};
use belldiag::witness::{reduction_witness, witness_matrix, product_positivity_check, WitnessSpec};
use belldiag::{ComplexMatrix64, FamGWeights64, JacobiSettings};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub struct SelftestConfig {
    pub d_max: usize,
    pub seed: u64,
    pub tol_eig: f64,
    /// Cranks the eigensolver convergence threshold so it returns raw
    /// diagonals; used to prove the oracle suite actually bites.
    pub inject_eig_fault: bool,
}

type Suite = fn(&SelftestConfig) -> Result<(), String>;

/// Run every suite, print one PASS/FAIL line each, and return overall success.
pub fn run(cfg: &SelftestConfig) -> bool {
    println!(
        "selftest: d = 2..={}, seed = {}, tol_eig = {:e}{}",
        cfg.d_max,
        cfg.seed,
        cfg.tol_eig,
        if cfg.inject_eig_fault { ", EIGENSOLVER FAULT INJECTED" } else { "" }
    );
    let suites: Vec<(&str, Suite)> = vec![
        ("projector-algebra", projector_algebra),
        ("bell-basis", bell_basis),
        ("symmetry", symmetry),
        ("reduction-identity", reduction_identity),
        ("oracle-equivalence", oracle_equivalence),
        ("witness-positivity", witness_positivity),
        ("decomposition", decomposition),
    ];
    let mut all_ok = true;
    for (name, suite) in suites {
        match suite(cfg) {
            Ok(()) => println!("PASS {name}"),
            Err(reason) => {
                all_ok = false;
                println!("FAIL {name}: {reason}");
            }
        }
    }
    println!("selftest: {}", if all_ok { "all suites passed" } else { "FAILURES present" });
    all_ok
}

fn check(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn projector_algebra(cfg: &SelftestConfig) -> Result<(), String> {
    for d in 2..=cfg.d_max {
        let n = d * d;
        let pis: Vec<_> = (0..d).map(|k| pi_state::<f64>(d, k).unwrap()).collect();
        let mut total = ComplexMatrix64::zeros(n, n);
        for (m, pm) in pis.iter().enumerate() {
            for (k, pk) in pis.iter().enumerate() {
                let prod = pm.matrix().matmul(pk.matrix());
                let expect = if m == k {
                    pk.matrix().scaled_real(1.0 / d as f64)
                } else {
                    ComplexMatrix64::zeros(n, n)
                };
                let diff = (&prod - &expect).max_abs_entry();
                check(diff <= 1e-12, || format!("d={d}: product ({m},{k}) off by {diff:e}"))?;
            }
            total = &total + pm.matrix();
        }
        let diff = (&total - &ComplexMatrix64::identity(n).scaled_real(1.0 / d as f64)).max_abs_entry();
        check(diff <= 1e-12, || format!("d={d}: resolution off by {diff:e}"))?;
    }
    Ok(())
}

fn bell_basis(cfg: &SelftestConfig) -> Result<(), String> {
    for d in 2..=cfg.d_max {
        let n = d * d;
        let projectors: Vec<_> = (0..d)
            .flat_map(|m| (0..d).map(move |k| (m, k)))
            .map(|(m, k)| bell_projector::<f64>(d, m, k).unwrap())
            .collect();
        let mut sum = ComplexMatrix64::zeros(n, n);
        for (a, pa) in projectors.iter().enumerate() {
            for (b, pb) in projectors.iter().enumerate() {
                let tr = pa.matrix().trace_product(pb.matrix()).unwrap();
                let expect = if a == b { 1.0 } else { 0.0 };
                check((tr.re - expect).abs() <= 1e-12 && tr.im.abs() <= 1e-12, || {
                    format!("d={d}: overlap of projectors {a} and {b} is {tr}")
                })?;
            }
            sum = &sum + pa.matrix();
        }
        let diff = (&sum - &ComplexMatrix64::identity(n)).max_abs_entry();
        check(diff <= 1e-12, || format!("d={d}: completeness off by {diff:e}"))?;
    }
    Ok(())
}

fn symmetry(cfg: &SelftestConfig) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for d in 2..=cfg.d_max {
        let plain = fam_state(&random_fam_weights::<f64, _>(d, &mut rng));
        let extended = fam_g_state(&random_fam_g_weights::<f64, _>(d, &mut rng));
        let raw: Vec<f64> = (0..2 * d).map(|_| rng.gen_range(0.0..1.0)).collect();
        let total: f64 = raw.iter().sum();
        let coeffs: Vec<f64> = raw.into_iter().map(|v| v / total).collect();
        let uu = fam_uu_state(
            &FamUUWeights::new(d, coeffs[..d].to_vec(), coeffs[d..].to_vec()).unwrap(),
        );
        for _ in 0..100 {
            let x = random_phase_vector::<f64, _>(d, &mut rng);
            for (label, m) in
                [("fam", plain.matrix()), ("famg", extended.matrix()), ("famuu", &uu)]
            {
                let residual = check_symmetry(m, &x).unwrap();
                check(residual <= 1e-12, || format!("d={d} {label}: residual {residual:e}"))?;
            }
        }
    }
    Ok(())
}

fn reduction_identity(cfg: &SelftestConfig) -> Result<(), String> {
    for d in 2..=cfg.d_max {
        let red = reduction_witness::<f64>(d).unwrap();
        let full = witness_matrix::<f64>(&WitnessSpec::identity(d, d - 1).unwrap());
        let diff = (&red - &full).max_abs_entry();
        check(diff <= 1e-12, || format!("d={d}: identity off by {diff:e}"))?;
        let min = red
            .partial_transpose_b(d)
            .unwrap()
            .hermitian_eigenvalues()
            .map_err(|e| e.to_string())?[0];
        check(min >= -cfg.tol_eig, || format!("d={d}: PT min eigenvalue {min:e}"))?;
    }
    Ok(())
}

fn oracle_equivalence(cfg: &SelftestConfig) -> Result<(), String> {
    let settings = if cfg.inject_eig_fault {
        JacobiSettings { rel_tol: 1e10, ..Default::default() }
    } else {
        JacobiSettings::default()
    };
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x0eac1e);
    for d in 2..=cfg.d_max {
        // The maximally entangled point is NPT in closed form and must come
        // out NPT numerically; included as a deterministic tripwire.
        let mut cases = vec![{
            let mut lambdas = vec![0.0; d];
            lambdas[d - 1] = 1.0;
            belldiag::bell::FamWeights::new(d, lambdas).unwrap()
        }];
        cases.extend((0..200).map(|_| random_fam_weights::<f64, _>(d, &mut rng)));
        for w in cases {
            let analytic = ppt_analytic(&w).satisfied;
            let pt = fam_state(&w).matrix().partial_transpose_b(d).unwrap();
            let min_eig =
                pt.hermitian_eigenvalues_with(&settings).map_err(|e| e.to_string())?[0];
            let numeric = min_eig >= -cfg.tol_eig;
            if analytic != numeric {
                check(min_eig.abs() <= 1e-8, || {
                    format!(
                        "d={d}: analytic {analytic} vs numeric {numeric} at margin {min_eig:e} for {:?}",
                        w.lambdas()
                    )
                })?;
            }
        }
    }
    Ok(())
}

fn witness_positivity(cfg: &SelftestConfig) -> Result<(), String> {
    for d in 2..=cfg.d_max.min(5) {
        for k in 1..d {
            let spec = WitnessSpec::identity(d, k).unwrap();
            let min = product_positivity_check::<f64>(&spec, 10_000, cfg.seed + (d * 10 + k) as u64);
            check(min >= -1e-12, || format!("d={d} k={k}: product minimum {min:e}"))?;
            let min_eig = witness_matrix::<f64>(&spec)
                .hermitian_eigenvalues()
                .map_err(|e| e.to_string())?[0];
            check(min_eig < -1e-12, || format!("d={d} k={k}: no negative eigenvalue"))?;
        }
    }
    Ok(())
}

fn decomposition(cfg: &SelftestConfig) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0xdec0);
    for d in 2..=cfg.d_max.min(5) {
        for _ in 0..20 {
            let w = random_separable_fam_weights::<f64, _>(d, &mut rng);
            let ensemble = separable_decomposition(&FamGWeights64::from(w.clone()))
                .map_err(|e| e.to_string())?;
            let err = ensemble.max_error_vs(fam_state(&w).matrix());
            check(err <= 1e-10, || format!("d={d}: reconstruction error {err:e}"))?;
            for term in ensemble.terms() {
                check(term.weight >= 0.0 && term.ket_a.is_normalized(1e-12) && term.ket_b.is_normalized(1e-12),
                    || format!("d={d}: malformed ensemble term"))?;
            }
        }
    }
    Ok(())
}
