//! Operators and state families on C^d ⊗ C^d: shift and phase unitaries, the
//! maximally entangled projector, the Bell basis it generates, the shifted
//! diagonal projectors Π_n, and the weight-parameterized state families built
//! from them.

use num_complex::Complex;
use num_traits::One;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::scalar::Real;

/// Hermitian, unit-trace, positive semidefinite operator on C^d ⊗ C^d.
///
/// Hermiticity and trace are validated on construction; positivity is a
/// property of the constructors in this module and is checked numerically
/// where a caller needs a certificate.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix<T> {
    local_dim: usize,
    mat: ComplexMatrix<T>,
}

impl<T: Real> DensityMatrix<T> {
    pub fn new(mat: ComplexMatrix<T>, local_dim: usize) -> Result<Self> {
        let n = local_dim * local_dim;
        if mat.rows() != n || mat.cols() != n {
            return Err(Error::DimMismatch {
                expected: format!("{n}x{n} for local dimension {local_dim}"),
                got: format!("{}x{}", mat.rows(), mat.cols()),
            });
        }
        let defect = mat.hermiticity_defect();
        if defect > T::TOL_EXACT {
            return Err(Error::NotHermitian { defect: defect.to_f64().unwrap_or(f64::NAN) });
        }
        let tr = mat.trace();
        if (tr.re - T::one()).abs() > T::TOL_EXACT || tr.im.abs() > T::TOL_EXACT {
            return Err(Error::InvalidWeights { reason: format!("trace {} is not 1", tr.re) });
        }
        Ok(Self { local_dim, mat })
    }

    pub fn local_dim(&self) -> usize {
        self.local_dim
    }

    pub fn matrix(&self) -> &ComplexMatrix<T> {
        &self.mat
    }

    pub fn into_matrix(self) -> ComplexMatrix<T> {
        self.mat
    }

    /// Smallest eigenvalue; negative beyond tolerance means not a state.
    pub fn min_eigenvalue(&self) -> Result<T> {
        Ok(self.mat.hermitian_eigenvalues()?[0])
    }
}

/// Probability table p_mn over the d² Bell projectors.
#[derive(Debug, Clone, PartialEq)]
pub struct BellSpectrum<T> {
    d: usize,
    p: Vec<T>, // row-major d×d, p[m*d + n]
}

impl<T: Real> BellSpectrum<T> {
    pub fn new(d: usize, p: Vec<T>) -> Result<Self> {
        if d < 2 {
            return Err(Error::BadDimension { d, requirement: "d >= 2" });
        }
        if p.len() != d * d {
            return Err(Error::InvalidWeights {
                reason: format!("expected {} weights, got {}", d * d, p.len()),
            });
        }
        validate_simplex(&p)?;
        Ok(Self { d, p })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn weight(&self, m: usize, n: usize) -> T {
        self.p[m * self.d + n]
    }

    pub fn weights(&self) -> &[T] {
        &self.p
    }
}

/// Simplex weights (λ_1, ..., λ_d) for the mixture
/// ρ = Σ_{i=1}^{d-1} λ_i Π_i + λ_d P⁺.
#[derive(Debug, Clone, PartialEq)]
pub struct FamWeights<T> {
    d: usize,
    lambdas: Vec<T>, // [λ_1, ..., λ_d]
}

impl<T: Real> FamWeights<T> {
    pub fn new(d: usize, lambdas: Vec<T>) -> Result<Self> {
        if d < 2 {
            return Err(Error::BadDimension { d, requirement: "d >= 2" });
        }
        if lambdas.len() != d {
            return Err(Error::InvalidWeights {
                reason: format!("expected {} weights, got {}", d, lambdas.len()),
            });
        }
        validate_simplex(&lambdas)?;
        Ok(Self { d, lambdas })
    }

    /// λ_i = 1/d for every i.
    pub fn uniform(d: usize) -> Result<Self> {
        let w = T::one() / T::from_index(d);
        Self::new(d, vec![w; d])
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// λ_i for i in 1..=d.
    pub fn lambda(&self, i: usize) -> T {
        assert!((1..=self.d).contains(&i), "weight index out of range");
        self.lambdas[i - 1]
    }

    pub fn lambda_d(&self) -> T {
        self.lambdas[self.d - 1]
    }

    /// All weights, ordered λ_1, ..., λ_d.
    pub fn lambdas(&self) -> &[T] {
        &self.lambdas
    }
}

/// Simplex weights (λ_0, λ_1, ..., λ_d): the family above extended by a
/// λ_0 Π_0 term.
#[derive(Debug, Clone, PartialEq)]
pub struct FamGWeights<T> {
    d: usize,
    lambdas: Vec<T>, // [λ_0, ..., λ_d]
}

impl<T: Real> FamGWeights<T> {
    pub fn new(d: usize, lambdas: Vec<T>) -> Result<Self> {
        if d < 2 {
            return Err(Error::BadDimension { d, requirement: "d >= 2" });
        }
        if lambdas.len() != d + 1 {
            return Err(Error::InvalidWeights {
                reason: format!("expected {} weights, got {}", d + 1, lambdas.len()),
            });
        }
        validate_simplex(&lambdas)?;
        Ok(Self { d, lambdas })
    }

    /// λ_0 = ... = λ_{d-1} = (1 - λ_d)/d: the isotropic line.
    pub fn isotropic(d: usize, lambda_d: T) -> Result<Self> {
        if d < 2 {
            return Err(Error::BadDimension { d, requirement: "d >= 2" });
        }
        if lambda_d < T::zero() || lambda_d > T::one() {
            return Err(Error::ParamOutOfRange {
                reason: format!("lambda_d = {lambda_d} outside [0, 1]"),
            });
        }
        let shared = (T::one() - lambda_d) / T::from_index(d);
        let mut lambdas = vec![shared; d];
        lambdas.push(lambda_d);
        Self::new(d, lambdas)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// λ_i for i in 0..=d.
    pub fn lambda(&self, i: usize) -> T {
        assert!(i <= self.d, "weight index out of range");
        self.lambdas[i]
    }

    pub fn lambda_d(&self) -> T {
        self.lambdas[self.d]
    }

    /// All weights, ordered λ_0, ..., λ_d.
    pub fn lambdas(&self) -> &[T] {
        &self.lambdas
    }
}

impl<T: Real> From<FamWeights<T>> for FamGWeights<T> {
    /// Embed with λ_0 = 0.
    fn from(w: FamWeights<T>) -> Self {
        let mut lambdas = vec![T::zero()];
        lambdas.extend_from_slice(&w.lambdas);
        Self { d: w.d, lambdas }
    }
}

/// Coefficients (μ_m, ν_m) of the Hermitian operator
/// Σ_m μ_m Π_m + ν_m P_{m0}. Trace-normalized; positivity is deliberately
/// not an invariant of the type.
#[derive(Debug, Clone, PartialEq)]
pub struct FamUUWeights<T> {
    d: usize,
    mu: Vec<T>,
    nu: Vec<T>,
}

impl<T: Real> FamUUWeights<T> {
    pub fn new(d: usize, mu: Vec<T>, nu: Vec<T>) -> Result<Self> {
        if d < 2 {
            return Err(Error::BadDimension { d, requirement: "d >= 2" });
        }
        if mu.len() != d || nu.len() != d {
            return Err(Error::InvalidWeights {
                reason: format!("expected {d} mu and {d} nu coefficients, got {} and {}", mu.len(), nu.len()),
            });
        }
        let total: T = mu.iter().chain(nu.iter()).copied().sum();
        if (total - T::one()).abs() > T::TOL_EXACT {
            return Err(Error::InvalidWeights {
                reason: format!("coefficients sum to {total}, expected 1"),
            });
        }
        Ok(Self { d, mu, nu })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn mu(&self) -> &[T] {
        &self.mu
    }

    pub fn nu(&self) -> &[T] {
        &self.nu
    }
}

/// Phases x = (x_0, ..., x_{d-1}) of the diagonal unitary diag(e^{i x_k}).
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseVector<T> {
    x: Vec<T>,
}

impl<T: Real> PhaseVector<T> {
    pub fn new(x: Vec<T>) -> Result<Self> {
        if x.is_empty() {
            return Err(Error::BadDimension { d: 0, requirement: "at least one phase" });
        }
        if x.iter().any(|v| !v.is_finite()) {
            return Err(Error::ParamOutOfRange { reason: "phases must be finite".into() });
        }
        Ok(Self { x })
    }

    pub fn zero(d: usize) -> Self {
        Self { x: vec![T::zero(); d] }
    }

    pub fn d(&self) -> usize {
        self.x.len()
    }

    pub fn phases(&self) -> &[T] {
        &self.x
    }
}

fn validate_simplex<T: Real>(w: &[T]) -> Result<()> {
    if let Some(bad) = w.iter().find(|&&v| v < T::zero() || v.is_nan()) {
        return Err(Error::InvalidWeights { reason: format!("negative weight {bad}") });
    }
    let total: T = w.iter().copied().sum();
    if (total - T::one()).abs() > T::TOL_EXACT {
        return Err(Error::InvalidWeights { reason: format!("weights sum to {total}, expected 1") });
    }
    Ok(())
}

/// e^{2πi k/d} as a complex number, with k reduced mod d first.
fn root_of_unity<T: Real>(k: usize, d: usize) -> Complex<T> {
    let angle = T::TAU() * T::from_index(k % d) / T::from_index(d);
    Complex::from_polar(T::one(), angle)
}

/// Cyclic shift: S|k> = |k+1 mod d>.
pub fn shift_operator<T: Real>(d: usize) -> Result<ComplexMatrix<T>> {
    if d < 2 {
        return Err(Error::BadDimension { d, requirement: "d >= 2" });
    }
    let mut s = ComplexMatrix::zeros(d, d);
    for k in 0..d {
        s.set((k + 1) % d, k, Complex::one());
    }
    Ok(s)
}

/// Phase-and-shift unitary: U_mn|k> = e^{2πi mk/d} |k+n mod d>.
pub fn weyl_unitary<T: Real>(d: usize, m: usize, n: usize) -> Result<ComplexMatrix<T>> {
    if d < 2 {
        return Err(Error::BadDimension { d, requirement: "d >= 2" });
    }
    if m >= d || n >= d {
        return Err(Error::IndexOutOfRange { m, n, d });
    }
    let mut u = ComplexMatrix::zeros(d, d);
    for k in 0..d {
        u.set((k + n) % d, k, root_of_unity(m * k, d));
    }
    Ok(u)
}

/// Projector onto the canonical maximally entangled state,
/// (1/d) Σ_{i,j} |ii><jj|.
pub fn max_entangled<T: Real>(d: usize) -> Result<DensityMatrix<T>> {
    if d < 2 {
        return Err(Error::BadDimension { d, requirement: "d >= 2" });
    }
    let n = d * d;
    let inv_d = T::one() / T::from_index(d);
    let mut m = ComplexMatrix::zeros(n, n);
    for i in 0..d {
        for j in 0..d {
            m.set(i * d + i, j * d + j, Complex::new(inv_d, T::zero()));
        }
    }
    DensityMatrix::new(m, d)
}

/// Bell projector P_mn = (I ⊗ U_mn) P⁺ (I ⊗ U_mn)†.
pub fn bell_projector<T: Real>(d: usize, m: usize, n: usize) -> Result<DensityMatrix<T>> {
    let u = weyl_unitary::<T>(d, m, n)?;
    let plus = max_entangled::<T>(d)?;
    let lift = ComplexMatrix::identity(d).kron(&u);
    let rotated = lift.matmul(plus.matrix()).matmul(&lift.adjoint());
    DensityMatrix::new(rotated, d)
}

/// Shifted diagonal projector mixture Π_n = (1/d) Σ_i |i, i+n><i, i+n|.
pub fn pi_state<T: Real>(d: usize, n: usize) -> Result<DensityMatrix<T>> {
    if d < 2 {
        return Err(Error::BadDimension { d, requirement: "d >= 2" });
    }
    if n >= d {
        return Err(Error::IndexOutOfRange { m: 0, n, d });
    }
    let dim = d * d;
    let inv_d = T::one() / T::from_index(d);
    let mut m = ComplexMatrix::zeros(dim, dim);
    for i in 0..d {
        let idx = i * d + (i + n) % d;
        m.set(idx, idx, Complex::new(inv_d, T::zero()));
    }
    DensityMatrix::new(m, d)
}

/// Mixture ρ = Σ_{m,n} p_mn P_mn of the d² Bell projectors.
pub fn bell_diagonal<T: Real>(spec: &BellSpectrum<T>) -> DensityMatrix<T> {
    let d = spec.d();
    let n = d * d;
    let mut acc = ComplexMatrix::zeros(n, n);
    for m in 0..d {
        for nn in 0..d {
            let w = spec.weight(m, nn);
            if w == T::zero() {
                continue;
            }
            let p = bell_projector::<T>(d, m, nn).expect("indices in range");
            acc.add_assign_scaled(p.matrix(), w);
        }
    }
    DensityMatrix::new(acc, d).expect("convex mixture of states is a state")
}

/// ρ = Σ_{i=1}^{d-1} λ_i Π_i + λ_d P⁺.
pub fn fam_state<T: Real>(w: &FamWeights<T>) -> DensityMatrix<T> {
    let d = w.d();
    let n = d * d;
    let mut acc = ComplexMatrix::zeros(n, n);
    for i in 1..d {
        let pi = pi_state::<T>(d, i).expect("index in range");
        acc.add_assign_scaled(pi.matrix(), w.lambda(i));
    }
    let plus = max_entangled::<T>(d).expect("d >= 2");
    acc.add_assign_scaled(plus.matrix(), w.lambda_d());
    DensityMatrix::new(acc, d).expect("convex mixture of states is a state")
}

/// ρ = Σ_{i=0}^{d-1} λ_i Π_i + λ_d P⁺.
pub fn fam_g_state<T: Real>(w: &FamGWeights<T>) -> DensityMatrix<T> {
    let d = w.d();
    let n = d * d;
    let mut acc = ComplexMatrix::zeros(n, n);
    for i in 0..d {
        let pi = pi_state::<T>(d, i).expect("index in range");
        acc.add_assign_scaled(pi.matrix(), w.lambda(i));
    }
    let plus = max_entangled::<T>(d).expect("d >= 2");
    acc.add_assign_scaled(plus.matrix(), w.lambda_d());
    DensityMatrix::new(acc, d).expect("convex mixture of states is a state")
}

/// Hermitian unit-trace operator Σ_m (μ_m Π_m + ν_m P_{m0}).
///
/// Positivity is not guaranteed; check the spectrum to decide whether the
/// coefficients yield a state.
pub fn fam_uu_state<T: Real>(w: &FamUUWeights<T>) -> ComplexMatrix<T> {
    let d = w.d();
    let n = d * d;
    let mut acc = ComplexMatrix::zeros(n, n);
    for m in 0..d {
        let mu = w.mu()[m];
        if mu != T::zero() {
            let pi = pi_state::<T>(d, m).expect("index in range");
            acc.add_assign_scaled(pi.matrix(), mu);
        }
        let nu = w.nu()[m];
        if nu != T::zero() {
            let p = bell_projector::<T>(d, m, 0).expect("index in range");
            acc.add_assign_scaled(p.matrix(), nu);
        }
    }
    acc
}

/// ρ = (1-λ_d)/d² · I + λ_d P⁺.
pub fn isotropic_state<T: Real>(d: usize, lambda_d: T) -> Result<DensityMatrix<T>> {
    if d < 2 {
        return Err(Error::BadDimension { d, requirement: "d >= 2" });
    }
    if !(T::zero()..=T::one()).contains(&lambda_d) {
        return Err(Error::ParamOutOfRange { reason: format!("lambda_d = {lambda_d} outside [0, 1]") });
    }
    let n = d * d;
    let mut acc = ComplexMatrix::identity(n).scaled_real((T::one() - lambda_d) / T::from_index(n));
    let plus = max_entangled::<T>(d)?;
    acc.add_assign_scaled(plus.matrix(), lambda_d);
    DensityMatrix::new(acc, d)
}

/// Weight family generalizing the classic d=3 bound-entanglement states:
/// λ_1 = α/N, λ_{d-1} = ((d-1)²+1-α)/N, all other λ_i = (d-1)/N,
/// with N = (d-1)(2d-3)+1 and α in [0, (d-1)²+1].
pub fn horodecki_family<T: Real>(d: usize, alpha: T) -> Result<FamWeights<T>> {
    if d < 3 {
        return Err(Error::BadDimension { d, requirement: "d >= 3" });
    }
    let dm1 = T::from_index(d - 1);
    let alpha_max = dm1 * dm1 + T::one();
    if !(T::zero()..=alpha_max).contains(&alpha) {
        return Err(Error::ParamOutOfRange {
            reason: format!("alpha = {alpha} outside [0, {alpha_max}]"),
        });
    }
    let n = T::from_index((d - 1) * (2 * d - 3) + 1);
    let middle = dm1 / n;
    let mut lambdas = vec![middle; d];
    lambdas[0] = alpha / n;
    lambdas[d - 2] = (alpha_max - alpha) / n;
    FamWeights::new(d, lambdas)
}

/// Weight family pinned to the analytic PPT boundary:
/// (λ_1, λ_2, ..., λ_{d-2}, λ_{d-1}, λ_d) ∝ (ε, 1, ..., 1, 1/ε, 1),
/// normalized by d - 2 + ε + 1/ε so the weights sum to one.
pub fn epsilon_family<T: Real>(d: usize, epsilon: T) -> Result<FamWeights<T>> {
    if d < 3 {
        return Err(Error::BadDimension { d, requirement: "d >= 3" });
    }
    if !epsilon.is_finite() || epsilon <= T::zero() {
        return Err(Error::ParamOutOfRange { reason: format!("epsilon = {epsilon} must be > 0") });
    }
    let inv = T::one() / epsilon;
    let norm = T::from_index(d - 2) + epsilon + inv;
    let mut lambdas = vec![T::one() / norm; d];
    lambdas[0] = epsilon / norm;
    lambdas[d - 2] = inv / norm;
    FamWeights::new(d, lambdas)
}

/// Diagonal unitary diag(e^{i x_0}, ..., e^{i x_{d-1}}).
pub fn abelian_unitary<T: Real>(x: &PhaseVector<T>) -> ComplexMatrix<T> {
    let phases: Vec<Complex<T>> =
        x.phases().iter().map(|&p| Complex::from_polar(T::one(), p)).collect();
    ComplexMatrix::diag(&phases)
}

/// Residual norm of [U_x ⊗ conj(U_x), ρ]; vanishes for every state in the
/// families above, for every phase vector.
pub fn check_symmetry<T: Real>(rho: &ComplexMatrix<T>, x: &PhaseVector<T>) -> Result<T> {
    let d = x.d();
    let n = d * d;
    if rho.rows() != n || rho.cols() != n {
        return Err(Error::DimMismatch {
            expected: format!("{n}x{n} for {d} phases"),
            got: format!("{}x{}", rho.rows(), rho.cols()),
        });
    }
    let u = abelian_unitary(x);
    let lifted = u.kron(&u.conj());
    lifted.commutator_norm(rho)
}
