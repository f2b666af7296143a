//! Cyclic Jacobi eigensolver for dense complex Hermitian matrices.
//!
//! Each rotation annihilates one off-diagonal pair with a complex plane
//! rotation; sweeps repeat until the off-diagonal Frobenius mass drops below
//! a small multiple of the matrix norm. Matrices here are at most 64×64, so
//! robustness wins over speed.

use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::scalar::Real;

/// Convergence controls for the Jacobi iteration.
#[derive(Debug, Clone, Copy)]
pub struct JacobiSettings<T> {
    /// Stop once off-diagonal Frobenius mass <= `rel_tol` * ||M||_F.
    pub rel_tol: T,
    pub max_sweeps: usize,
}

impl<T: Real> Default for JacobiSettings<T> {
    fn default() -> Self {
        Self { rel_tol: T::JACOBI_REL_TOL, max_sweeps: 128 }
    }
}

impl<T: Real> ComplexMatrix<T> {
    /// Ascending eigenvalues of a Hermitian matrix.
    pub fn hermitian_eigenvalues(&self) -> Result<Vec<T>> {
        self.hermitian_eigenvalues_with(&JacobiSettings::default())
    }

    /// Ascending eigenvalues with explicit convergence controls.
    pub fn hermitian_eigenvalues_with(&self, settings: &JacobiSettings<T>) -> Result<Vec<T>> {
        jacobi(self, settings, false).map(|(vals, _)| vals)
    }

    /// Ascending eigenvalues together with a unitary whose columns are the
    /// matching eigenvectors.
    pub fn hermitian_eigensystem(&self) -> Result<(Vec<T>, ComplexMatrix<T>)> {
        let (vals, vecs) = jacobi(self, &JacobiSettings::default(), true)?;
        Ok((vals, vecs.expect("eigenvectors requested")))
    }
}

fn jacobi<T: Real>(
    m: &ComplexMatrix<T>,
    settings: &JacobiSettings<T>,
    with_vectors: bool,
) -> Result<(Vec<T>, Option<ComplexMatrix<T>>)> {
    if !m.is_square() {
        return Err(Error::DimMismatch {
            expected: "square matrix".into(),
            got: format!("{}x{}", m.rows(), m.cols()),
        });
    }
    let defect = m.hermiticity_defect();
    if defect > T::TOL_EXACT {
        return Err(Error::NotHermitian { defect: defect.to_f64().unwrap_or(f64::NAN) });
    }

    let n = m.rows();
    // Work on an exactly Hermitian copy: upper triangle wins, diagonal realified.
    let mut a = vec![Complex::<T>::zero(); n * n];
    for i in 0..n {
        a[i * n + i] = Complex::new(m[(i, i)].re, T::zero());
        for j in (i + 1)..n {
            let v = m[(i, j)];
            a[i * n + j] = v;
            a[j * n + i] = v.conj();
        }
    }
    let mut vecs = with_vectors.then(|| ComplexMatrix::<T>::identity(n));

    let norm_f = frobenius(&a);
    if norm_f > T::zero() {
        let target = settings.rel_tol * norm_f;
        let mut converged = false;
        for _sweep in 0..settings.max_sweeps {
            if off_diagonal_mass(&a, n) <= target {
                converged = true;
                break;
            }
            // Entries below tau are skipped; if everything is skipped the
            // total off-diagonal mass is already below target.
            let tau = target / T::from_index(n);
            for p in 0..n {
                for q in (p + 1)..n {
                    rotate(&mut a, vecs.as_mut(), n, p, q, tau);
                }
            }
        }
        if !converged && off_diagonal_mass(&a, n) > target {
            return Err(Error::NoConvergence { sweeps: settings.max_sweeps });
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        a[i * n + i].re.partial_cmp(&a[j * n + j].re).expect("eigenvalues are finite")
    });
    let values: Vec<T> = order.iter().map(|&i| a[i * n + i].re).collect();
    let vectors = vecs.map(|v| {
        let mut sorted = ComplexMatrix::zeros(n, n);
        for (new_col, &old_col) in order.iter().enumerate() {
            for row in 0..n {
                sorted.set(row, new_col, v[(row, old_col)]);
            }
        }
        sorted
    });
    Ok((values, vectors))
}

fn frobenius<T: Real>(a: &[Complex<T>]) -> T {
    a.iter().map(|e| e.norm_sqr()).sum::<T>().sqrt()
}

fn off_diagonal_mass<T: Real>(a: &[Complex<T>], n: usize) -> T {
    let mut acc = T::zero();
    for i in 0..n {
        for j in (i + 1)..n {
            acc += a[i * n + j].norm_sqr();
        }
    }
    (acc + acc).sqrt()
}

/// Annihilate a[p][q] with the plane rotation that keeps the matrix Hermitian.
fn rotate<T: Real>(
    a: &mut [Complex<T>],
    vecs: Option<&mut ComplexMatrix<T>>,
    n: usize,
    p: usize,
    q: usize,
    tau: T,
) {
    let apq = a[p * n + q];
    let mag = apq.norm();
    if mag <= tau {
        return;
    }
    let u = apq.unscale(mag); // unit phase of the pivot
    let theta = (a[q * n + q].re - a[p * n + p].re) / (mag + mag);
    let sign = if theta < T::zero() { -T::one() } else { T::one() };
    let t = -sign / (theta.abs() + (T::one() + theta * theta).sqrt());
    let c = T::one() / (T::one() + t * t).sqrt();
    let s = t * c;

    let minus_su = u.scale(-s);
    let s_uconj = u.conj().scale(s);
    for j in 0..n {
        let hjp = a[j * n + p];
        let hjq = a[j * n + q];
        a[j * n + p] = hjp.scale(c) + hjq * s_uconj;
        a[j * n + q] = hjp * minus_su + hjq.scale(c);
    }
    let su = u.scale(s);
    let minus_s_uconj = u.conj().scale(-s);
    for j in 0..n {
        let hpj = a[p * n + j];
        let hqj = a[q * n + j];
        a[p * n + j] = hpj.scale(c) + hqj * su;
        a[q * n + j] = hpj * minus_s_uconj + hqj.scale(c);
    }
    a[p * n + q] = Complex::zero();
    a[q * n + p] = Complex::zero();
    a[p * n + p] = Complex::new(a[p * n + p].re, T::zero());
    a[q * n + q] = Complex::new(a[q * n + q].re, T::zero());

    if let Some(v) = vecs {
        for j in 0..n {
            let vjp = v[(j, p)];
            let vjq = v[(j, q)];
            v.set(j, p, vjp.scale(c) + vjq * s_uconj);
            v.set(j, q, vjp * minus_su + vjq.scale(c));
        }
    }
}
