//! Dense complex matrix and vector kernels: construction, tensor products,
//! partial transposition, traces and norms. No quantum semantics live here.
//!
//! Storage is row-major. Bipartite indices follow the convention
//! |i>_A ⊗ |j>_B ↦ flat index i*d + j throughout the crate.

use std::ops::{Add, Index, Mul, Sub};

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Dense complex matrix in row-major order.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<Complex<T>>,
}

impl<T: Real> ComplexMatrix<T> {
    /// Build a matrix from row-major entries.
    pub fn new(rows: usize, cols: usize, entries: Vec<Complex<T>>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must equal rows*cols");
        Self { rows, cols, entries }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![Complex::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = Complex::one();
        }
        m
    }

    pub fn diag(values: &[Complex<T>]) -> Self {
        let n = values.len();
        let mut m = Self::zeros(n, n);
        for (i, &v) in values.iter().enumerate() {
            m.entries[i * n + i] = v;
        }
        m
    }

    pub fn diag_real(values: &[T]) -> Self {
        let vals: Vec<Complex<T>> = values.iter().map(|&v| Complex::new(v, T::zero())).collect();
        Self::diag(&vals)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Complex<T>] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> Complex<T> {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Complex<T>) {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        self.entries[i * self.cols + j] = value;
    }

    pub fn add_assign_scaled(&mut self, other: &Self, factor: T) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "dimension mismatch");
        for (a, b) in self.entries.iter_mut().zip(other.entries.iter()) {
            *a += b.scale(factor);
        }
    }

    pub fn scaled(&self, factor: Complex<T>) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * factor).collect(),
        }
    }

    pub fn scaled_real(&self, factor: T) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e.scale(factor)).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.entries[j * self.rows + i] = self.entries[i * self.cols + j];
            }
        }
        out
    }

    pub fn conj(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e.conj()).collect(),
        }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.entries[j * self.rows + i] = self.entries[i * self.cols + j].conj();
            }
        }
        out
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self.entries[i * self.cols + k];
                if aik == Complex::zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out.entries[i * other.cols + j] += aik * other.entries[k * other.cols + j];
                }
            }
        }
        out
    }

    pub fn trace(&self) -> Complex<T> {
        assert!(self.is_square(), "trace requires a square matrix");
        (0..self.rows).map(|i| self.entries[i * self.cols + i]).sum()
    }

    pub fn frobenius_norm(&self) -> T {
        self.entries.iter().map(|e| e.norm_sqr()).sum::<T>().sqrt()
    }

    pub fn max_abs_entry(&self) -> T {
        self.entries.iter().map(|e| e.norm()).fold(T::zero(), T::max)
    }

    /// Largest entrywise deviation from the conjugate transpose.
    pub fn hermiticity_defect(&self) -> T {
        assert!(self.is_square(), "hermiticity requires a square matrix");
        let n = self.rows;
        let mut defect = T::zero();
        for i in 0..n {
            for j in i..n {
                let diff = self.entries[i * n + j] - self.entries[j * n + i].conj();
                defect = defect.max(diff.norm());
            }
        }
        defect
    }

    pub fn is_hermitian(&self, tol: T) -> bool {
        self.is_square() && self.hermiticity_defect() <= tol
    }

    /// Kronecker product: `(a ⊗ b)[i*rb + p][j*cb + q] = a[i][j] * b[p][q]`.
    pub fn kron(&self, other: &Self) -> Self {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = Self::zeros(rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let aij = self.entries[i * self.cols + j];
                if aij == Complex::zero() {
                    continue;
                }
                for p in 0..other.rows {
                    for q in 0..other.cols {
                        out.entries[(i * other.rows + p) * cols + (j * other.cols + q)] =
                            aij * other.entries[p * other.cols + q];
                    }
                }
            }
        }
        out
    }

    /// Transpose the second tensor factor of a d²×d² bipartite operator:
    /// `output[(i,l)][(k,j)] = input[(i,j)][(k,l)]`.
    pub fn partial_transpose_b(&self, d: usize) -> Result<Self> {
        let n = d * d;
        if self.rows != n || self.cols != n {
            return Err(Error::DimMismatch {
                expected: format!("{n}x{n} for local dimension {d}"),
                got: format!("{}x{}", self.rows, self.cols),
            });
        }
        let mut out = Self::zeros(n, n);
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    for l in 0..d {
                        out.entries[(i * d + l) * n + (k * d + j)] =
                            self.entries[(i * d + j) * n + (k * d + l)];
                    }
                }
            }
        }
        Ok(out)
    }

    /// Tr(a·b) without forming the product.
    pub fn trace_product(&self, other: &Self) -> Result<Complex<T>> {
        if self.cols != other.rows || other.cols != self.rows {
            return Err(Error::DimMismatch {
                expected: format!("{}x{} * {}x{} tracing to a square", self.rows, self.cols, self.cols, self.rows),
                got: format!("{}x{}", other.rows, other.cols),
            });
        }
        let mut acc = Complex::zero();
        for i in 0..self.rows {
            for j in 0..self.cols {
                acc += self.entries[i * self.cols + j] * other.entries[j * other.cols + i];
            }
        }
        Ok(acc)
    }

    /// Max-absolute-entry norm of the commutator ab − ba.
    pub fn commutator_norm(&self, other: &Self) -> Result<T> {
        if !self.is_square() || self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimMismatch {
                expected: format!("square {}x{}", self.rows, self.rows),
                got: format!("{}x{}", other.rows, other.cols),
            });
        }
        let ab = self.matmul(other);
        let ba = other.matmul(self);
        Ok((&ab - &ba).max_abs_entry())
    }

    /// Apply to a column vector.
    pub fn mul_ket(&self, v: &Ket<T>) -> Ket<T> {
        assert_eq!(self.cols, v.dim(), "dimension mismatch in matrix-vector product");
        let amps = (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self.entries[i * self.cols + j] * v.amplitudes[j])
                    .sum()
            })
            .collect();
        Ket::from_amplitudes(amps)
    }

    /// Column `j` as a ket.
    pub fn column(&self, j: usize) -> Ket<T> {
        assert!(j < self.cols, "column index out of bounds");
        Ket::from_amplitudes((0..self.rows).map(|i| self.entries[i * self.cols + j]).collect())
    }
}

impl<T: Real> Index<(usize, usize)> for ComplexMatrix<T> {
    type Output = Complex<T>;

    fn index(&self, (i, j): (usize, usize)) -> &Complex<T> {
        &self.entries[i * self.cols + j]
    }
}

impl<T: Real> Add for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;

    fn add(self, other: &ComplexMatrix<T>) -> ComplexMatrix<T> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "dimension mismatch");
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<T: Real> Sub for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;

    fn sub(self, other: &ComplexMatrix<T>) -> ComplexMatrix<T> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "dimension mismatch");
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

impl<T: Real> Mul for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;

    fn mul(self, other: &ComplexMatrix<T>) -> ComplexMatrix<T> {
        self.matmul(other)
    }
}

/// Complex column vector.
#[derive(Debug, Clone, PartialEq)]
pub struct Ket<T> {
    amplitudes: Vec<Complex<T>>,
}

impl<T: Real> Ket<T> {
    pub fn from_amplitudes(amplitudes: Vec<Complex<T>>) -> Self {
        Self { amplitudes }
    }

    /// Computational basis vector |k> in dimension `dim`.
    pub fn basis(dim: usize, k: usize) -> Self {
        assert!(k < dim, "basis index out of bounds");
        let mut amplitudes = vec![Complex::zero(); dim];
        amplitudes[k] = Complex::one();
        Self { amplitudes }
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex<T>] {
        &self.amplitudes
    }

    pub fn norm(&self) -> T {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum::<T>().sqrt()
    }

    pub fn normalized(&self) -> Self {
        let n = self.norm();
        assert!(n > T::zero(), "cannot normalize the zero vector");
        Self { amplitudes: self.amplitudes.iter().map(|a| a.unscale(n)).collect() }
    }

    pub fn is_normalized(&self, tol: T) -> bool {
        (self.norm() - T::one()).abs() <= tol
    }

    pub fn conj(&self) -> Self {
        Self { amplitudes: self.amplitudes.iter().map(|a| a.conj()).collect() }
    }

    /// <self|other>.
    pub fn inner(&self, other: &Self) -> Complex<T> {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch in inner product");
        self.amplitudes.iter().zip(&other.amplitudes).map(|(a, b)| a.conj() * b).sum()
    }

    /// |self> ⊗ |other>.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut amplitudes = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.amplitudes {
            for b in &other.amplitudes {
                amplitudes.push(a * b);
            }
        }
        Self { amplitudes }
    }

    /// Rank-one projector |self><self|.
    pub fn projector(&self) -> ComplexMatrix<T> {
        let n = self.dim();
        let mut m = ComplexMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, self.amplitudes[i] * self.amplitudes[j].conj());
            }
        }
        m
    }

    /// <self| M |self> for a square matrix of matching dimension.
    pub fn expectation(&self, m: &ComplexMatrix<T>) -> Complex<T> {
        assert_eq!(m.rows(), self.dim(), "dimension mismatch in expectation");
        self.inner(&m.mul_ket(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    type M = ComplexMatrix<f64>;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn r(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn kron_identity_times_identity() {
        let i2 = M::identity(2);
        assert_eq!(i2.kron(&i2), M::identity(4));
    }

    #[test]
    fn kron_scalar_factor() {
        let s = M::new(1, 1, vec![c(2.0, -1.0)]);
        let m = M::new(2, 2, vec![r(1.0), r(2.0), r(3.0), r(4.0)]);
        let out = s.kron(&m);
        assert_eq!(out.rows(), 2);
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(out[(i, j)], c(2.0, -1.0) * m[(i, j)]);
            }
        }
    }

    #[test]
    fn kron_of_diagonals() {
        let a = M::diag_real(&[1.0, 2.0]);
        let b = M::diag_real(&[3.0, 4.0]);
        assert_eq!(a.kron(&b), M::diag_real(&[3.0, 4.0, 6.0, 8.0]));
    }

    #[test]
    fn kron_associativity_exact_on_dyadic_entries() {
        // Small-integer entries keep every product exact in floating point,
        // so associativity holds entrywise with no tolerance.
        let a = M::new(2, 2, vec![c(1.0, 2.0), r(0.0), c(-3.0, 1.0), r(4.0)]);
        let b = M::new(2, 2, vec![r(2.0), c(0.0, 5.0), r(-1.0), c(7.0, -2.0)]);
        let d = M::new(2, 2, vec![c(3.0, -1.0), r(0.5), r(8.0), c(0.0, -4.0)]);
        assert_eq!(a.kron(&b).kron(&d), a.kron(&b.kron(&d)));
    }

    #[test]
    fn partial_transpose_is_an_involution() {
        let d = 3;
        let n = d * d;
        let entries: Vec<Complex64> = (0..n * n).map(|k| c(k as f64, (2 * k) as f64)).collect();
        let m = M::new(n, n, entries);
        let pt = m.partial_transpose_b(d).unwrap();
        assert_eq!(pt.partial_transpose_b(d).unwrap(), m);
        // Trace is preserved exactly (a permutation of diagonal entries).
        assert_eq!(pt.trace(), m.trace());
    }

    #[test]
    fn partial_transpose_rejects_wrong_dimension() {
        let m = M::identity(6);
        assert!(matches!(m.partial_transpose_b(3), Err(Error::DimMismatch { .. })));
    }

    #[test]
    fn partial_transpose_preserves_hermiticity() {
        let d = 2;
        let base = M::new(
            4,
            4,
            (0..16).map(|k| c(k as f64, (k % 3) as f64)).collect(),
        );
        let herm = &base + &base.adjoint();
        let pt = herm.partial_transpose_b(d).unwrap();
        assert!(pt.hermiticity_defect() <= 1e-12);
    }

    #[test]
    fn trace_product_against_full_product() {
        let a = M::new(2, 3, (0..6).map(|k| c(k as f64, 1.0)).collect());
        let b = M::new(3, 2, (0..6).map(|k| c(2.0 * k as f64, -1.0)).collect());
        let direct = a.matmul(&b).trace();
        let fast = a.trace_product(&b).unwrap();
        assert!((direct - fast).norm() < 1e-12);
    }

    #[test]
    fn trace_product_identity_gives_trace() {
        let m = M::new(3, 3, (0..9).map(|k| c(k as f64, -(k as f64))).collect());
        let tr = M::identity(3).trace_product(&m).unwrap();
        assert!((tr - m.trace()).norm() < 1e-12);
    }

    #[test]
    fn trace_product_rejects_mismatched_shapes() {
        let a = M::identity(2);
        let b = M::identity(3);
        assert!(a.trace_product(&b).is_err());
    }

    #[test]
    fn trace_product_conjugation_symmetry() {
        let a = M::new(3, 3, (0..9).map(|k| c(k as f64, 0.5 * k as f64)).collect());
        let b = M::new(3, 3, (0..9).map(|k| c(-(k as f64), 1.0 + k as f64)).collect());
        let lhs = a.trace_product(&b).unwrap();
        let rhs = b.adjoint().trace_product(&a.adjoint()).unwrap().conj();
        assert!((lhs - rhs).norm() < 1e-10);
    }

    #[test]
    fn commutator_norm_with_identity_and_self_vanishes() {
        let m = M::new(2, 2, vec![c(1.0, 1.0), r(2.0), c(0.0, -1.0), r(3.0)]);
        assert_eq!(m.commutator_norm(&M::identity(2)).unwrap(), 0.0);
        assert_eq!(m.commutator_norm(&m).unwrap(), 0.0);
    }

    #[test]
    fn commutator_norm_detects_noncommuting_pair() {
        // Shift matrix vs. the non-uniform phase diag(1, i).
        let shift = M::new(2, 2, vec![r(0.0), r(1.0), r(1.0), r(0.0)]);
        let phase = M::diag(&[r(1.0), c(0.0, 1.0)]);
        let norm = shift.commutator_norm(&phase).unwrap();
        assert!(norm >= 0.9, "expected a clearly nonzero commutator, got {norm}");
    }

    #[test]
    fn commutator_norm_rejects_mismatched_dimensions() {
        let a = M::identity(2);
        let b = M::identity(3);
        assert!(a.commutator_norm(&b).is_err());
    }

    #[test]
    fn ket_tensor_and_projector() {
        let a = Ket::<f64>::basis(2, 0);
        let b = Ket::<f64>::basis(2, 1);
        let ab = a.tensor(&b);
        assert_eq!(ab.amplitudes()[1], r(1.0));
        let p = ab.projector();
        assert_eq!(p[(1, 1)], r(1.0));
        assert_eq!(p.trace(), r(1.0));
    }

    #[test]
    fn ket_normalization() {
        let v = Ket::from_amplitudes(vec![c(3.0, 0.0), c(0.0, 4.0)]);
        assert!((v.norm() - 5.0).abs() < 1e-15);
        assert!(v.normalized().is_normalized(1e-15));
    }

    #[test]
    fn f32_kernels_smoke() {
        let a = ComplexMatrix::<f32>::diag_real(&[1.0, 2.0]);
        let b = ComplexMatrix::<f32>::diag_real(&[3.0, 4.0]);
        assert_eq!(a.kron(&b), ComplexMatrix::<f32>::diag_real(&[3.0, 4.0, 6.0, 8.0]));
    }
}
