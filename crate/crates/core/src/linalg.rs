//! Dense complex and Hermitian matrix primitives.
//!
//! Everything here is backed by `nalgebra`. Hermitian matrices are stored
//! exactly self-adjoint: every constructor symmetrizes, so `H == H*` holds
//! bit for bit.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::{DMatrix, SymmetricEigen, SVD};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tol::{scaled, ToleranceConfig};

/// Dense `n x n` complex matrix with finite entries.
#[derive(Clone, PartialEq)]
pub struct ComplexSquareMatrix(DMatrix<Complex64>);

impl fmt::Debug for ComplexSquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ComplexSquareMatrix{}", self.0)
    }
}

impl ComplexSquareMatrix {
    pub fn new(m: DMatrix<Complex64>) -> Result<Self> {
        if m.nrows() != m.ncols() {
            return Err(Error::NotSquare { rows: m.nrows(), cols: m.ncols() });
        }
        if m.nrows() == 0 {
            return Err(Error::EmptyInput);
        }
        if m.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self(m))
    }

    /// Builds a matrix from row-major entries.
    pub fn from_row_slice(n: usize, entries: &[Complex64]) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch { expected: n * n, found: entries.len() });
        }
        Self::new(DMatrix::from_row_slice(n, n, entries))
    }

    /// Builds `re + i*im` from two real row-major arrays.
    pub fn from_parts(n: usize, re: &[f64], im: &[f64]) -> Result<Self> {
        if re.len() != im.len() {
            return Err(Error::DimensionMismatch { expected: re.len(), found: im.len() });
        }
        let entries: Vec<Complex64> =
            re.iter().zip(im).map(|(&a, &b)| Complex64::new(a, b)).collect();
        Self::from_row_slice(n, &entries)
    }

    pub fn identity(n: usize) -> Self {
        Self(DMatrix::identity(n, n))
    }

    pub fn zeros(n: usize) -> Self {
        Self(DMatrix::zeros(n, n))
    }

    /// `z * I_n`.
    pub fn scalar(n: usize, z: Complex64) -> Self {
        Self(DMatrix::from_diagonal_element(n, n, z))
    }

    pub(crate) fn from_raw(m: DMatrix<Complex64>) -> Self {
        debug_assert_eq!(m.nrows(), m.ncols());
        Self(m)
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    pub fn as_matrix(&self) -> &DMatrix<Complex64> {
        &self.0
    }

    pub fn into_matrix(self) -> DMatrix<Complex64> {
        self.0
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.0[(i, j)]
    }

    pub fn conjugate_transpose(&self) -> Self {
        Self(self.0.adjoint())
    }

    /// Frobenius norm.
    pub fn norm(&self) -> f64 {
        self.0.norm()
    }

    pub fn scale(&self, z: Complex64) -> Self {
        Self(&self.0 * z)
    }

    pub fn scale_real(&self, s: f64) -> Self {
        self.scale(Complex64::new(s, 0.0))
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn ensure_same_dim(&self, other: &Self) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: other.dim() });
        }
        Ok(())
    }

    /// `‖self − other‖_F`.
    pub fn distance(&self, other: &Self) -> f64 {
        (&self.0 - &other.0).norm()
    }

    /// Row-major entries.
    pub fn to_row_major(&self) -> Vec<Complex64> {
        let n = self.dim();
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| self.0[(i, j)]).collect()
    }

    /// Assembles `[[a, b], [c, d]]` from four square blocks of equal size.
    pub fn from_blocks(a: &Self, b: &Self, c: &Self, d: &Self) -> Result<Self> {
        let n = a.dim();
        for blk in [b, c, d] {
            a.ensure_same_dim(blk)?;
        }
        let mut m = DMatrix::zeros(2 * n, 2 * n);
        m.view_mut((0, 0), (n, n)).copy_from(&a.0);
        m.view_mut((0, n), (n, n)).copy_from(&b.0);
        m.view_mut((n, 0), (n, n)).copy_from(&c.0);
        m.view_mut((n, n), (n, n)).copy_from(&d.0);
        Ok(Self(m))
    }
}

impl Add for &ComplexSquareMatrix {
    type Output = ComplexSquareMatrix;
    fn add(self, rhs: Self) -> ComplexSquareMatrix {
        ComplexSquareMatrix(&self.0 + &rhs.0)
    }
}

impl Sub for &ComplexSquareMatrix {
    type Output = ComplexSquareMatrix;
    fn sub(self, rhs: Self) -> ComplexSquareMatrix {
        ComplexSquareMatrix(&self.0 - &rhs.0)
    }
}

impl Mul for &ComplexSquareMatrix {
    type Output = ComplexSquareMatrix;
    fn mul(self, rhs: Self) -> ComplexSquareMatrix {
        ComplexSquareMatrix(&self.0 * &rhs.0)
    }
}

impl Neg for &ComplexSquareMatrix {
    type Output = ComplexSquareMatrix;
    fn neg(self) -> ComplexSquareMatrix {
        ComplexSquareMatrix(-&self.0)
    }
}

/// A self-adjoint matrix. The stored entries satisfy `H[j][i] == conj(H[i][j])` exactly.
#[derive(Clone, PartialEq)]
pub struct HermitianMatrix(ComplexSquareMatrix);

impl fmt::Debug for HermitianMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HermitianMatrix{}", self.0 .0)
    }
}

impl HermitianMatrix {
    /// Validates that `m` is Hermitian within `eq_tol` (relative to its Frobenius norm) and symmetrizes it.
    pub fn new(m: ComplexSquareMatrix, tol: &ToleranceConfig) -> Result<Self> {
        let residual = m.distance(&m.conjugate_transpose());
        if residual > scaled(tol.eq_tol, m.norm()) {
            return Err(Error::NotHermitian { residual });
        }
        Ok(Self::symmetrize(&m))
    }

    /// `(M + M*) / 2` with the lower triangle mirrored from the upper one.
    pub fn symmetrize(m: &ComplexSquareMatrix) -> Self {
        let n = m.dim();
        let src = m.as_matrix();
        let mut out = DMatrix::zeros(n, n);
        for i in 0..n {
            out[(i, i)] = Complex64::new(src[(i, i)].re, 0.0);
            for j in (i + 1)..n {
                let z = (src[(i, j)] + src[(j, i)].conj()) * 0.5;
                out[(i, j)] = z;
                out[(j, i)] = z.conj();
            }
        }
        Self(ComplexSquareMatrix(out))
    }

    /// Real symmetric matrix from row-major entries.
    pub fn from_real_row_slice(n: usize, entries: &[f64], tol: &ToleranceConfig) -> Result<Self> {
        let z: Vec<Complex64> = entries.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        Self::new(ComplexSquareMatrix::from_row_slice(n, &z)?, tol)
    }

    pub fn from_real_diagonal(diag: &[f64]) -> Self {
        let n = diag.len();
        let mut m = DMatrix::zeros(n, n);
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = Complex64::new(d, 0.0);
        }
        Self(ComplexSquareMatrix(m))
    }

    pub fn identity(n: usize) -> Self {
        Self(ComplexSquareMatrix::identity(n))
    }

    pub fn zeros(n: usize) -> Self {
        Self(ComplexSquareMatrix::zeros(n))
    }

    /// `s * I_n`.
    pub fn scalar(n: usize, s: f64) -> Self {
        Self(ComplexSquareMatrix::scalar(n, Complex64::new(s, 0.0)))
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn as_complex(&self) -> &ComplexSquareMatrix {
        &self.0
    }

    pub fn into_complex(self) -> ComplexSquareMatrix {
        self.0
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.0.get(i, j)
    }

    pub fn norm(&self) -> f64 {
        self.0.norm()
    }

    pub fn scale(&self, s: f64) -> Self {
        Self(self.0.scale_real(s))
    }

    pub fn eigen(&self) -> Result<HermitianEigen> {
        hermitian_eigendecomposition(self)
    }

    /// Largest eigenvalue magnitude.
    pub fn spectral_norm(&self) -> Result<f64> {
        Ok(self.eigen()?.spectral_radius())
    }

    /// `Q* H Q`.
    pub fn congruence(&self, q: &ComplexSquareMatrix) -> Self {
        Self::symmetrize(&(&(&q.conjugate_transpose() * &self.0) * q))
    }
}

impl Add for &HermitianMatrix {
    type Output = HermitianMatrix;
    fn add(self, rhs: Self) -> HermitianMatrix {
        HermitianMatrix::symmetrize(&(&self.0 + &rhs.0))
    }
}

impl Sub for &HermitianMatrix {
    type Output = HermitianMatrix;
    fn sub(self, rhs: Self) -> HermitianMatrix {
        HermitianMatrix::symmetrize(&(&self.0 - &rhs.0))
    }
}

impl Neg for &HermitianMatrix {
    type Output = HermitianMatrix;
    fn neg(self) -> HermitianMatrix {
        HermitianMatrix(-&self.0)
    }
}

/// `H = V diag(values) V*` with eigenvalues ascending.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    pub vectors: ComplexSquareMatrix,
}

impl HermitianEigen {
    pub fn min(&self) -> f64 {
        self.values[0]
    }

    pub fn max(&self) -> f64 {
        *self.values.last().expect("non-empty spectrum")
    }

    pub fn spectral_radius(&self) -> f64 {
        self.min().abs().max(self.max().abs())
    }

    /// `V diag(f(λ)) V*`, symmetrized.
    pub fn map(&self, f: impl Fn(f64) -> f64) -> HermitianMatrix {
        let v = self.vectors.as_matrix();
        let mut scaled_v = v.clone();
        for (j, &lam) in self.values.iter().enumerate() {
            let s = f(lam);
            scaled_v.column_mut(j).scale_mut(s);
        }
        HermitianMatrix::symmetrize(&ComplexSquareMatrix::from_raw(scaled_v * v.adjoint()))
    }
}

pub fn conjugate_transpose(m: &ComplexSquareMatrix) -> ComplexSquareMatrix {
    m.conjugate_transpose()
}

pub fn hermitian_eigendecomposition(h: &HermitianMatrix) -> Result<HermitianEigen> {
    let n = h.dim();
    let eig = SymmetricEigen::try_new(h.0 .0.clone(), f64::EPSILON, 1000 * n.max(1))
        .ok_or(Error::ConvergenceFailure)?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    if order.iter().any(|&i| !eig.eigenvalues[i].is_finite()) {
        return Err(Error::ConvergenceFailure);
    }
    let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let mut vectors = DMatrix::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        vectors.set_column(dst, &eig.eigenvectors.column(src));
    }
    Ok(HermitianEigen { values, vectors: ComplexSquareMatrix(vectors) })
}

fn definiteness(h: &HermitianMatrix) -> Option<HermitianEigen> {
    hermitian_eigendecomposition(h).ok()
}

/// `λ_min > pd_tol · max|λ|`. Returns false if the eigensolver fails.
pub fn is_positive_definite(h: &HermitianMatrix, tol: &ToleranceConfig) -> bool {
    definiteness(h).is_some_and(|e| e.min() > scaled(tol.pd_tol, e.spectral_radius()))
}

/// `λ_min ≥ −psd_tol · max|λ|`. Returns false if the eigensolver fails.
pub fn is_positive_semidefinite(h: &HermitianMatrix, tol: &ToleranceConfig) -> bool {
    definiteness(h).is_some_and(|e| e.min() >= -scaled(tol.psd_tol, e.spectral_radius()))
}

/// Principal square root of a PSD matrix; tiny negative eigenvalues are clamped to zero.
pub fn hermitian_sqrt(h: &HermitianMatrix, tol: &ToleranceConfig) -> Result<HermitianMatrix> {
    let e = h.eigen()?;
    if e.min() < -scaled(tol.psd_tol, e.spectral_radius()) {
        return Err(Error::NotPsd { min_eigenvalue: e.min() });
    }
    Ok(e.map(|l| l.max(0.0).sqrt()))
}

fn require_pd(h: &HermitianMatrix, tol: &ToleranceConfig) -> Result<HermitianEigen> {
    let e = h.eigen()?;
    if e.min() <= scaled(tol.pd_tol, e.spectral_radius()) {
        return Err(Error::NotPd { min_eigenvalue: e.min() });
    }
    Ok(e)
}

pub fn hermitian_inverse(h: &HermitianMatrix, tol: &ToleranceConfig) -> Result<HermitianMatrix> {
    Ok(require_pd(h, tol)?.map(|l| 1.0 / l))
}

/// `H^{-1/2}` for positive definite `H`.
pub fn hermitian_inv_sqrt(h: &HermitianMatrix, tol: &ToleranceConfig) -> Result<HermitianMatrix> {
    Ok(require_pd(h, tol)?.map(|l| 1.0 / l.sqrt()))
}

/// `σ_min / σ_max`, or zero for the zero matrix.
pub fn reciprocal_condition(m: &DMatrix<Complex64>) -> Result<f64> {
    let svd = SVD::try_new(m.clone(), false, false, f64::EPSILON, 1000 * m.nrows().max(1))
        .ok_or(Error::ConvergenceFailure)?;
    let sv = &svd.singular_values;
    let max = sv.max();
    let min = sv.min();
    Ok(if max > 0.0 { min / max } else { 0.0 })
}

/// Inverse of a general square matrix, rejecting near-singular input.
pub fn complex_inverse(m: &ComplexSquareMatrix, tol: &ToleranceConfig) -> Result<ComplexSquareMatrix> {
    let rcond = reciprocal_condition(m.as_matrix())?;
    if rcond <= tol.pd_tol {
        return Err(Error::Singular { rcond });
    }
    m.0.clone()
        .lu()
        .try_inverse()
        .map(ComplexSquareMatrix)
        .ok_or(Error::Singular { rcond })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn tol() -> ToleranceConfig {
        ToleranceConfig::default()
    }

    fn real_herm(n: usize, v: &[f64]) -> HermitianMatrix {
        HermitianMatrix::from_real_row_slice(n, v, &tol()).unwrap()
    }

    fn assert_close(a: &ComplexSquareMatrix, b: &ComplexSquareMatrix, eps: f64) {
        assert!(a.distance(b) <= eps, "{a:?} vs {b:?}");
    }

    #[test]
    fn conjugate_transpose_examples() {
        let m = ComplexSquareMatrix::from_row_slice(1, &[c(0.0, 1.0)]).unwrap();
        assert_eq!(m.conjugate_transpose().get(0, 0), c(0.0, -1.0));
        assert_eq!(ComplexSquareMatrix::identity(3).conjugate_transpose(), ComplexSquareMatrix::identity(3));
        let m = ComplexSquareMatrix::from_parts(2, &[0.0, 1.0, 0.0, 0.0], &[0.0; 4]).unwrap();
        let expect = ComplexSquareMatrix::from_parts(2, &[0.0, 0.0, 1.0, 0.0], &[0.0; 4]).unwrap();
        assert_eq!(m.conjugate_transpose(), expect);
    }

    #[test]
    fn construction_rejects_bad_input() {
        let nan = ComplexSquareMatrix::from_row_slice(1, &[c(f64::NAN, 0.0)]);
        assert_eq!(nan.unwrap_err(), Error::NonFinite);
        assert!(matches!(
            ComplexSquareMatrix::new(DMatrix::zeros(2, 3)),
            Err(Error::NotSquare { .. })
        ));
        let skew = ComplexSquareMatrix::from_parts(2, &[1.0, 2.0, 0.0, 1.0], &[0.0; 4]).unwrap();
        assert!(matches!(HermitianMatrix::new(skew, &tol()), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn symmetrization_is_exact() {
        let m = ComplexSquareMatrix::from_row_slice(
            2,
            &[c(1.0, 1e-17), c(2.0, 3.0), c(2.0 + 1e-16, -3.0), c(4.0, 0.0)],
        )
        .unwrap();
        let h = HermitianMatrix::new(m, &tol()).unwrap();
        let hc = h.as_complex();
        assert_eq!(hc, &hc.conjugate_transpose());
    }

    #[test]
    fn eigendecomposition_examples() {
        let e = HermitianMatrix::from_real_diagonal(&[3.0, 1.0]).eigen().unwrap();
        assert_eq!(e.values, vec![1.0, 3.0]);
        let v = e.vectors.as_matrix();
        assert_abs_diff_eq!(v[(1, 0)].norm(), 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(v[(0, 1)].norm(), 1.0, epsilon = 1e-15);

        let e = real_herm(2, &[0.0, 1.0, 1.0, 0.0]).eigen().unwrap();
        assert_abs_diff_eq!(e.values[0], -1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(e.values[1], 1.0, epsilon = 1e-14);

        let e = HermitianMatrix::identity(5).eigen().unwrap();
        assert!(e.values.iter().all(|&l| (l - 1.0).abs() < 1e-15));
    }

    #[test]
    fn definiteness_examples() {
        let t = tol();
        assert!(is_positive_definite(&HermitianMatrix::from_real_diagonal(&[1.0, 2.0]), &t));
        assert!(!is_positive_definite(&HermitianMatrix::from_real_diagonal(&[1.0, 0.0]), &t));
        assert!(!is_positive_definite(&real_herm(2, &[2.0, 3.0, 3.0, 2.0]), &t));

        assert!(is_positive_semidefinite(&HermitianMatrix::from_real_diagonal(&[1.0, 0.0]), &t));
        assert!(!is_positive_semidefinite(&HermitianMatrix::from_real_diagonal(&[1.0, -1.0]), &t));
        assert!(is_positive_semidefinite(&HermitianMatrix::zeros(3), &t));
    }

    #[test]
    fn sqrt_examples() {
        let t = tol();
        let r = hermitian_sqrt(&HermitianMatrix::from_real_diagonal(&[4.0, 9.0]), &t).unwrap();
        assert_close(r.as_complex(), HermitianMatrix::from_real_diagonal(&[2.0, 3.0]).as_complex(), 1e-14);
        let r = hermitian_sqrt(&HermitianMatrix::identity(3), &t).unwrap();
        assert_close(r.as_complex(), &ComplexSquareMatrix::identity(3), 1e-14);
        let r = hermitian_sqrt(&real_herm(2, &[5.0, 4.0, 4.0, 5.0]), &t).unwrap();
        assert_close(r.as_complex(), real_herm(2, &[2.0, 1.0, 1.0, 2.0]).as_complex(), 1e-13);
        let err = hermitian_sqrt(&HermitianMatrix::from_real_diagonal(&[1.0, -1.0]), &t);
        assert!(matches!(err, Err(Error::NotPsd { .. })));
    }

    #[test]
    fn inverse_examples() {
        let t = tol();
        let r = hermitian_inverse(&HermitianMatrix::from_real_diagonal(&[2.0, 4.0]), &t).unwrap();
        assert_close(r.as_complex(), HermitianMatrix::from_real_diagonal(&[0.5, 0.25]).as_complex(), 1e-15);
        let r = hermitian_inverse(&HermitianMatrix::identity(2), &t).unwrap();
        assert_close(r.as_complex(), &ComplexSquareMatrix::identity(2), 1e-15);
        let r = hermitian_inverse(&real_herm(2, &[2.0, 1.0, 1.0, 1.0]), &t).unwrap();
        assert_close(r.as_complex(), real_herm(2, &[1.0, -1.0, -1.0, 2.0]).as_complex(), 1e-13);
        let err = hermitian_inverse(&HermitianMatrix::from_real_diagonal(&[1.0, 0.0]), &t);
        assert!(matches!(err, Err(Error::NotPd { .. })));
    }

    #[test]
    fn complex_inverse_examples() {
        let t = tol();
        let s = ComplexSquareMatrix::scalar(3, c(1.0, 1.0));
        let inv = complex_inverse(&s, &t).unwrap();
        assert_close(&inv, &ComplexSquareMatrix::scalar(3, c(0.5, -0.5)), 1e-15);
        let s = ComplexSquareMatrix::scalar(2, c(2.0, 1.0));
        let inv = complex_inverse(&s, &t).unwrap();
        assert_close(&inv, &ComplexSquareMatrix::scalar(2, c(0.4, -0.2)), 1e-15);
        let inv = complex_inverse(&ComplexSquareMatrix::identity(4), &t).unwrap();
        assert_close(&inv, &ComplexSquareMatrix::identity(4), 1e-15);

        let singular = ComplexSquareMatrix::from_parts(2, &[1.0, 2.0, 2.0, 4.0], &[0.0; 4]).unwrap();
        assert!(matches!(complex_inverse(&singular, &t), Err(Error::Singular { .. })));
    }
}
