//! Toeplitz (Cartesian) decomposition, the accretive-dissipative cone and
//! the extended Loewner order.

use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{
    complex_inverse, hermitian_eigendecomposition, is_positive_definite, ComplexSquareMatrix,
    HermitianMatrix,
};
use crate::tol::{scaled, ToleranceConfig};

/// `T = real + i·imag` with both parts Hermitian.
#[derive(Debug, Clone, PartialEq)]
pub struct ToeplitzParts {
    pub real: HermitianMatrix,
    pub imag: HermitianMatrix,
}

impl ToeplitzParts {
    pub fn new(real: HermitianMatrix, imag: HermitianMatrix) -> Result<Self> {
        real.as_complex().ensure_same_dim(imag.as_complex())?;
        Ok(Self { real, imag })
    }

    pub fn recompose(&self) -> ComplexSquareMatrix {
        let i = Complex64::new(0.0, 1.0);
        self.real.as_complex() + &self.imag.as_complex().scale(i)
    }
}

pub fn toeplitz_decompose(t: &ComplexSquareMatrix) -> ToeplitzParts {
    // (T − T*)/(2i) is the Hermitian part of −iT.
    let minus_i = Complex64::new(0.0, -1.0);
    ToeplitzParts {
        real: HermitianMatrix::symmetrize(t),
        imag: HermitianMatrix::symmetrize(&t.scale(minus_i)),
    }
}

pub fn is_accretive_dissipative(t: &ComplexSquareMatrix, tol: &ToleranceConfig) -> bool {
    let parts = toeplitz_decompose(t);
    is_positive_definite(&parts.real, tol) && is_positive_definite(&parts.imag, tol)
}

/// A matrix whose Toeplitz real and imaginary parts are both positive definite.
#[derive(Debug, Clone, PartialEq)]
pub struct AccretiveDissipativeMatrix {
    matrix: ComplexSquareMatrix,
    parts: ToeplitzParts,
}

impl AccretiveDissipativeMatrix {
    pub fn new(matrix: ComplexSquareMatrix, tol: &ToleranceConfig) -> Result<Self> {
        let parts = toeplitz_decompose(&matrix);
        Self::checked(matrix, parts, tol)
    }

    /// `real + i·imag`.
    pub fn from_parts(real: HermitianMatrix, imag: HermitianMatrix, tol: &ToleranceConfig) -> Result<Self> {
        let parts = ToeplitzParts::new(real, imag)?;
        let matrix = parts.recompose();
        Self::checked(matrix, parts, tol)
    }

    /// `z·I_n`; accretive-dissipative iff both components of `z` are positive.
    pub fn scalar(n: usize, z: Complex64, tol: &ToleranceConfig) -> Result<Self> {
        Self::new(ComplexSquareMatrix::scalar(n, z), tol)
    }

    fn checked(matrix: ComplexSquareMatrix, parts: ToeplitzParts, tol: &ToleranceConfig) -> Result<Self> {
        if !(is_positive_definite(&parts.real, tol) && is_positive_definite(&parts.imag, tol)) {
            return Err(Error::NotAccretiveDissipative);
        }
        Ok(Self { matrix, parts })
    }

    pub fn matrix(&self) -> &ComplexSquareMatrix {
        &self.matrix
    }

    pub fn parts(&self) -> &ToeplitzParts {
        &self.parts
    }

    pub fn real(&self) -> &HermitianMatrix {
        &self.parts.real
    }

    pub fn imag(&self) -> &HermitianMatrix {
        &self.parts.imag
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn into_matrix(self) -> ComplexSquareMatrix {
        self.matrix
    }

    pub fn ensure_same_dim(&self, other: &Self) -> Result<()> {
        self.matrix.ensure_same_dim(&other.matrix)
    }
}

/// Loewner relation between two Hermitian matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PartOrder {
    Equal,
    GreaterEq,
    LessEq,
    Incomparable,
}

impl fmt::Display for PartOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PartOrder::Equal => "=",
            PartOrder::GreaterEq => ">=",
            PartOrder::LessEq => "<=",
            PartOrder::Incomparable => "incomparable",
        })
    }
}

/// Outcome of comparing one pair of Hermitian parts, with the spectrum of
/// their difference as evidence.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PartWitness {
    pub order: PartOrder,
    /// The difference is positive (or negative) definite, not merely semidefinite.
    pub strict: bool,
    pub min_eigenvalue: f64,
    pub max_eigenvalue: f64,
    /// Largest spectral norm of the two operands; the eigenvalue thresholds are relative to it.
    pub scale: f64,
}

impl PartWitness {
    pub fn is_ge(&self) -> bool {
        matches!(self.order, PartOrder::Equal | PartOrder::GreaterEq)
    }

    pub fn is_le(&self) -> bool {
        matches!(self.order, PartOrder::Equal | PartOrder::LessEq)
    }

    fn zero() -> Self {
        Self { order: PartOrder::Equal, strict: false, min_eigenvalue: 0.0, max_eigenvalue: 0.0, scale: 0.0 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrderTag {
    Equal,
    GreaterEq,
    LessEq,
    StrictGreater,
    StrictLess,
    Incomparable,
}

impl fmt::Display for OrderTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderTag::Equal => "Equal",
            OrderTag::GreaterEq => "GreaterEq",
            OrderTag::LessEq => "LessEq",
            OrderTag::StrictGreater => "StrictGreater",
            OrderTag::StrictLess => "StrictLess",
            OrderTag::Incomparable => "Incomparable",
        })
    }
}

/// Extended Loewner relation between two complex matrices.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OrderRelation {
    pub tag: OrderTag,
    pub real: PartWitness,
    pub imag: PartWitness,
}

impl OrderRelation {
    fn combine(real: PartWitness, imag: PartWitness) -> Self {
        use PartOrder::*;
        let tag = match (real.order, imag.order) {
            (Equal, Equal) => OrderTag::Equal,
            (Incomparable, _) | (_, Incomparable) => OrderTag::Incomparable,
            (GreaterEq | Equal, GreaterEq | Equal) => {
                if real.strict && imag.strict {
                    OrderTag::StrictGreater
                } else {
                    OrderTag::GreaterEq
                }
            }
            (LessEq | Equal, LessEq | Equal) => {
                if real.strict && imag.strict {
                    OrderTag::StrictLess
                } else {
                    OrderTag::LessEq
                }
            }
            _ => OrderTag::Incomparable,
        };
        Self { tag, real, imag }
    }

    /// Left operand dominates: `Equal`, `GreaterEq` or `StrictGreater`.
    pub fn is_ge(&self) -> bool {
        matches!(self.tag, OrderTag::Equal | OrderTag::GreaterEq | OrderTag::StrictGreater)
    }

    pub fn is_le(&self) -> bool {
        matches!(self.tag, OrderTag::Equal | OrderTag::LessEq | OrderTag::StrictLess)
    }
}

impl fmt::Display for OrderRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} (real: {} [eig {:.6e} .. {:.6e}], imag: {} [eig {:.6e} .. {:.6e}])",
            self.tag,
            self.real.order,
            self.real.min_eigenvalue,
            self.real.max_eigenvalue,
            self.imag.order,
            self.imag.min_eigenvalue,
            self.imag.max_eigenvalue
        )
    }
}

/// Loewner comparison of `a` against `c`.
pub fn compare_loewner(a: &HermitianMatrix, c: &HermitianMatrix, tol: &ToleranceConfig) -> Result<PartWitness> {
    a.as_complex().ensure_same_dim(c.as_complex())?;
    let diff = a - c;
    let eig = hermitian_eigendecomposition(&diff)?;
    let scale = a.spectral_norm()?.max(c.spectral_norm()?);
    let (min, max) = (eig.min(), eig.max());
    let psd = scaled(tol.psd_tol, scale);
    let pd = scaled(tol.pd_tol, scale);
    let equal = diff.norm() <= tol.eq_tol * a.norm().max(c.norm()).max(1.0);
    let (order, strict) = if equal {
        (PartOrder::Equal, false)
    } else if min >= -psd {
        (PartOrder::GreaterEq, min > pd)
    } else if max <= psd {
        (PartOrder::LessEq, max < -pd)
    } else {
        (PartOrder::Incomparable, false)
    };
    Ok(PartWitness { order, strict, min_eigenvalue: min, max_eigenvalue: max, scale })
}

/// Loewner comparison of two Hermitian matrices reported as an [`OrderRelation`].
/// The imaginary witness is the trivial `Equal` of two zero parts and strictness follows the real part alone.
pub fn compare_hermitian(a: &HermitianMatrix, c: &HermitianMatrix, tol: &ToleranceConfig) -> Result<OrderRelation> {
    let real = compare_loewner(a, c, tol)?;
    let tag = match (real.order, real.strict) {
        (PartOrder::Equal, _) => OrderTag::Equal,
        (PartOrder::GreaterEq, true) => OrderTag::StrictGreater,
        (PartOrder::GreaterEq, false) => OrderTag::GreaterEq,
        (PartOrder::LessEq, true) => OrderTag::StrictLess,
        (PartOrder::LessEq, false) => OrderTag::LessEq,
        (PartOrder::Incomparable, _) => OrderTag::Incomparable,
    };
    Ok(OrderRelation { tag, real, imag: PartWitness::zero() })
}

/// Extended Loewner comparison: `T ≥ S` iff both Toeplitz parts are Loewner-ordered the same way.
pub fn compare_extended_order(
    t: &ComplexSquareMatrix,
    s: &ComplexSquareMatrix,
    tol: &ToleranceConfig,
) -> Result<OrderRelation> {
    t.ensure_same_dim(s)?;
    let tp = toeplitz_decompose(t);
    let sp = toeplitz_decompose(s);
    compare_parts(&tp, &sp, tol)
}

pub fn compare_parts(tp: &ToeplitzParts, sp: &ToeplitzParts, tol: &ToleranceConfig) -> Result<OrderRelation> {
    let real = compare_loewner(&tp.real, &sp.real, tol)?;
    let imag = compare_loewner(&tp.imag, &sp.imag, tol)?;
    Ok(OrderRelation::combine(real, imag))
}

const SQRT_MAX_ITER: usize = 100;

/// Principal square root, which for an accretive-dissipative matrix is the
/// unique accretive-dissipative root. Computed by the Denman–Beavers
/// iteration and validated against the residual and cone membership.
pub fn ad_sqrt(t: &AccretiveDissipativeMatrix, tol: &ToleranceConfig) -> Result<AccretiveDissipativeMatrix> {
    let n = t.dim();
    let mut y = t.matrix().clone();
    let mut z = ComplexSquareMatrix::identity(n);
    let mut converged = false;
    for _ in 0..SQRT_MAX_ITER {
        let y_inv = complex_inverse(&y, tol)?;
        let z_inv = complex_inverse(&z, tol)?;
        let y_next = (&y + &z_inv).scale_real(0.5);
        let z_next = (&z + &y_inv).scale_real(0.5);
        let step = y_next.distance(&y);
        y = y_next;
        z = z_next;
        if step <= 4.0 * f64::EPSILON * y.norm() {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::ConvergenceFailure);
    }
    let residual = (&y * &y).distance(t.matrix());
    if residual > scaled(tol.eq_tol, t.matrix().norm()) {
        return Err(Error::SqrtNotInCone { residual });
    }
    AccretiveDissipativeMatrix::new(y, tol).map_err(|_| Error::SqrtNotInCone { residual })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn tol() -> ToleranceConfig {
        ToleranceConfig::default()
    }

    fn scalar(n: usize, re: f64, im: f64) -> ComplexSquareMatrix {
        ComplexSquareMatrix::scalar(n, c(re, im))
    }

    #[test]
    fn decompose_examples() {
        let p = toeplitz_decompose(&scalar(2, 32.0, 24.0));
        assert_eq!(p.real, HermitianMatrix::scalar(2, 32.0));
        assert_eq!(p.imag, HermitianMatrix::scalar(2, 24.0));

        let p = toeplitz_decompose(&ComplexSquareMatrix::identity(3));
        assert_eq!(p.real, HermitianMatrix::identity(3));
        assert_eq!(p.imag, HermitianMatrix::zeros(3));

        // [[1+2i, 3], [-3, 4i]]: real part [[1, 0], [0, 0]], imaginary part [[2, -3i], [3i, 4]].
        let t = ComplexSquareMatrix::from_row_slice(2, &[c(1.0, 2.0), c(3.0, 0.0), c(-3.0, 0.0), c(0.0, 4.0)])
            .unwrap();
        let p = toeplitz_decompose(&t);
        let real = ComplexSquareMatrix::from_parts(2, &[1.0, 0.0, 0.0, 0.0], &[0.0; 4]).unwrap();
        let imag = ComplexSquareMatrix::from_parts(2, &[2.0, 0.0, 0.0, 4.0], &[0.0, -3.0, 3.0, 0.0]).unwrap();
        assert_eq!(p.real.as_complex(), &real);
        assert_eq!(p.imag.as_complex(), &imag);
        assert_eq!(p.recompose(), t);
    }

    #[test]
    fn membership_examples() {
        let t = tol();
        assert!(is_accretive_dissipative(&scalar(3, 1.0, 1.0), &t));
        assert!(!is_accretive_dissipative(&ComplexSquareMatrix::identity(3), &t));
        assert!(!is_accretive_dissipative(&scalar(3, 1.0, -1.0), &t));
        assert_eq!(
            AccretiveDissipativeMatrix::new(ComplexSquareMatrix::identity(2), &t).unwrap_err(),
            Error::NotAccretiveDissipative
        );
    }

    #[test]
    fn order_examples() {
        let t = tol();
        let r = compare_extended_order(&scalar(2, 32.0, 24.0), &scalar(2, 7.0, 24.0), &t).unwrap();
        assert_eq!(r.tag, OrderTag::GreaterEq);
        assert_eq!(r.real.order, PartOrder::GreaterEq);
        assert!(r.real.strict);
        assert_eq!(r.imag.order, PartOrder::Equal);

        let r = compare_extended_order(&scalar(2, 6.0, 2.0), &scalar(2, 4.0, 3.0), &t).unwrap();
        assert_eq!(r.tag, OrderTag::Incomparable);
        assert_eq!(r.real.order, PartOrder::GreaterEq);
        assert_eq!(r.imag.order, PartOrder::LessEq);

        let m = scalar(2, 3.0, 5.0);
        assert_eq!(compare_extended_order(&m, &m, &t).unwrap().tag, OrderTag::Equal);

        let r = compare_extended_order(&scalar(1, 2.0, 2.0), &scalar(1, 1.0, 1.0), &t).unwrap();
        assert_eq!(r.tag, OrderTag::StrictGreater);
        let r = compare_extended_order(&scalar(1, 1.0, 1.0), &scalar(1, 2.0, 2.0), &t).unwrap();
        assert_eq!(r.tag, OrderTag::StrictLess);

        assert!(matches!(
            compare_extended_order(&scalar(1, 1.0, 1.0), &scalar(2, 1.0, 1.0), &t),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn part_incomparable_dominates() {
        let t = tol();
        let a = HermitianMatrix::from_real_diagonal(&[2.0, 0.0]);
        let c = HermitianMatrix::from_real_diagonal(&[0.0, 2.0]);
        let w = compare_loewner(&a, &c, &t).unwrap();
        assert_eq!(w.order, PartOrder::Incomparable);
        let r = compare_hermitian(&a, &c, &t).unwrap();
        assert_eq!(r.tag, OrderTag::Incomparable);
    }

    #[test]
    fn sqrt_examples() {
        let t = tol();
        for (input, root) in [((32.0, 24.0), (6.0, 2.0)), ((3.0, 4.0), (2.0, 1.0)), ((15.0, 8.0), (4.0, 1.0))] {
            let m = AccretiveDissipativeMatrix::scalar(2, c(input.0, input.1), &t).unwrap();
            let r = ad_sqrt(&m, &t).unwrap();
            assert!(r.matrix().distance(&scalar(2, root.0, root.1)) < 1e-12);
        }
    }
}
