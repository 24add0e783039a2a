//! Arithmetic, geometric and harmonic means of Hermitian positive definite
//! and accretive-dissipative matrices, and evaluators for their order
//! properties.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{
    complex_inverse, hermitian_inv_sqrt, hermitian_inverse, hermitian_sqrt, is_positive_definite,
    is_positive_semidefinite, ComplexSquareMatrix, HermitianMatrix,
};
use crate::order::{ad_sqrt, compare_extended_order, toeplitz_decompose, AccretiveDissipativeMatrix, OrderRelation};
use crate::residual::Residual;
use crate::tol::ToleranceConfig;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MeanKind {
    Arithmetic,
    Geometric,
    Harmonic,
}

impl MeanKind {
    pub const ALL: [MeanKind; 3] = [MeanKind::Arithmetic, MeanKind::Geometric, MeanKind::Harmonic];

    pub fn symbol(&self) -> &'static str {
        match self {
            MeanKind::Arithmetic => "∇",
            MeanKind::Geometric => "♯",
            MeanKind::Harmonic => "!",
        }
    }
}

impl fmt::Display for MeanKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MeanKind::Arithmetic => "arith",
            MeanKind::Geometric => "geo",
            MeanKind::Harmonic => "harm",
        })
    }
}

impl FromStr for MeanKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "arith" | "arithmetic" => Ok(MeanKind::Arithmetic),
            "geo" | "geometric" => Ok(MeanKind::Geometric),
            "harm" | "harmonic" => Ok(MeanKind::Harmonic),
            other => Err(format!("unknown mean kind '{other}' (expected arith, geo or harm)")),
        }
    }
}

fn require_pd(h: &HermitianMatrix, tol: &ToleranceConfig) -> Result<()> {
    if is_positive_definite(h, tol) {
        Ok(())
    } else {
        let min_eigenvalue = h.eigen().map(|e| e.min()).unwrap_or(f64::NAN);
        Err(Error::NotPd { min_eigenvalue })
    }
}

/// `A^{1/2} (A^{-1/2} C A^{-1/2})^{1/2} A^{1/2}` in one evaluation order.
fn geometric_one_way(a: &HermitianMatrix, c: &HermitianMatrix, tol: &ToleranceConfig) -> Result<HermitianMatrix> {
    let a_half = hermitian_sqrt(a, tol)?;
    let a_neg_half = hermitian_inv_sqrt(a, tol)?;
    let inner = c.congruence(a_neg_half.as_complex());
    let inner_root = hermitian_sqrt(&inner, tol)?;
    Ok(inner_root.congruence(a_half.as_complex()))
}

/// Mean of two Hermitian positive definite matrices.
///
/// The geometric mean is averaged over both evaluation orders so the result
/// is symmetric in its arguments up to rounding of the final sum.
pub fn hermitian_mean(
    kind: MeanKind,
    a: &HermitianMatrix,
    c: &HermitianMatrix,
    tol: &ToleranceConfig,
) -> Result<HermitianMatrix> {
    a.as_complex().ensure_same_dim(c.as_complex())?;
    require_pd(a, tol)?;
    require_pd(c, tol)?;
    match kind {
        MeanKind::Arithmetic => Ok((a + c).scale(0.5)),
        MeanKind::Geometric => {
            let ac = geometric_one_way(a, c, tol)?;
            let ca = geometric_one_way(c, a, tol)?;
            Ok((&ac + &ca).scale(0.5))
        }
        MeanKind::Harmonic => {
            let sum = &hermitian_inverse(a, tol)? + &hermitian_inverse(c, tol)?;
            Ok(hermitian_inverse(&sum, tol)?.scale(2.0))
        }
    }
}

/// Component-wise mean: `T σ S = A σ C + i (B σ D)`.
pub fn ad_mean(
    kind: MeanKind,
    t: &AccretiveDissipativeMatrix,
    s: &AccretiveDissipativeMatrix,
    tol: &ToleranceConfig,
) -> Result<AccretiveDissipativeMatrix> {
    t.ensure_same_dim(s)?;
    let real = hermitian_mean(kind, t.real(), s.real(), tol)?;
    let imag = hermitian_mean(kind, t.imag(), s.imag(), tol)?;
    AccretiveDissipativeMatrix::from_parts(real, imag, tol)
}

fn both_parts_psd(block: &ComplexSquareMatrix, tol: &ToleranceConfig) -> bool {
    let parts = toeplitz_decompose(block);
    is_positive_semidefinite(&parts.real, tol) && is_positive_semidefinite(&parts.imag, tol)
}

fn check_witness_dims(
    t: &AccretiveDissipativeMatrix,
    s: &AccretiveDissipativeMatrix,
    x: &ComplexSquareMatrix,
) -> Result<()> {
    t.ensure_same_dim(s)?;
    t.matrix().ensure_same_dim(x)
}

/// Whether `[[T, X], [X, S]] ≥ 0` in the extended order.
pub fn geometric_block_witness(
    t: &AccretiveDissipativeMatrix,
    s: &AccretiveDissipativeMatrix,
    x: &ComplexSquareMatrix,
    tol: &ToleranceConfig,
) -> Result<bool> {
    check_witness_dims(t, s, x)?;
    let block = ComplexSquareMatrix::from_blocks(t.matrix(), x, x, s.matrix())?;
    Ok(both_parts_psd(&block, tol))
}

/// Whether `diag(2T, 2S) ≥ [[X, X], [X, X]]` in the extended order.
pub fn harmonic_block_witness(
    t: &AccretiveDissipativeMatrix,
    s: &AccretiveDissipativeMatrix,
    x: &ComplexSquareMatrix,
    tol: &ToleranceConfig,
) -> Result<bool> {
    check_witness_dims(t, s, x)?;
    let zero = ComplexSquareMatrix::zeros(t.dim());
    let diag = ComplexSquareMatrix::from_blocks(&t.matrix().scale_real(2.0), &zero, &zero, &s.matrix().scale_real(2.0))?;
    let xs = ComplexSquareMatrix::from_blocks(x, x, x, x)?;
    Ok(both_parts_psd(&(&diag - &xs), tol))
}

/// Compares `(Σ T_k) σ (Σ S_k)` against `Σ (T_k σ S_k)`.
pub fn check_superadditivity(
    kind: MeanKind,
    pairs: &[(AccretiveDissipativeMatrix, AccretiveDissipativeMatrix)],
    tol: &ToleranceConfig,
) -> Result<OrderRelation> {
    let (first_t, first_s) = pairs.first().ok_or(Error::EmptyInput)?;
    let mut sum_t = first_t.matrix().clone();
    let mut sum_s = first_s.matrix().clone();
    let mut sum_means = ad_mean(kind, first_t, first_s, tol)?.into_matrix();
    for (t, s) in &pairs[1..] {
        first_t.ensure_same_dim(t)?;
        sum_t = &sum_t + t.matrix();
        sum_s = &sum_s + s.matrix();
        sum_means = &sum_means + ad_mean(kind, t, s, tol)?.matrix();
    }
    let sum_t = AccretiveDissipativeMatrix::new(sum_t, tol)?;
    let sum_s = AccretiveDissipativeMatrix::new(sum_s, tol)?;
    let lhs = ad_mean(kind, &sum_t, &sum_s, tol)?;
    compare_extended_order(lhs.matrix(), &sum_means, tol)
}

/// `(compare(T∇S, T♯S), compare(T♯S, T!S))`.
pub fn check_amgmhm(
    t: &AccretiveDissipativeMatrix,
    s: &AccretiveDissipativeMatrix,
    tol: &ToleranceConfig,
) -> Result<(OrderRelation, OrderRelation)> {
    let arith = ad_mean(MeanKind::Arithmetic, t, s, tol)?;
    let geo = ad_mean(MeanKind::Geometric, t, s, tol)?;
    let harm = ad_mean(MeanKind::Harmonic, t, s, tol)?;
    Ok((
        compare_extended_order(arith.matrix(), geo.matrix(), tol)?,
        compare_extended_order(geo.matrix(), harm.matrix(), tol)?,
    ))
}

/// Residual of `(Q*TQ) ♯ (Q*SQ) = Q* (T♯S) Q`.
pub fn check_congruence(
    t: &AccretiveDissipativeMatrix,
    s: &AccretiveDissipativeMatrix,
    q: &ComplexSquareMatrix,
    tol: &ToleranceConfig,
) -> Result<Residual> {
    check_witness_dims(t, s, q)?;
    complex_inverse(q, tol)?;
    let qh = q.conjugate_transpose();
    let congruent = |m: &ComplexSquareMatrix| &(&qh * m) * q;
    let tq = AccretiveDissipativeMatrix::new(congruent(t.matrix()), tol)?;
    let sq = AccretiveDissipativeMatrix::new(congruent(s.matrix()), tol)?;
    let lhs = ad_mean(MeanKind::Geometric, &tq, &sq, tol)?;
    let rhs = congruent(ad_mean(MeanKind::Geometric, t, s, tol)?.matrix());
    Ok(Residual::new(lhs.matrix().distance(&rhs), lhs.matrix().norm().max(rhs.norm())))
}

fn commutator_norm(x: &ComplexSquareMatrix, y: &ComplexSquareMatrix) -> f64 {
    (x * y).distance(&(y * x))
}

fn is_normal(x: &ComplexSquareMatrix, tol: &ToleranceConfig) -> bool {
    let xh = x.conjugate_transpose();
    commutator_norm(x, &xh) <= tol.eq_tol * x.norm() * x.norm()
}

/// For commuting `T`, `S` with at least one of them normal, the residual of
/// `T♯S = A^{1/2} C^{1/2} + i B^{1/2} D^{1/2}`.
pub fn commuting_normal_geometric(
    t: &AccretiveDissipativeMatrix,
    s: &AccretiveDissipativeMatrix,
    tol: &ToleranceConfig,
) -> Result<Residual> {
    t.ensure_same_dim(s)?;
    let (tm, sm) = (t.matrix(), s.matrix());
    if commutator_norm(tm, sm) > tol.eq_tol * tm.norm() * sm.norm() {
        return Err(Error::HypothesisFail("T and S do not commute"));
    }
    if !(is_normal(tm, tol) || is_normal(sm, tol)) {
        return Err(Error::HypothesisFail("neither T nor S is normal"));
    }
    let root = |h: &HermitianMatrix| hermitian_sqrt(h, tol);
    let real = root(t.real())?.as_complex() * root(s.real())?.as_complex();
    let imag = root(t.imag())?.as_complex() * root(s.imag())?.as_complex();
    let closed_form = &real + &imag.scale(Complex64::new(0.0, 1.0));
    let mean = ad_mean(MeanKind::Geometric, t, s, tol)?;
    Ok(Residual::new(mean.matrix().distance(&closed_form), mean.matrix().norm()))
}

/// `‖T^{1/2} S^{1/2} − T♯S‖`; generally far from zero even for commuting normal pairs.
pub fn product_of_roots_gap(
    t: &AccretiveDissipativeMatrix,
    s: &AccretiveDissipativeMatrix,
    tol: &ToleranceConfig,
) -> Result<f64> {
    let product = ad_sqrt(t, tol)?.matrix() * ad_sqrt(s, tol)?.matrix();
    Ok(product.distance(ad_mean(MeanKind::Geometric, t, s, tol)?.matrix()))
}

/// The three predicates `T♯S ≤ S`, `T ≤ S` and `T ≤ T♯S`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderEquivalences {
    pub mean_le_right: bool,
    pub left_le_right: bool,
    pub left_le_mean: bool,
}

impl OrderEquivalences {
    pub fn agree(&self) -> bool {
        self.mean_le_right == self.left_le_right && self.left_le_right == self.left_le_mean
    }

    pub fn as_tuple(&self) -> (bool, bool, bool) {
        (self.mean_le_right, self.left_le_right, self.left_le_mean)
    }
}

pub fn check_order_equivalences(
    t: &AccretiveDissipativeMatrix,
    s: &AccretiveDissipativeMatrix,
    tol: &ToleranceConfig,
) -> Result<OrderEquivalences> {
    let g = ad_mean(MeanKind::Geometric, t, s, tol)?;
    Ok(OrderEquivalences {
        mean_le_right: compare_extended_order(g.matrix(), s.matrix(), tol)?.is_le(),
        left_le_right: compare_extended_order(t.matrix(), s.matrix(), tol)?.is_le(),
        left_le_mean: compare_extended_order(t.matrix(), g.matrix(), tol)?.is_le(),
    })
}

/// `‖G T^{-1} G − S‖` with `G = T♯S`.
pub fn riccati_residual(
    t: &AccretiveDissipativeMatrix,
    s: &AccretiveDissipativeMatrix,
    tol: &ToleranceConfig,
) -> Result<f64> {
    let g = ad_mean(MeanKind::Geometric, t, s, tol)?;
    let t_inv = complex_inverse(t.matrix(), tol)?;
    let lhs = &(g.matrix() * &t_inv) * g.matrix();
    Ok(lhs.distance(s.matrix()))
}
