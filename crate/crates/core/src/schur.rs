//! Schur complements, parallel sums, the real/imaginary parts of inverses,
//! and the inequalities and identities relating them to the means.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{complex_inverse, hermitian_inverse, is_positive_definite, reciprocal_condition, ComplexSquareMatrix, HermitianMatrix};
use crate::means::{ad_mean, hermitian_mean, MeanKind};
use crate::order::{compare_extended_order, compare_hermitian, AccretiveDissipativeMatrix, OrderRelation};
use crate::residual::Residual;
use crate::tol::ToleranceConfig;

type CMat = DMatrix<Complex64>;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Split of an `n x n` matrix into a leading `k x k` block and a trailing `(n−k) x (n−k)` block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockPartition {
    k: usize,
}

impl BlockPartition {
    pub fn new(k: usize) -> Self {
        Self { k }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        if self.k == 0 || self.k >= n {
            return Err(Error::InvalidPartition { k: self.k, n });
        }
        Ok(())
    }
}

struct Blocks {
    m11: CMat,
    m12: CMat,
    m21: CMat,
    m22: CMat,
}

fn split(m: &ComplexSquareMatrix, p: BlockPartition) -> Result<Blocks> {
    let n = m.dim();
    p.validate(n)?;
    let k = p.k;
    let r = n - k;
    let a = m.as_matrix();
    Ok(Blocks {
        m11: a.view((0, 0), (k, k)).into_owned(),
        m12: a.view((0, k), (k, r)).into_owned(),
        m21: a.view((k, 0), (r, k)).into_owned(),
        m22: a.view((k, k), (r, r)).into_owned(),
    })
}

fn invert_block(m: &CMat, tol: &ToleranceConfig) -> Result<CMat> {
    let rcond = reciprocal_condition(m)?;
    if rcond <= tol.pd_tol {
        return Err(Error::SingularBlock { rcond });
    }
    m.clone().lu().try_inverse().ok_or(Error::SingularBlock { rcond })
}

/// `M/M₂₂ = M₁₁ − M₁₂ M₂₂⁻¹ M₂₁`.
pub fn schur_complement(m: &ComplexSquareMatrix, p: BlockPartition, tol: &ToleranceConfig) -> Result<ComplexSquareMatrix> {
    let b = split(m, p)?;
    let inv22 = invert_block(&b.m22, tol)?;
    Ok(ComplexSquareMatrix::from_raw(&b.m11 - &b.m12 * inv22 * &b.m21))
}

/// Schur complement of a Hermitian matrix, which is again Hermitian.
pub fn hermitian_schur_complement(
    h: &HermitianMatrix,
    p: BlockPartition,
    tol: &ToleranceConfig,
) -> Result<HermitianMatrix> {
    Ok(HermitianMatrix::symmetrize(&schur_complement(h.as_complex(), p, tol)?))
}

/// Schur complement of an accretive-dissipative matrix, which stays in the cone.
pub fn ad_schur_complement(
    t: &AccretiveDissipativeMatrix,
    p: BlockPartition,
    tol: &ToleranceConfig,
) -> Result<AccretiveDissipativeMatrix> {
    AccretiveDissipativeMatrix::new(schur_complement(t.matrix(), p, tol)?, tol)
}

/// `X : Y = (X⁻¹ + Y⁻¹)⁻¹`.
pub fn parallel_sum(t: &ComplexSquareMatrix, s: &ComplexSquareMatrix, tol: &ToleranceConfig) -> Result<ComplexSquareMatrix> {
    t.ensure_same_dim(s)?;
    let sum = &complex_inverse(t, tol)? + &complex_inverse(s, tol)?;
    complex_inverse(&sum, tol)
}

/// Parallel sum of two accretive-dissipative matrices, which is again accretive-dissipative.
pub fn ad_parallel_sum(
    t: &AccretiveDissipativeMatrix,
    s: &AccretiveDissipativeMatrix,
    tol: &ToleranceConfig,
) -> Result<AccretiveDissipativeMatrix> {
    AccretiveDissipativeMatrix::new(parallel_sum(t.matrix(), s.matrix(), tol)?, tol)
}

/// `T⁻¹ = E + iF` with Hermitian `E`, `F`.
#[derive(Debug, Clone)]
pub struct InverseParts {
    pub e: HermitianMatrix,
    pub f: HermitianMatrix,
    /// Distance between `E + iF` and a direct LU inverse of `T`.
    pub consistency: Residual,
}

impl InverseParts {
    /// `E` positive definite and `F` negative definite.
    pub fn has_sign_structure(&self, tol: &ToleranceConfig) -> bool {
        is_positive_definite(&self.e, tol) && is_positive_definite(&-&self.f, tol)
    }

    pub fn recompose(&self) -> ComplexSquareMatrix {
        self.e.as_complex() + &self.f.as_complex().scale(I)
    }
}

/// `(A + B A⁻¹ B)⁻¹` and `(B + A B⁻¹ A)⁻¹` for `T = A + iB`.
struct InverseBlocks {
    a_inv: HermitianMatrix,
    b_inv: HermitianMatrix,
    /// `A + B A⁻¹ B`
    real_core: HermitianMatrix,
    /// `B + A B⁻¹ A`
    imag_core: HermitianMatrix,
    /// `(A + B A⁻¹ B)⁻¹`
    e: HermitianMatrix,
    /// `(B + A B⁻¹ A)⁻¹ = −F`
    g: HermitianMatrix,
}

fn inverse_blocks(t: &AccretiveDissipativeMatrix, tol: &ToleranceConfig) -> Result<InverseBlocks> {
    let (a, b) = (t.real(), t.imag());
    let a_inv = hermitian_inverse(a, tol)?;
    let b_inv = hermitian_inverse(b, tol)?;
    let real_core = a + &a_inv.congruence(b.as_complex());
    let imag_core = b + &b_inv.congruence(a.as_complex());
    let e = hermitian_inverse(&real_core, tol)?;
    let g = hermitian_inverse(&imag_core, tol)?;
    Ok(InverseBlocks { a_inv, b_inv, real_core, imag_core, e, g })
}

pub fn inverse_parts(t: &AccretiveDissipativeMatrix, tol: &ToleranceConfig) -> Result<InverseParts> {
    let blocks = inverse_blocks(t, tol)?;
    let direct = complex_inverse(t.matrix(), tol)?;
    let f = -&blocks.g;
    let combined = blocks.e.as_complex() + &f.as_complex().scale(I);
    let consistency = Residual::new(combined.distance(&direct), direct.norm());
    Ok(InverseParts { e: blocks.e, f, consistency })
}

/// Residuals of the two identities expressing `A⁻¹` and `B⁻¹` through the
/// real and imaginary parts of `T⁻¹`.
pub fn identity_residuals(t: &AccretiveDissipativeMatrix, tol: &ToleranceConfig) -> Result<(Residual, Residual)> {
    let blk = inverse_blocks(t, tol)?;
    let side = |inv: &HermitianMatrix, first: &HermitianMatrix, outer: &HermitianMatrix, core: &HermitianMatrix| {
        let sandwich = &(outer.as_complex() * core.as_complex()) * outer.as_complex();
        let rhs = first.as_complex() + &sandwich;
        let scale = inv.norm() + first.norm() + sandwich.norm();
        Residual::new(inv.as_complex().distance(&rhs), scale)
    };
    let first = side(&blk.a_inv, &blk.e, &blk.g, &blk.real_core);
    let second = side(&blk.b_inv, &blk.g, &blk.e, &blk.imag_core);
    Ok((first, second))
}

/// Residual of `(A + B A⁻¹ B)⁻¹ = A⁻¹ − A⁻¹ B (A + B A⁻¹ B)⁻¹ B A⁻¹`.
pub fn smw_residual(t: &AccretiveDissipativeMatrix, tol: &ToleranceConfig) -> Result<Residual> {
    let blk = inverse_blocks(t, tol)?;
    let a_inv_b = blk.a_inv.as_complex() * t.imag().as_complex();
    let correction = &(&a_inv_b * blk.e.as_complex()) * &a_inv_b.conjugate_transpose();
    let rhs = blk.a_inv.as_complex() - &correction;
    let scale = blk.e.norm() + blk.a_inv.norm() + correction.norm();
    Ok(Residual::new(blk.e.as_complex().distance(&rhs), scale))
}

/// Correction factors relating the Schur complement of a sum to the sum of Schur complements.
#[derive(Debug, Clone)]
pub struct SchurCorrectionTerms {
    /// `A₁₂A₂₂⁻¹ − B₁₂B₂₂⁻¹`, of size `k x (n−k)`.
    pub x: DMatrix<Complex64>,
    /// `A₂₂⁻¹A₂₁ − B₂₂⁻¹B₂₁`, of size `(n−k) x k`.
    pub y: DMatrix<Complex64>,
    /// `A₂₂ : B₂₂`.
    pub core: ComplexSquareMatrix,
}

#[derive(Debug, Clone)]
pub struct SchurSumDecomposition {
    /// `(A+B)/(A₂₂+B₂₂)`
    pub lhs: ComplexSquareMatrix,
    /// `A/A₂₂ + B/B₂₂ + X (A₂₂:B₂₂) Y`
    pub rhs: ComplexSquareMatrix,
    pub terms: SchurCorrectionTerms,
    pub residual: Residual,
}

pub fn schur_sum_decomposition(
    a: &ComplexSquareMatrix,
    b: &ComplexSquareMatrix,
    p: BlockPartition,
    tol: &ToleranceConfig,
) -> Result<SchurSumDecomposition> {
    a.ensure_same_dim(b)?;
    let ab = split(a, p)?;
    let bb = split(b, p)?;
    let a22_inv = invert_block(&ab.m22, tol)?;
    let b22_inv = invert_block(&bb.m22, tol)?;
    invert_block(&(&ab.m22 + &bb.m22), tol)?;
    let core = invert_block(&(&a22_inv + &b22_inv), tol)?;

    let a_sc = &ab.m11 - &ab.m12 * &a22_inv * &ab.m21;
    let b_sc = &bb.m11 - &bb.m12 * &b22_inv * &bb.m21;
    let x = &ab.m12 * &a22_inv - &bb.m12 * &b22_inv;
    let y = &a22_inv * &ab.m21 - &b22_inv * &bb.m21;
    let correction = &x * &core * &y;
    let rhs = &a_sc + &b_sc + &correction;
    let lhs = schur_complement(&(a + b), p, tol)?.into_matrix();

    let residual = Residual::new(
        (&lhs - &rhs).norm(),
        lhs.norm().max(a_sc.norm() + b_sc.norm() + correction.norm()),
    );
    Ok(SchurSumDecomposition {
        lhs: ComplexSquareMatrix::from_raw(lhs),
        rhs: ComplexSquareMatrix::from_raw(rhs),
        terms: SchurCorrectionTerms { x, y, core: ComplexSquareMatrix::from_raw(core) },
        residual,
    })
}

fn require_pd(h: &HermitianMatrix, tol: &ToleranceConfig) -> Result<()> {
    if is_positive_definite(h, tol) {
        Ok(())
    } else {
        Err(Error::NotPd { min_eigenvalue: h.eigen().map(|e| e.min()).unwrap_or(f64::NAN) })
    }
}

/// Loewner comparison of `(A+B)/(A₂₂+B₂₂)` against `A/A₂₂ + B/B₂₂`.
pub fn check_fm_inequality(
    a: &HermitianMatrix,
    b: &HermitianMatrix,
    p: BlockPartition,
    tol: &ToleranceConfig,
) -> Result<OrderRelation> {
    require_pd(a, tol)?;
    require_pd(b, tol)?;
    let lhs = hermitian_schur_complement(&(a + b), p, tol)?;
    let rhs = &hermitian_schur_complement(a, p, tol)? + &hermitian_schur_complement(b, p, tol)?;
    compare_hermitian(&lhs, &rhs, tol)
}

/// Extended-order comparison of `(A+iB)/(A₂₂+iB₂₂)` against `A/A₂₂ + i B/B₂₂`.
pub fn check_mixed_schur(
    a: &HermitianMatrix,
    b: &HermitianMatrix,
    p: BlockPartition,
    tol: &ToleranceConfig,
) -> Result<OrderRelation> {
    require_pd(a, tol)?;
    require_pd(b, tol)?;
    let t = a.as_complex() + &b.as_complex().scale(I);
    let lhs = schur_complement(&t, p, tol)?;
    let rhs = hermitian_schur_complement(a, p, tol)?.as_complex()
        + &hermitian_schur_complement(b, p, tol)?.as_complex().scale(I);
    compare_extended_order(&lhs, &rhs, tol)
}

/// Compares `2(T:S)` against `T!S`.
pub fn check_parallel_vs_harmonic(
    t: &AccretiveDissipativeMatrix,
    s: &AccretiveDissipativeMatrix,
    tol: &ToleranceConfig,
) -> Result<OrderRelation> {
    let twice = parallel_sum(t.matrix(), s.matrix(), tol)?.scale_real(2.0);
    compare_extended_order(&twice, ad_mean(MeanKind::Harmonic, t, s, tol)?.matrix(), tol)
}

/// Compares `2(T:S)` against `T♯S`. No ordering is predicted.
pub fn compare_parallel_vs_geometric(
    t: &AccretiveDissipativeMatrix,
    s: &AccretiveDissipativeMatrix,
    tol: &ToleranceConfig,
) -> Result<OrderRelation> {
    let twice = parallel_sum(t.matrix(), s.matrix(), tol)?.scale_real(2.0);
    compare_extended_order(&twice, ad_mean(MeanKind::Geometric, t, s, tol)?.matrix(), tol)
}

/// Loewner comparison of `(AσC)/(AσC)₂₂` against `(A/A₂₂) σ (C/C₂₂)` for positive definite `A`, `C`.
pub fn check_pd_schur_mean(
    a: &HermitianMatrix,
    c: &HermitianMatrix,
    kind: MeanKind,
    p: BlockPartition,
    tol: &ToleranceConfig,
) -> Result<OrderRelation> {
    let lhs = hermitian_schur_complement(&hermitian_mean(kind, a, c, tol)?, p, tol)?;
    let rhs = hermitian_mean(
        kind,
        &hermitian_schur_complement(a, p, tol)?,
        &hermitian_schur_complement(c, p, tol)?,
        tol,
    )?;
    compare_hermitian(&lhs, &rhs, tol)
}

/// Whether an arithmetic combination is the plain sum `T + S` or the mean `(T + S)/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ArithmeticForm {
    Sum,
    Mean,
}

fn combine(
    kind: MeanKind,
    form: ArithmeticForm,
    t: &AccretiveDissipativeMatrix,
    s: &AccretiveDissipativeMatrix,
    tol: &ToleranceConfig,
) -> Result<AccretiveDissipativeMatrix> {
    match (kind, form) {
        (MeanKind::Arithmetic, ArithmeticForm::Sum) => {
            t.ensure_same_dim(s)?;
            AccretiveDissipativeMatrix::new(t.matrix() + s.matrix(), tol)
        }
        _ => ad_mean(kind, t, s, tol),
    }
}

#[derive(Debug, Clone)]
pub struct SchurMeanComparison {
    /// `(T σ S)/(T σ S)₂₂`
    pub lhs: ComplexSquareMatrix,
    /// `(T/T₂₂) σ (S/S₂₂)`
    pub rhs: ComplexSquareMatrix,
    pub relation: OrderRelation,
}

/// Evaluates both sides of the conjectured `(TσS)/(TσS)₂₂ ≥ (T/T₂₂) σ (S/S₂₂)`, which fails in general.
/// `form` only matters for [`MeanKind::Arithmetic`].
pub fn evaluate_question_42(
    t: &AccretiveDissipativeMatrix,
    s: &AccretiveDissipativeMatrix,
    kind: MeanKind,
    form: ArithmeticForm,
    p: BlockPartition,
    tol: &ToleranceConfig,
) -> Result<SchurMeanComparison> {
    let lhs = schur_complement(combine(kind, form, t, s, tol)?.matrix(), p, tol)?;
    let t_sc = ad_schur_complement(t, p, tol)?;
    let s_sc = ad_schur_complement(s, p, tol)?;
    let rhs = combine(kind, form, &t_sc, &s_sc, tol)?.into_matrix();
    let relation = compare_extended_order(&lhs, &rhs, tol)?;
    Ok(SchurMeanComparison { lhs, rhs, relation })
}

/// The two steps of the lower bound
/// `(TσS)/(TσS)₂₂ ≥ (AσC)/(AσC)₂₂ + i(BσD)/(BσD)₂₂ ≥ (A/A₂₂)σ(C/C₂₂) + i(B/B₂₂)σ(D/D₂₂)`.
pub fn check_lower_bound_chain(
    t: &AccretiveDissipativeMatrix,
    s: &AccretiveDissipativeMatrix,
    kind: MeanKind,
    p: BlockPartition,
    tol: &ToleranceConfig,
) -> Result<(OrderRelation, OrderRelation)> {
    let mean_real = hermitian_mean(kind, t.real(), s.real(), tol)?;
    let mean_imag = hermitian_mean(kind, t.imag(), s.imag(), tol)?;
    let top = schur_complement(&(mean_real.as_complex() + &mean_imag.as_complex().scale(I)), p, tol)?;
    let middle = hermitian_schur_complement(&mean_real, p, tol)?.as_complex()
        + &hermitian_schur_complement(&mean_imag, p, tol)?.as_complex().scale(I);
    let part_mean = |x: &HermitianMatrix, y: &HermitianMatrix| {
        hermitian_mean(kind, &hermitian_schur_complement(x, p, tol)?, &hermitian_schur_complement(y, p, tol)?, tol)
    };
    let bottom = part_mean(t.real(), s.real())?.as_complex() + &part_mean(t.imag(), s.imag())?.as_complex().scale(I);
    Ok((compare_extended_order(&top, &middle, tol)?, compare_extended_order(&middle, &bottom, tol)?))
}

/// Which preconditions [`parallel_sum_schur_equality`] enforces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum InputMode {
    /// Both operands must be accretive-dissipative.
    AccretiveDissipative,
    /// Any operands for which every inverse involved exists.
    General,
}

/// `‖(X⁻¹)₁₁ − (X/X₂₂)⁻¹‖`.
pub fn inverse_leading_block_residual(
    x: &ComplexSquareMatrix,
    p: BlockPartition,
    tol: &ToleranceConfig,
) -> Result<Residual> {
    let k = p.k();
    let sc_inv = complex_inverse(&schur_complement(x, p, tol)?, tol)?;
    let inv = complex_inverse(x, tol)?;
    let lead = inv.as_matrix().view((0, 0), (k, k)).into_owned();
    Ok(Residual::new((&lead - sc_inv.as_matrix()).norm(), lead.norm().max(sc_inv.norm())))
}

/// Residual of `(T:S)/(T:S)₂₂ = (T/T₂₂) : (S/S₂₂)`.
///
/// Also evaluates the left side through the leading block of
/// `T⁻¹ + S⁻¹` and reports the worse of the two residuals.
pub fn parallel_sum_schur_equality(
    t: &ComplexSquareMatrix,
    s: &ComplexSquareMatrix,
    p: BlockPartition,
    mode: InputMode,
    tol: &ToleranceConfig,
) -> Result<Residual> {
    t.ensure_same_dim(s)?;
    p.validate(t.dim())?;
    if mode == InputMode::AccretiveDissipative {
        AccretiveDissipativeMatrix::new(t.clone(), tol)?;
        AccretiveDissipativeMatrix::new(s.clone(), tol)?;
    }
    let lhs = schur_complement(&parallel_sum(t, s, tol)?, p, tol)?;
    let rhs = parallel_sum(&schur_complement(t, p, tol)?, &schur_complement(s, p, tol)?, tol)?;
    let direct = Residual::new(lhs.distance(&rhs), lhs.norm().max(rhs.norm()));

    let k = p.k();
    let lead = |m: &ComplexSquareMatrix| -> Result<CMat> {
        Ok(complex_inverse(m, tol)?.as_matrix().view((0, 0), (k, k)).into_owned())
    };
    let via_inverse = complex_inverse(&ComplexSquareMatrix::from_raw(lead(t)? + lead(s)?), tol)?;
    let cross = Residual::new(lhs.distance(&via_inverse), lhs.norm().max(via_inverse.norm()));
    Ok(direct.worst(cross))
}
