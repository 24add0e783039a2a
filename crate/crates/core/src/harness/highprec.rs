//! Double-double (about 31 significant digits) re-evaluation of suite
//! witnesses, used to tell genuine violations from floating-point noise.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use serde::{Deserialize, Serialize};
use twofloat::TwoFloat;

use crate::harness::suites::{Suite, Witness};
use crate::linalg::ComplexSquareMatrix;
use crate::means::MeanKind;
use crate::tol::ToleranceConfig;

/// Decimal digits carried by the oracle arithmetic.
pub const SIGNIFICANT_DIGITS: u32 = 31;

const SQRT_MAX_ITERATIONS: usize = 200;
const SQRT_STEP_TOL: f64 = 1e-29;
const SQRT_STALL_TOL: f64 = 1e-20;

type Cdd = Complex<TwoFloat>;

fn dd(x: f64) -> TwoFloat {
    TwoFloat::from(x)
}

/// Double-double quotient by residual correction. The library's own
/// double-double division loses the low word, so it is not used.
fn dd_div(a: TwoFloat, b: TwoFloat) -> TwoFloat {
    let mut q = dd(a.hi() / b.hi());
    for _ in 0..2 {
        let r = a - q * b;
        q += dd(r.hi() / b.hi());
    }
    q
}

fn cdiv(a: Cdd, b: Cdd) -> Cdd {
    let d = b.norm_sqr();
    let num = a * b.conj();
    Complex::new(dd_div(num.re, d), dd_div(num.im, d))
}

fn czero() -> Cdd {
    Complex::new(dd(0.0), dd(0.0))
}

fn creal(x: f64) -> Cdd {
    Complex::new(dd(x), dd(0.0))
}

fn cimag_unit() -> Cdd {
    Complex::new(dd(0.0), dd(1.0))
}

/// Dense row-major complex matrix in double-double arithmetic.
#[derive(Debug, Clone, PartialEq)]
pub struct DdMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Cdd>,
}

impl DdMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![czero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = creal(1.0);
        }
        m
    }

    pub fn from_matrix(m: &ComplexSquareMatrix) -> Self {
        let n = m.dim();
        let mut out = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let z = m.get(i, j);
                out.data[i * n + j] = Complex::new(dd(z.re), dd(z.im));
            }
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Cdd {
        self.data[i * self.cols + j]
    }

    fn set(&mut self, i: usize, j: usize, z: Cdd) {
        self.data[i * self.cols + j] = z;
    }

    /// Rounds each entry to the nearest double.
    pub fn to_f64(&self) -> Vec<[f64; 2]> {
        self.data.iter().map(|z| [z.re.hi() + z.re.lo(), z.im.hi() + z.im.lo()]).collect()
    }

    pub fn scale(&self, z: Cdd) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| *x * z).collect() }
    }

    pub fn scale_real(&self, x: f64) -> Self {
        self.scale(creal(x))
    }

    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).conj());
            }
        }
        out
    }

    pub fn norm(&self) -> TwoFloat {
        self.data.iter().fold(dd(0.0), |acc, z| acc + z.norm_sqr()).sqrt()
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        let mut out = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                out.set(i, j, self.get(r0 + i, c0 + j));
            }
        }
        out
    }

    /// `(M + M*)/2`
    pub fn real_part(&self) -> Self {
        (self + &self.adjoint()).scale_real(0.5)
    }

    /// `(M − M*)/(2i)`
    pub fn imag_part(&self) -> Self {
        (self - &self.adjoint()).scale(Complex::new(dd(0.0), dd(-0.5)))
    }

    /// `A + iB`
    pub fn compose(a: &Self, b: &Self) -> Self {
        a + &b.scale(cimag_unit())
    }

    /// Gauss-Jordan elimination with partial pivoting; `None` if a pivot vanishes.
    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n).max_by(|&x, &y| {
                a.get(x, col).norm_sqr().partial_cmp(&a.get(y, col).norm_sqr()).expect("finite entries")
            })?;
            if a.get(pivot, col).norm_sqr() == dd(0.0) {
                return None;
            }
            if pivot != col {
                for j in 0..n {
                    let (x, y) = (a.get(col, j), a.get(pivot, j));
                    a.set(col, j, y);
                    a.set(pivot, j, x);
                    let (x, y) = (inv.get(col, j), inv.get(pivot, j));
                    inv.set(col, j, y);
                    inv.set(pivot, j, x);
                }
            }
            let p = cdiv(creal(1.0), a.get(col, col));
            for j in 0..n {
                a.set(col, j, a.get(col, j) * p);
                inv.set(col, j, inv.get(col, j) * p);
            }
            for i in 0..n {
                if i == col {
                    continue;
                }
                let f = a.get(i, col);
                if f == czero() {
                    continue;
                }
                for j in 0..n {
                    a.set(i, j, a.get(i, j) - f * a.get(col, j));
                    inv.set(i, j, inv.get(i, j) - f * inv.get(col, j));
                }
            }
        }
        Some(inv)
    }

    /// Denman–Beavers iteration: `(A^{1/2}, A^{-1/2})` for Hermitian positive definite `A`.
    pub fn hermitian_sqrt_pair(&self) -> Option<(Self, Self)> {
        let n = self.rows;
        let mut y = self.clone();
        let mut z = Self::identity(n);
        let mut previous = None;
        for _ in 0..SQRT_MAX_ITERATIONS {
            let y_next = (&y + &z.inverse()?).scale_real(0.5);
            let z_next = (&z + &y.inverse()?).scale_real(0.5);
            let step = dd_div((&y_next - &y).norm(), y_next.norm()).hi();
            y = y_next;
            z = z_next;
            // Stop at the tolerance, or once rounding makes the steps stall.
            let stalled = previous.is_some_and(|p| step < SQRT_STALL_TOL && step >= p);
            if step <= SQRT_STEP_TOL || stalled {
                return Some((y.real_part(), z.real_part()));
            }
            previous = Some(step);
        }
        None
    }

    /// `M₁₁ − M₁₂ M₂₂⁻¹ M₂₁` for the leading `k x k` block.
    pub fn schur_complement(&self, k: usize) -> Option<Self> {
        let n = self.rows;
        let m = n - k;
        let m11 = self.block(0, 0, k, k);
        let m12 = self.block(0, k, k, m);
        let m21 = self.block(k, 0, m, k);
        let m22_inv = self.block(k, k, m, m).inverse()?;
        Some(&m11 - &(&(&m12 * &m22_inv) * &m21))
    }

    /// Whether the Hermitian matrix `self + margin·I` admits a Cholesky factorization.
    pub fn is_psd_with_margin(&self, margin: TwoFloat) -> bool {
        let n = self.rows;
        let mut l = Self::zeros(n, n);
        for j in 0..n {
            let mut d = self.get(j, j).re + margin;
            for k in 0..j {
                d -= l.get(j, k).norm_sqr();
            }
            if d <= dd(0.0) {
                return false;
            }
            let ljj = d.sqrt();
            l.set(j, j, Complex::new(ljj, dd(0.0)));
            for i in (j + 1)..n {
                let mut s = self.get(i, j);
                for k in 0..j {
                    s -= l.get(i, k) * l.get(j, k).conj();
                }
                l.set(i, j, Complex::new(dd_div(s.re, ljj), dd_div(s.im, ljj)));
            }
        }
        true
    }

    /// Bisection estimate of the smallest eigenvalue of a Hermitian matrix.
    pub fn min_eigenvalue_estimate(&self) -> f64 {
        let bound = self.norm() + dd(1.0);
        let (mut lo, mut hi) = (-bound, bound);
        for _ in 0..120 {
            let mid = (lo + hi) * dd(0.5);
            if self.is_psd_with_margin(-mid) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo.hi()
    }
}

impl Add for &DdMatrix {
    type Output = DdMatrix;
    fn add(self, rhs: &DdMatrix) -> DdMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        DdMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&rhs.data).map(|(a, b)| *a + *b).collect() }
    }
}

impl Sub for &DdMatrix {
    type Output = DdMatrix;
    fn sub(self, rhs: &DdMatrix) -> DdMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        DdMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&rhs.data).map(|(a, b)| *a - *b).collect() }
    }
}

impl Neg for &DdMatrix {
    type Output = DdMatrix;
    fn neg(self) -> DdMatrix {
        self.scale_real(-1.0)
    }
}

impl Mul for &DdMatrix {
    type Output = DdMatrix;
    fn mul(self, rhs: &DdMatrix) -> DdMatrix {
        assert_eq!(self.cols, rhs.rows);
        let mut out = DdMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                for j in 0..rhs.cols {
                    let idx = i * rhs.cols + j;
                    out.data[idx] += a * rhs.get(k, j);
                }
            }
        }
        out
    }
}

/// Hermitian mean of two positive definite matrices.
pub fn hermitian_mean(kind: MeanKind, a: &DdMatrix, c: &DdMatrix) -> Option<DdMatrix> {
    Some(match kind {
        MeanKind::Arithmetic => (a + c).scale_real(0.5),
        MeanKind::Geometric => {
            let (root, inv_root) = a.hermitian_sqrt_pair()?;
            let inner = (&(&inv_root * c) * &inv_root).real_part();
            let (inner_root, _) = inner.hermitian_sqrt_pair()?;
            (&(&root * &inner_root) * &root).real_part()
        }
        MeanKind::Harmonic => (&a.inverse()? + &c.inverse()?).inverse()?.real_part().scale_real(2.0),
    })
}

/// Mean applied separately to the Toeplitz parts.
pub fn ad_mean(kind: MeanKind, t: &DdMatrix, s: &DdMatrix) -> Option<DdMatrix> {
    let real = hermitian_mean(kind, &t.real_part(), &s.real_part())?;
    let imag = hermitian_mean(kind, &t.imag_part(), &s.imag_part())?;
    Some(DdMatrix::compose(&real, &imag))
}

/// `(X⁻¹ + Y⁻¹)⁻¹`
pub fn parallel_sum(x: &DdMatrix, y: &DdMatrix) -> Option<DdMatrix> {
    (&x.inverse()? + &y.inverse()?).inverse()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    /// The violation persists in extended precision.
    Genuine,
    /// The property holds in extended precision; the double-precision violation was rounding error.
    Roundoff,
    /// The extended-precision evaluation itself broke down.
    Inconclusive,
    /// The suite has no floating-point property to re-check.
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HighPrecisionVerdict {
    pub classification: Classification,
    pub digits: u32,
    pub detail: String,
}

impl HighPrecisionVerdict {
    fn new(classification: Classification, detail: impl Into<String>) -> Self {
        Self { classification, digits: SIGNIFICANT_DIGITS, detail: detail.into() }
    }
}

/// One `lhs ≥ rhs` claim, checked on both Toeplitz parts or only the real part.
struct Claim {
    name: &'static str,
    lhs: DdMatrix,
    rhs: DdMatrix,
    hermitian_only: bool,
}

impl Claim {
    fn extended(name: &'static str, lhs: DdMatrix, rhs: DdMatrix) -> Self {
        Self { name, lhs, rhs, hermitian_only: false }
    }

    fn hermitian(name: &'static str, lhs: DdMatrix, rhs: DdMatrix) -> Self {
        Self { name, lhs, rhs, hermitian_only: true }
    }
}

fn ge_with_threshold(lhs: &DdMatrix, rhs: &DdMatrix, hermitian_only: bool, tol: &ToleranceConfig) -> (bool, Vec<f64>) {
    let diff = lhs - rhs;
    let mut parts = vec![(diff.real_part(), lhs.real_part().norm().max(rhs.real_part().norm()))];
    if !hermitian_only {
        parts.push((diff.imag_part(), lhs.imag_part().norm().max(rhs.imag_part().norm())));
    }
    let mut holds = true;
    let mut mins = Vec::new();
    for (d, scale) in parts {
        let threshold = if scale == dd(0.0) { dd(tol.psd_tol) } else { scale * dd(tol.psd_tol) };
        holds &= d.is_psd_with_margin(threshold);
        mins.push(d.min_eigenvalue_estimate());
    }
    (holds, mins)
}

fn classify_claims(claims: Option<Vec<Claim>>, tol: &ToleranceConfig) -> HighPrecisionVerdict {
    let Some(claims) = claims else {
        return HighPrecisionVerdict::new(Classification::Inconclusive, "extended-precision evaluation failed (singular block or non-convergent square root)");
    };
    let mut detail = Vec::new();
    let mut all_hold = true;
    for c in &claims {
        let (holds, mins) = ge_with_threshold(&c.lhs, &c.rhs, c.hermitian_only, tol);
        all_hold &= holds;
        let mins: Vec<String> = mins.iter().map(|m| format!("{m:e}")).collect();
        detail.push(format!("{}: {} (min eigenvalues of difference parts [{}])", c.name, if holds { "holds" } else { "fails" }, mins.join(", ")));
    }
    let class = if all_hold { Classification::Roundoff } else { Classification::Genuine };
    HighPrecisionVerdict::new(class, detail.join("; "))
}

fn classify_residual(pair: Option<(DdMatrix, DdMatrix)>, tol: &ToleranceConfig) -> HighPrecisionVerdict {
    let Some((lhs, rhs)) = pair else {
        return HighPrecisionVerdict::new(Classification::Inconclusive, "extended-precision evaluation failed (singular block or non-convergent square root)");
    };
    let abs = (&lhs - &rhs).norm();
    let scale = lhs.norm().max(rhs.norm());
    let rel = if scale == dd(0.0) { abs } else { dd_div(abs, scale) };
    let class = if rel.hi() <= tol.eq_tol { Classification::Roundoff } else { Classification::Genuine };
    HighPrecisionVerdict::new(class, format!("relative residual {:e}", rel.hi()))
}

fn input(w: &Witness, name: &str) -> Option<DdMatrix> {
    let file = w.inputs.iter().find(|m| m.name == name)?;
    Some(DdMatrix::from_matrix(&file.matrix.to_matrix().ok()?))
}

fn indexed_pairs(w: &Witness) -> Option<Vec<(DdMatrix, DdMatrix)>> {
    let mut pairs = Vec::new();
    for k in 1.. {
        match (input(w, &format!("T{k}")), input(w, &format!("S{k}"))) {
            (Some(t), Some(s)) => pairs.push((t, s)),
            _ => break,
        }
    }
    (!pairs.is_empty()).then_some(pairs)
}

fn sum(ms: impl Iterator<Item = DdMatrix>) -> Option<DdMatrix> {
    ms.reduce(|a, b| &a + &b)
}

fn claims_for(suite: Suite, w: &Witness) -> Option<Vec<Claim>> {
    let kind = w.kind.unwrap_or(MeanKind::Geometric);
    let k = w.split.unwrap_or(1);
    let herm_schur = |m: &DdMatrix| m.schur_complement(k).map(|x| x.real_part());
    Some(match suite {
        Suite::Amgmhm => {
            let (t, s) = (input(w, "T")?, input(w, "S")?);
            let am = ad_mean(MeanKind::Arithmetic, &t, &s)?;
            let gm = ad_mean(MeanKind::Geometric, &t, &s)?;
            let hm = ad_mean(MeanKind::Harmonic, &t, &s)?;
            vec![Claim::extended("AM >= GM", am, gm.clone()), Claim::extended("GM >= HM", gm, hm)]
        }
        Suite::SuperaddGeo | Suite::SuperaddHarm => {
            let kind = if suite == Suite::SuperaddGeo { MeanKind::Geometric } else { MeanKind::Harmonic };
            let pairs = indexed_pairs(w)?;
            let sum_t = sum(pairs.iter().map(|p| p.0.clone()))?;
            let sum_s = sum(pairs.iter().map(|p| p.1.clone()))?;
            let lhs = ad_mean(kind, &sum_t, &sum_s)?;
            let rhs = sum(pairs.iter().map(|(t, s)| ad_mean(kind, t, s)).collect::<Option<Vec<_>>>()?.into_iter())?;
            vec![Claim::extended("superadditivity", lhs, rhs)]
        }
        Suite::Thm34 => {
            let (t, s) = (input(w, "T")?, input(w, "S")?);
            let twice = parallel_sum(&t, &s)?.scale_real(2.0);
            vec![Claim::extended("2(T:S) >= T!S", twice, ad_mean(MeanKind::Harmonic, &t, &s)?)]
        }
        Suite::PdSchurMean => {
            let (a, c) = (input(w, "A")?, input(w, "C")?);
            let lhs = herm_schur(&hermitian_mean(kind, &a, &c)?)?;
            let rhs = hermitian_mean(kind, &herm_schur(&a)?, &herm_schur(&c)?)?;
            vec![Claim::hermitian("Schur complement of mean", lhs, rhs)]
        }
        Suite::Fm => {
            let (a, b) = (input(w, "A")?, input(w, "B")?);
            let lhs = herm_schur(&(&a + &b))?;
            let rhs = &herm_schur(&a)? + &herm_schur(&b)?;
            vec![Claim::hermitian("Schur complement of sum", lhs, rhs)]
        }
        Suite::MixedSchur => {
            let (a, b) = (input(w, "A")?, input(w, "B")?);
            let lhs = DdMatrix::compose(&a, &b).schur_complement(k)?;
            let rhs = DdMatrix::compose(&herm_schur(&a)?, &herm_schur(&b)?);
            vec![Claim::extended("mixed Schur complement", lhs, rhs)]
        }
        Suite::LowerBoundChain => {
            let (t, s) = (input(w, "T")?, input(w, "S")?);
            let mean_re = hermitian_mean(kind, &t.real_part(), &s.real_part())?;
            let mean_im = hermitian_mean(kind, &t.imag_part(), &s.imag_part())?;
            let top = DdMatrix::compose(&mean_re, &mean_im).schur_complement(k)?;
            let middle = DdMatrix::compose(&herm_schur(&mean_re)?, &herm_schur(&mean_im)?);
            let part = |x: &DdMatrix, y: &DdMatrix| hermitian_mean(kind, &herm_schur(x)?, &herm_schur(y)?);
            let bottom = DdMatrix::compose(&part(&t.real_part(), &s.real_part())?, &part(&t.imag_part(), &s.imag_part())?);
            vec![Claim::extended("first step", top, middle.clone()), Claim::extended("second step", middle, bottom)]
        }
        Suite::Question42Survey => {
            let (t, s) = (input(w, "T")?, input(w, "S")?);
            let lhs = ad_mean(kind, &t, &s)?.schur_complement(k)?;
            let rhs = ad_mean(kind, &t.schur_complement(k)?, &s.schur_complement(k)?)?;
            vec![Claim::extended("conjectured inequality", lhs, rhs)]
        }
        _ => return None,
    })
}

fn residual_for(suite: Suite, w: &Witness) -> Option<(DdMatrix, DdMatrix)> {
    let k = w.split.unwrap_or(1);
    match suite {
        Suite::Congruence => {
            let (t, s, q) = (input(w, "T")?, input(w, "S")?, input(w, "Q")?);
            let qh = q.adjoint();
            let cong = |m: &DdMatrix| &(&qh * m) * &q;
            let lhs = ad_mean(MeanKind::Geometric, &cong(&t), &cong(&s))?;
            Some((lhs, cong(&ad_mean(MeanKind::Geometric, &t, &s)?)))
        }
        Suite::Identities | Suite::Smw => {
            let t = input(w, "T")?;
            let (a, b) = (t.real_part(), t.imag_part());
            let (a_inv, b_inv) = (a.inverse()?, b.inverse()?);
            let real_core = &a + &(&(&b * &a_inv) * &b);
            let imag_core = &b + &(&(&a * &b_inv) * &a);
            let (e, g) = (real_core.inverse()?, imag_core.inverse()?);
            if suite == Suite::Smw {
                let a_inv_b = &a_inv * &b;
                let rhs = &a_inv - &(&(&a_inv_b * &e) * &a_inv_b.adjoint());
                return Some((e, rhs));
            }
            // Stack both identities so one residual covers them.
            let first = &e + &(&(&g * &real_core) * &g);
            let second = &g + &(&(&e * &imag_core) * &e);
            let n = a.rows();
            let mut lhs = DdMatrix::zeros(2 * n, n);
            let mut rhs = DdMatrix::zeros(2 * n, n);
            for i in 0..n {
                for j in 0..n {
                    lhs.set(i, j, a_inv.get(i, j));
                    lhs.set(n + i, j, b_inv.get(i, j));
                    rhs.set(i, j, first.get(i, j));
                    rhs.set(n + i, j, second.get(i, j));
                }
            }
            Some((lhs, rhs))
        }
        Suite::Lemma31 => {
            let (a, b) = (input(w, "A")?, input(w, "B")?);
            let n = a.rows();
            let m = n - k;
            let a22_inv = a.block(k, k, m, m).inverse()?;
            let b22_inv = b.block(k, k, m, m).inverse()?;
            let core = (&a22_inv + &b22_inv).inverse()?;
            let x = &(&a.block(0, k, k, m) * &a22_inv) - &(&b.block(0, k, k, m) * &b22_inv);
            let y = &(&a22_inv * &a.block(k, 0, m, k)) - &(&b22_inv * &b.block(k, 0, m, k));
            let rhs = &(&a.schur_complement(k)? + &b.schur_complement(k)?) + &(&(&x * &core) * &y);
            Some(((&a + &b).schur_complement(k)?, rhs))
        }
        Suite::Prop45 => {
            let (t, s) = (input(w, "T")?, input(w, "S")?);
            let lhs = parallel_sum(&t, &s)?.schur_complement(k)?;
            let rhs = parallel_sum(&t.schur_complement(k)?, &s.schur_complement(k)?)?;
            Some((lhs, rhs))
        }
        _ => None,
    }
}

fn le_with_threshold(x: &DdMatrix, y: &DdMatrix, tol: &ToleranceConfig) -> bool {
    ge_with_threshold(y, x, false, tol).0
}

fn classify_order_equivalence(w: &Witness, tol: &ToleranceConfig) -> HighPrecisionVerdict {
    let eval = || {
        let (t, s) = (input(w, "T")?, input(w, "S")?);
        let g = ad_mean(MeanKind::Geometric, &t, &s)?;
        Some((le_with_threshold(&g, &s, tol), le_with_threshold(&t, &s, tol), le_with_threshold(&t, &g, tol)))
    };
    match eval() {
        None => HighPrecisionVerdict::new(Classification::Inconclusive, "extended-precision evaluation failed"),
        Some((a, b, c)) => {
            let class = if a == b && b == c { Classification::Roundoff } else { Classification::Genuine };
            HighPrecisionVerdict::new(class, format!("(T#S<=S, T<=S, T<=T#S) = ({a}, {b}, {c})"))
        }
    }
}

/// Re-evaluates a witness of `suite` in double-double arithmetic.
pub fn classify(suite: Suite, witness: &Witness, tol: &ToleranceConfig) -> HighPrecisionVerdict {
    match suite {
        Suite::WorkedExamples => {
            HighPrecisionVerdict::new(Classification::NotApplicable, "fixed examples are compared against printed values")
        }
        Suite::OrderEquiv => classify_order_equivalence(witness, tol),
        Suite::Congruence | Suite::Identities | Suite::Smw | Suite::Lemma31 | Suite::Prop45 => {
            classify_residual(residual_for(suite, witness), tol)
        }
        _ => classify_claims(claims_for(suite, witness), tol),
    }
}
