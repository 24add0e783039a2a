//! Every worked numerical example, with the printed values it must reproduce.

use std::fmt::Write as _;

use num_complex::Complex64;

use crate::error::Result;
use crate::linalg::{complex_inverse, ComplexSquareMatrix, HermitianMatrix};
use crate::means::{ad_mean, commuting_normal_geometric, product_of_roots_gap, riccati_residual, MeanKind};
use crate::order::{ad_sqrt, compare_extended_order, AccretiveDissipativeMatrix, OrderTag};
use crate::schur::{
    check_parallel_vs_harmonic, compare_parallel_vs_geometric, evaluate_question_42, parallel_sum,
    ArithmeticForm, BlockPartition, SchurMeanComparison,
};
use crate::tol::ToleranceConfig;

/// Absolute budget for values printed to four decimals from inputs printed to four decimals.
pub const PRINT_TOLERANCE: f64 = 5e-4;
/// Agreement required for values known in closed form.
pub const CLOSED_FORM_TOLERANCE: f64 = 1e-9;
/// Agreement required for inverses of matrices with rational entries.
pub const RATIONAL_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone)]
pub struct ExampleOutcome {
    pub passed: bool,
    /// Computed values and relations, one `key=value` item per line.
    pub observed: String,
    /// Failed expectations.
    pub failures: Vec<String>,
}

pub struct WorkedExample {
    pub id: &'static str,
    pub title: &'static str,
    pub check: fn(&ToleranceConfig) -> Result<ExampleOutcome>,
}

impl WorkedExample {
    pub fn run(&self, tol: &ToleranceConfig) -> ExampleOutcome {
        (self.check)(tol).unwrap_or_else(|e| ExampleOutcome {
            passed: false,
            observed: String::new(),
            failures: vec![format!("evaluation error: {e}")],
        })
    }
}

#[derive(Default)]
struct Checks {
    observed: String,
    failures: Vec<String>,
}

impl Checks {
    fn note(&mut self, key: &str, value: impl std::fmt::Display) {
        let _ = writeln!(self.observed, "{key}={value}");
    }

    fn expect(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }

    fn expect_close(&mut self, key: &str, got: Complex64, want: Complex64, tol: f64) {
        self.note(key, fmt_c(got));
        let err = (got - want).norm();
        self.expect(err <= tol, format!("{key}: got {}, expected {} (|diff| {err:.3e} > {tol:e})", fmt_c(got), fmt_c(want)));
    }

    fn expect_close_re(&mut self, key: &str, got: f64, want: f64, tol: f64) {
        self.note(key, format!("{got:.6}"));
        let err = (got - want).abs();
        self.expect(err <= tol, format!("{key}: got {got:.6}, expected {want} (|diff| {err:.3e} > {tol:e})"));
    }

    fn expect_tag(&mut self, key: &str, got: OrderTag, want: &[OrderTag]) {
        self.note(key, got);
        self.expect(want.contains(&got), format!("{key}: got {got}, expected one of {want:?}"));
    }

    fn finish(self) -> ExampleOutcome {
        ExampleOutcome { passed: self.failures.is_empty(), observed: self.observed, failures: self.failures }
    }
}

fn fmt_c(z: Complex64) -> String {
    format!("{:.6}{:+.6}i", z.re, z.im)
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Dimension used for the `zI` examples; any size works.
const SCALAR_DIM: usize = 2;

fn scalar_ad(z: Complex64, tol: &ToleranceConfig) -> Result<AccretiveDissipativeMatrix> {
    AccretiveDissipativeMatrix::scalar(SCALAR_DIM, z, tol)
}

/// Common value of a scalar matrix `zI`, or the largest deviation from one.
fn scalar_value(m: &ComplexSquareMatrix) -> Complex64 {
    m.get(0, 0)
}

fn is_scalar(m: &ComplexSquareMatrix, tol: f64) -> bool {
    m.distance(&ComplexSquareMatrix::scalar(m.dim(), m.get(0, 0))) <= tol
}

const GE: &[OrderTag] = &[OrderTag::GreaterEq, OrderTag::StrictGreater];
const INCOMPARABLE: &[OrderTag] = &[OrderTag::Incomparable];

fn example_1_1(tol: &ToleranceConfig) -> Result<ExampleOutcome> {
    let mut ck = Checks::default();
    let t = scalar_ad(c(32.0, 24.0), tol)?;
    let s = scalar_ad(c(7.0, 24.0), tol)?;
    ck.expect_tag("compare(T,S)", compare_extended_order(t.matrix(), s.matrix(), tol)?.tag, &[OrderTag::GreaterEq]);
    let rt = ad_sqrt(&t, tol)?;
    let rs = ad_sqrt(&s, tol)?;
    ck.expect(is_scalar(rt.matrix(), CLOSED_FORM_TOLERANCE) && is_scalar(rs.matrix(), CLOSED_FORM_TOLERANCE), "roots not scalar");
    ck.expect_close("sqrt(T)", scalar_value(rt.matrix()), c(6.0, 2.0), CLOSED_FORM_TOLERANCE);
    ck.expect_close("sqrt(S)", scalar_value(rs.matrix()), c(4.0, 3.0), CLOSED_FORM_TOLERANCE);
    ck.expect_tag("compare(sqrt T, sqrt S)", compare_extended_order(rt.matrix(), rs.matrix(), tol)?.tag, INCOMPARABLE);
    Ok(ck.finish())
}

fn example_2_8(tol: &ToleranceConfig) -> Result<ExampleOutcome> {
    let mut ck = Checks::default();
    let t = scalar_ad(c(3.0, 4.0), tol)?;
    let s = scalar_ad(c(15.0, 8.0), tol)?;
    ck.expect_close("sqrt(T)", scalar_value(ad_sqrt(&t, tol)?.matrix()), c(2.0, 1.0), CLOSED_FORM_TOLERANCE);
    ck.expect_close("sqrt(S)", scalar_value(ad_sqrt(&s, tol)?.matrix()), c(4.0, 1.0), CLOSED_FORM_TOLERANCE);
    let g = ad_mean(MeanKind::Geometric, &t, &s, tol)?;
    ck.expect_close("T#S", scalar_value(g.matrix()), c(3.0 * 5f64.sqrt(), 4.0 * 2f64.sqrt()), CLOSED_FORM_TOLERANCE);
    let closed = commuting_normal_geometric(&t, &s, tol)?;
    ck.note("closed-form residual", format!("{:.3e}", closed.abs));
    ck.expect(closed.within(tol.eq_tol), "closed form for commuting normal pair does not match");
    let product = ad_sqrt(&t, tol)?.matrix() * ad_sqrt(&s, tol)?.matrix();
    ck.expect_close("sqrt(T)sqrt(S)", scalar_value(&product), c(7.0, 6.0), CLOSED_FORM_TOLERANCE);
    let gap = product_of_roots_gap(&t, &s, tol)?;
    ck.note("|sqrt(T)sqrt(S) - T#S|_F", format!("{gap:.6}"));
    ck.expect(gap > 0.5, "product of roots coincides with the geometric mean");
    Ok(ck.finish())
}

fn example_2_10(tol: &ToleranceConfig) -> Result<ExampleOutcome> {
    let mut ck = Checks::default();
    let t = scalar_ad(c(1.0, 1.0), tol)?;
    let s = scalar_ad(c(1.0, 2.0), tol)?;
    let g = ad_mean(MeanKind::Geometric, &t, &s, tol)?;
    ck.expect_close("T#S", scalar_value(g.matrix()), c(1.0, 2f64.sqrt()), CLOSED_FORM_TOLERANCE);
    let ricc = &(g.matrix() * &complex_inverse(t.matrix(), tol)?) * g.matrix();
    let r2 = 2f64.sqrt();
    ck.expect_close("(T#S)T^-1(T#S)", scalar_value(&ricc), c((2.0 * r2 - 1.0) / 2.0, (2.0 * r2 + 1.0) / 2.0), CLOSED_FORM_TOLERANCE);
    let residual = riccati_residual(&t, &s, tol)?;
    ck.note("riccati residual", format!("{residual:.6}"));
    ck.expect(residual > 1e-3, "geometric mean solves the Riccati equation");
    Ok(ck.finish())
}

fn example_3_8(tol: &ToleranceConfig) -> Result<ExampleOutcome> {
    let mut ck = Checks::default();
    let t = scalar_ad(c(1.0, 1.0), tol)?;
    let s = scalar_ad(c(1.0, 2.0), tol)?;
    let g = ad_mean(MeanKind::Geometric, &t, &s, tol)?;
    ck.expect_close("T#S", scalar_value(g.matrix()), c(1.0, 2f64.sqrt()), CLOSED_FORM_TOLERANCE);
    let twice = parallel_sum(t.matrix(), s.matrix(), tol)?.scale_real(2.0);
    // The printed imaginary part 6/13 contradicts 2(T:S) >= T!S; exact arithmetic gives 18/13.
    ck.expect_close("2(T:S)", scalar_value(&twice), c(14.0 / 13.0, 18.0 / 13.0), RATIONAL_TOLERANCE);
    ck.note("printed 2(T:S)", "14/13+6/13i (imaginary part inconsistent with exact arithmetic)");
    ck.expect_tag("compare(2(T:S), T#S)", compare_parallel_vs_geometric(&t, &s, tol)?.tag, INCOMPARABLE);
    ck.expect_tag("compare(2(T:S), T!S)", check_parallel_vs_harmonic(&t, &s, tol)?.tag, GE);
    Ok(ck.finish())
}

/// What a Schur-complement counterexample printed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PrintedValues {
    /// Both sides as complex scalars.
    Full { lhs: Complex64, rhs: Complex64 },
    /// Only the real parts of both sides.
    RealParts { lhs: f64, rhs: f64 },
}

/// A 2x2 counterexample to `(TσS)/(TσS)₂₂ ≥ (T/T₂₂)σ(S/S₂₂)` with entries as printed.
#[derive(Debug, Clone, Copy)]
pub struct SchurCounterexample {
    pub id: &'static str,
    pub kind: MeanKind,
    pub form: ArithmeticForm,
    /// Row-major real and imaginary parts of `T` and `S`.
    pub t_real: [f64; 4],
    pub t_imag: [f64; 4],
    pub s_real: [f64; 4],
    pub s_imag: [f64; 4],
    pub printed: PrintedValues,
}

impl SchurCounterexample {
    pub fn matrices(&self, tol: &ToleranceConfig) -> Result<(AccretiveDissipativeMatrix, AccretiveDissipativeMatrix)> {
        let build = |re: &[f64; 4], im: &[f64; 4]| -> Result<AccretiveDissipativeMatrix> {
            AccretiveDissipativeMatrix::from_parts(
                HermitianMatrix::from_real_row_slice(2, re, tol)?,
                HermitianMatrix::from_real_row_slice(2, im, tol)?,
                tol,
            )
        };
        Ok((build(&self.t_real, &self.t_imag)?, build(&self.s_real, &self.s_imag)?))
    }

    pub fn evaluate(&self, tol: &ToleranceConfig) -> Result<SchurMeanComparison> {
        let (t, s) = self.matrices(tol)?;
        evaluate_question_42(&t, &s, self.kind, self.form, BlockPartition::new(1), tol)
    }
}

pub const SCHUR_COUNTEREXAMPLES: [SchurCounterexample; 3] = [
    SchurCounterexample {
        id: "4.3-sum",
        kind: MeanKind::Arithmetic,
        form: ArithmeticForm::Sum,
        t_real: [1.0243, 0.1853, 0.1853, 3.5998],
        t_imag: [6.4574, -2.2991, -2.2991, 2.7951],
        s_real: [2.0098, -0.7586, -0.7586, 0.9167],
        s_imag: [4.5054, 2.1678, 2.1678, 2.0539],
        printed: PrintedValues::Full { lhs: Complex64::new(2.9854, 10.9817), rhs: Complex64::new(6.1415, 9.3255) },
    },
    SchurCounterexample {
        id: "4.3-geometric",
        kind: MeanKind::Geometric,
        form: ArithmeticForm::Mean,
        t_real: [1.1430, 0.2011, 0.2011, 2.2426],
        t_imag: [13.1814, 9.6876, 9.6876, 7.8507],
        s_real: [5.2840, 1.9396, 1.9396, 1.3959],
        s_imag: [4.6687, 1.9980, 1.9980, 6.0727],
        printed: PrintedValues::RealParts { lhs: 2.2423, rhs: 3.9582 },
    },
    SchurCounterexample {
        id: "4.3-harmonic",
        kind: MeanKind::Harmonic,
        form: ArithmeticForm::Mean,
        t_real: [1.3893, 0.5787, 0.5787, 2.7774],
        t_imag: [3.1981, -2.5932, -2.5932, 3.1951],
        s_real: [6.3055, 1.7288, 1.7288, 1.2695],
        s_imag: [0.9966, -0.3220, -0.3220, 1.6571],
        printed: PrintedValues::Full { lhs: Complex64::new(2.7445, 1.6561), rhs: Complex64::new(3.7687, 2.0181) },
    },
];

fn check_counterexample(ex: &SchurCounterexample, tol: &ToleranceConfig) -> Result<ExampleOutcome> {
    let mut ck = Checks::default();
    let out = ex.evaluate(tol)?;
    let (lhs, rhs) = (out.lhs.get(0, 0), out.rhs.get(0, 0));
    match ex.printed {
        PrintedValues::Full { lhs: pl, rhs: pr } => {
            ck.expect_close("lhs", lhs, pl, PRINT_TOLERANCE);
            ck.expect_close("rhs", rhs, pr, PRINT_TOLERANCE);
        }
        PrintedValues::RealParts { lhs: pl, rhs: pr } => {
            ck.note("lhs", fmt_c(lhs));
            ck.note("rhs", fmt_c(rhs));
            ck.expect_close_re("Re lhs", lhs.re, pl, PRINT_TOLERANCE);
            ck.expect_close_re("Re rhs", rhs.re, pr, PRINT_TOLERANCE);
        }
    }
    ck.note("relation", out.relation.tag);
    ck.expect(!out.relation.is_ge(), "conjectured inequality holds on a published counterexample");
    Ok(ck.finish())
}

fn example_4_3_sum(tol: &ToleranceConfig) -> Result<ExampleOutcome> {
    check_counterexample(&SCHUR_COUNTEREXAMPLES[0], tol)
}

fn example_4_3_geometric(tol: &ToleranceConfig) -> Result<ExampleOutcome> {
    check_counterexample(&SCHUR_COUNTEREXAMPLES[1], tol)
}

fn example_4_3_harmonic(tol: &ToleranceConfig) -> Result<ExampleOutcome> {
    check_counterexample(&SCHUR_COUNTEREXAMPLES[2], tol)
}

fn inverse_pair(
    tol: &ToleranceConfig,
    t: Complex64,
    s: Complex64,
    t_inv: Complex64,
    s_inv: Complex64,
    inverse_relation: &[OrderTag],
) -> Result<ExampleOutcome> {
    let mut ck = Checks::default();
    let t = scalar_ad(t, tol)?;
    let s = scalar_ad(s, tol)?;
    ck.expect_tag("compare(T,S)", compare_extended_order(t.matrix(), s.matrix(), tol)?.tag, GE);
    let ti = complex_inverse(t.matrix(), tol)?;
    let si = complex_inverse(s.matrix(), tol)?;
    ck.expect(is_scalar(&ti, RATIONAL_TOLERANCE) && is_scalar(&si, RATIONAL_TOLERANCE), "inverse not scalar");
    ck.expect_close("T^-1", scalar_value(&ti), t_inv, RATIONAL_TOLERANCE);
    ck.expect_close("S^-1", scalar_value(&si), s_inv, RATIONAL_TOLERANCE);
    ck.expect_tag("compare(T^-1,S^-1)", compare_extended_order(&ti, &si, tol)?.tag, inverse_relation);
    Ok(ck.finish())
}

fn example_4_4_incomparable(tol: &ToleranceConfig) -> Result<ExampleOutcome> {
    inverse_pair(tol, c(1.0, 2.0), c(1.0, 1.0), c(1.0 / 5.0, -2.0 / 5.0), c(0.5, -0.5), INCOMPARABLE)
}

fn example_4_4_ordered(tol: &ToleranceConfig) -> Result<ExampleOutcome> {
    inverse_pair(tol, c(2.0, 1.0), c(1.0 / 3.0, 1.0), c(2.0 / 5.0, -1.0 / 5.0), c(3.0 / 10.0, -9.0 / 10.0), GE)
}

pub const REGISTRY: &[WorkedExample] = &[
    WorkedExample { id: "1.1", title: "Loewner's theorem fails for square roots", check: example_1_1 },
    WorkedExample { id: "2.8", title: "geometric mean differs from product of roots", check: example_2_8 },
    WorkedExample { id: "2.10", title: "geometric mean does not solve the Riccati equation", check: example_2_10 },
    WorkedExample { id: "3.8", title: "no ordering between 2(T:S) and T#S", check: example_3_8 },
    WorkedExample { id: "4.3-sum", title: "Schur complement of a sum", check: example_4_3_sum },
    WorkedExample { id: "4.3-geometric", title: "Schur complement of a geometric mean", check: example_4_3_geometric },
    WorkedExample { id: "4.3-harmonic", title: "Schur complement of a harmonic mean", check: example_4_3_harmonic },
    WorkedExample { id: "4.4-incomparable", title: "inverses of an ordered pair are incomparable", check: example_4_4_incomparable },
    WorkedExample { id: "4.4-ordered", title: "inverses of an ordered pair keep the order", check: example_4_4_ordered },
];

pub fn find(id: &str) -> Option<&'static WorkedExample> {
    REGISTRY.iter().find(|e| e.id == id)
}
