//! Property suites: each trial draws a seeded random instance, evaluates one
//! inequality or identity, and records a replayable witness when it fails.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::Error;
use crate::harness::exec::{map_trials, Execution};
use crate::harness::generate::{random_ad, random_general, random_pd, trial_rng, InstanceSpec};
use crate::harness::highprec::{self, HighPrecisionVerdict};
use crate::harness::matrix_file::MatrixFile;
use crate::harness::registry::REGISTRY;
use crate::linalg::{ComplexSquareMatrix, HermitianMatrix};
use crate::means::{
    check_amgmhm, check_congruence, check_order_equivalences, check_superadditivity, MeanKind,
};
use crate::order::{AccretiveDissipativeMatrix, OrderRelation};
use crate::residual::Residual;
use crate::schur::{
    check_fm_inequality, check_lower_bound_chain, check_mixed_schur, check_parallel_vs_harmonic,
    check_pd_schur_mean, compare_parallel_vs_geometric, evaluate_question_42, identity_residuals,
    parallel_sum_schur_equality, schur_sum_decomposition, smw_residual, ArithmeticForm, BlockPartition,
    InputMode,
};
use crate::tol::ToleranceConfig;

/// Version of the [`PropertyReport`] JSON layout.
pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    #[serde(rename = "paper-examples")]
    WorkedExamples,
    Amgmhm,
    SuperaddGeo,
    SuperaddHarm,
    Congruence,
    OrderEquiv,
    Thm34,
    Lemma31,
    Identities,
    Smw,
    Prop45,
    PdSchurMean,
    MixedSchur,
    Fm,
    LowerBoundChain,
    Question42Survey,
}

impl Suite {
    pub const ALL: [Suite; 16] = [
        Suite::WorkedExamples,
        Suite::Amgmhm,
        Suite::SuperaddGeo,
        Suite::SuperaddHarm,
        Suite::Congruence,
        Suite::OrderEquiv,
        Suite::Thm34,
        Suite::Lemma31,
        Suite::Identities,
        Suite::Smw,
        Suite::Prop45,
        Suite::PdSchurMean,
        Suite::MixedSchur,
        Suite::Fm,
        Suite::LowerBoundChain,
        Suite::Question42Survey,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::WorkedExamples => "paper-examples",
            Suite::Amgmhm => "amgmhm",
            Suite::SuperaddGeo => "superadd-geo",
            Suite::SuperaddHarm => "superadd-harm",
            Suite::Congruence => "congruence",
            Suite::OrderEquiv => "order-equiv",
            Suite::Thm34 => "thm34",
            Suite::Lemma31 => "lemma31",
            Suite::Identities => "identities",
            Suite::Smw => "smw",
            Suite::Prop45 => "prop45",
            Suite::PdSchurMean => "pd-schur-mean",
            Suite::MixedSchur => "mixed-schur",
            Suite::Fm => "fm",
            Suite::LowerBoundChain => "lower-bound-chain",
            Suite::Question42Survey => "question42-survey",
        }
    }

    /// A violation is the expected outcome: the suite searches for counterexamples.
    pub fn inverted_polarity(&self) -> bool {
        matches!(self, Suite::Question42Survey)
    }

    /// Suites that split matrices into blocks need at least two rows.
    fn needs_blocks(&self) -> bool {
        matches!(
            self,
            Suite::Lemma31
                | Suite::Prop45
                | Suite::PdSchurMean
                | Suite::MixedSchur
                | Suite::Fm
                | Suite::LowerBoundChain
                | Suite::Question42Survey
        )
    }

    pub fn description(&self) -> &'static str {
        match self {
            Suite::WorkedExamples => "worked examples reproduce their printed values",
            Suite::Amgmhm => "T∇S ≥ T♯S ≥ T!S",
            Suite::SuperaddGeo => "(ΣT_k)♯(ΣS_k) ≥ Σ T_k♯S_k",
            Suite::SuperaddHarm => "(ΣT_k)!(ΣS_k) ≥ Σ T_k!S_k",
            Suite::Congruence => "(Q*TQ)♯(Q*SQ) = Q*(T♯S)Q",
            Suite::OrderEquiv => "T♯S ≤ S ⇔ T ≤ S ⇔ T ≤ T♯S",
            Suite::Thm34 => "2(T:S) ≥ T!S",
            Suite::Lemma31 => "(A+B)/(A₂₂+B₂₂) = A/A₂₂ + B/B₂₂ + X(A₂₂:B₂₂)Y",
            Suite::Identities => "A⁻¹ and B⁻¹ from the parts of T⁻¹",
            Suite::Smw => "Sherman–Morrison–Woodbury form of (A+BA⁻¹B)⁻¹",
            Suite::Prop45 => "(T:S)/(T:S)₂₂ = (T/T₂₂):(S/S₂₂)",
            Suite::PdSchurMean => "(AσC)/(AσC)₂₂ ≥ (A/A₂₂)σ(C/C₂₂) for positive definite A, C",
            Suite::MixedSchur => "(A+iB)/(A₂₂+iB₂₂) ≥ A/A₂₂ + iB/B₂₂",
            Suite::Fm => "(A+B)/(A₂₂+B₂₂) ≥ A/A₂₂ + B/B₂₂",
            Suite::LowerBoundChain => "(TσS)/(TσS)₂₂ ≥ (AσC)/(AσC)₂₂ + i(BσD)/(BσD)₂₂ ≥ (A/A₂₂)σ(C/C₂₂) + i(B/B₂₂)σ(D/D₂₂)",
            Suite::Question42Survey => "search for failures of (TσS)/(TσS)₂₂ ≥ (T/T₂₂)σ(S/S₂₂)",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SuiteError {
    #[error("unknown suite '{0}'")]
    UnknownSuite(String),
    #[error("invalid instance spec: {0}")]
    InvalidSpec(Error),
}

impl FromStr for Suite {
    type Err = SuiteError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL.into_iter().find(|suite| suite.name() == s).ok_or_else(|| SuiteError::UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NamedMatrix {
    pub name: String,
    pub matrix: MatrixFile,
}

fn named(name: &str, m: &ComplexSquareMatrix) -> NamedMatrix {
    NamedMatrix { name: name.to_string(), matrix: MatrixFile::from_matrix(m) }
}

/// Everything needed to reproduce and inspect one failed trial.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub index: usize,
    pub seed: u64,
    pub dim: usize,
    pub inputs: Vec<NamedMatrix>,
    pub observed: String,
    /// Size of the leading block, for suites that split matrices.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub split: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<MeanKind>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub high_precision: Option<HighPrecisionVerdict>,
}

/// Result of one trial.
#[derive(Debug, Clone, PartialEq)]
pub struct TrialOutcome {
    pub dim: usize,
    /// The inequality or identity under test holds at tolerance.
    pub holds: bool,
    /// The trial could not be evaluated.
    pub error: bool,
    pub observed: String,
    pub relative_residual: Option<f64>,
    pub label: Option<String>,
    pub split: Option<usize>,
    pub kind: Option<MeanKind>,
    pub inputs: Vec<NamedMatrix>,
}

impl TrialOutcome {
    fn new(dim: usize, holds: bool, observed: String, inputs: Vec<NamedMatrix>) -> Self {
        Self { dim, holds, error: false, observed, relative_residual: None, label: None, split: None, kind: None, inputs }
    }

    fn with_residual(mut self, r: Residual) -> Self {
        self.relative_residual = Some(r.relative());
        self
    }

    fn with_label(mut self, label: String) -> Self {
        self.label = Some(label);
        self
    }

    fn with_split(mut self, k: usize) -> Self {
        self.split = Some(k);
        self
    }

    fn with_kind(mut self, kind: MeanKind) -> Self {
        self.kind = Some(kind);
        self
    }

    fn failed(dim: usize, err: Error) -> Self {
        Self {
            dim,
            holds: false,
            error: true,
            observed: format!("error: {err}"),
            relative_residual: None,
            label: None,
            split: None,
            kind: None,
            inputs: Vec::new(),
        }
    }

    /// Counts as a violation of the suite's property (or, for inverted suites, a found refutation).
    pub fn is_violation(&self) -> bool {
        !self.holds && !self.error
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub schema_version: u32,
    pub suite: Suite,
    pub description: String,
    /// Violations are the expected outcome (counterexample search).
    pub inverted_polarity: bool,
    pub trials: usize,
    pub violations: usize,
    pub errors: usize,
    pub witnesses: Vec<Witness>,
    pub wall_time_secs: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_relative_residual: Option<f64>,
    /// Tallies of trial labels, such as the relation found by a survey.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub outcome_counts: BTreeMap<String, usize>,
    pub spec: InstanceSpec,
    pub tolerance: ToleranceConfig,
}

impl PropertyReport {
    /// Normal suites pass with no violations; inverted suites pass once a refutation is found.
    pub fn passed(&self) -> bool {
        if self.errors > 0 {
            return false;
        }
        if self.inverted_polarity {
            self.violations > 0
        } else {
            self.violations == 0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// One-line summary.
    pub fn summary(&self) -> String {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let polarity = if self.inverted_polarity { " [inverted: violations are refutations]" } else { "" };
        let residual = self.max_relative_residual.map(|r| format!(", max relative residual {r:.3e}")).unwrap_or_default();
        format!(
            "{status} {}{polarity}: {} trials, {} violations, {} errors{residual}, {:.3}s",
            self.suite, self.trials, self.violations, self.errors, self.wall_time_secs
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct RunOptions {
    pub tol: ToleranceConfig,
    pub execution: Execution,
    /// Re-evaluate every witness in double-double arithmetic.
    pub high_precision: bool,
}

fn rel_tags(r: &OrderRelation) -> String {
    format!(
        "{} (real {} eig [{:e}, {:e}], imag {} eig [{:e}, {:e}])",
        r.tag, r.real.order, r.real.min_eigenvalue, r.real.max_eigenvalue, r.imag.order, r.imag.min_eigenvalue, r.imag.max_eigenvalue
    )
}

fn ad_inputs(t: &AccretiveDissipativeMatrix, s: &AccretiveDissipativeMatrix) -> Vec<NamedMatrix> {
    vec![named("T", t.matrix()), named("S", s.matrix())]
}

fn herm_inputs(a: &HermitianMatrix, b: &HermitianMatrix, na: &str, nb: &str) -> Vec<NamedMatrix> {
    vec![named(na, a.as_complex()), named(nb, b.as_complex())]
}

fn residual_outcome(dim: usize, r: Residual, tol: &ToleranceConfig, inputs: Vec<NamedMatrix>) -> TrialOutcome {
    TrialOutcome::new(dim, r.within(tol.eq_tol), format!("residual {:e} (scale {:e})", r.abs, r.scale), inputs)
        .with_residual(r)
}

/// Dimension of trial `index`, raised to 2 for suites that need a block split.
pub fn trial_dim(suite: Suite, spec: &InstanceSpec, index: usize) -> usize {
    let n = spec.dim_for(index);
    if suite.needs_blocks() {
        n.max(2)
    } else {
        n
    }
}

/// Ordered pair `T ≤ S` with `S = T + εP`.
fn ordered_pair<R: Rng + ?Sized>(
    n: usize,
    conditioning: f64,
    rng: &mut R,
) -> (AccretiveDissipativeMatrix, AccretiveDissipativeMatrix) {
    let t = random_ad(n, conditioning, rng);
    let p = random_ad(n, conditioning, rng);
    let eps: f64 = rng.random_range(0.05..1.0);
    let tol = ToleranceConfig { psd_tol: 0.0, pd_tol: f64::MIN_POSITIVE, eq_tol: 0.0 };
    let s = AccretiveDissipativeMatrix::new(t.matrix() + &p.matrix().scale_real(eps), &tol).expect("cone is closed under sums");
    (t, s)
}

/// Evaluates trial `index` of `suite`. Deterministic in `(suite, spec, index, tol)`.
pub fn run_trial(suite: Suite, spec: &InstanceSpec, index: usize, tol: &ToleranceConfig) -> TrialOutcome {
    let n = trial_dim(suite, spec, index);
    evaluate_trial(suite, spec, index, n, tol).unwrap_or_else(|e| TrialOutcome::failed(n, e))
}

fn evaluate_trial(
    suite: Suite,
    spec: &InstanceSpec,
    index: usize,
    n: usize,
    tol: &ToleranceConfig,
) -> crate::error::Result<TrialOutcome> {
    let cond = spec.conditioning;
    let mut rng = trial_rng(spec.seed, index);
    let rng = &mut rng;
    let kind = MeanKind::ALL[index % 3];
    Ok(match suite {
        Suite::WorkedExamples => {
            let ex = &REGISTRY[index];
            let out = ex.run(tol);
            let mut observed = out.observed;
            for f in &out.failures {
                observed.push_str(&format!("FAILED {f}\n"));
            }
            TrialOutcome::new(0, out.passed, format!("example {}: {observed}", ex.id), Vec::new())
        }
        Suite::Amgmhm => {
            let (t, s) = (random_ad(n, cond, rng), random_ad(n, cond, rng));
            let (am_gm, gm_hm) = check_amgmhm(&t, &s, tol)?;
            TrialOutcome::new(
                n,
                am_gm.is_ge() && gm_hm.is_ge(),
                format!("AM vs GM: {}; GM vs HM: {}", rel_tags(&am_gm), rel_tags(&gm_hm)),
                ad_inputs(&t, &s),
            )
        }
        Suite::SuperaddGeo | Suite::SuperaddHarm => {
            let kind = if suite == Suite::SuperaddGeo { MeanKind::Geometric } else { MeanKind::Harmonic };
            let m = rng.random_range(1..=4usize);
            let pairs: Vec<_> = (0..m).map(|_| (random_ad(n, cond, rng), random_ad(n, cond, rng))).collect();
            let r = check_superadditivity(kind, &pairs, tol)?;
            let inputs = pairs
                .iter()
                .enumerate()
                .flat_map(|(k, (t, s))| [named(&format!("T{}", k + 1), t.matrix()), named(&format!("S{}", k + 1), s.matrix())])
                .collect();
            TrialOutcome::new(n, r.is_ge(), format!("m={m}: {}", rel_tags(&r)), inputs)
        }
        Suite::Congruence => {
            let (t, s) = (random_ad(n, cond, rng), random_ad(n, cond, rng));
            let q = random_general(n, rng);
            let r = check_congruence(&t, &s, &q, tol)?;
            let mut inputs = ad_inputs(&t, &s);
            inputs.push(named("Q", &q));
            residual_outcome(n, r, tol, inputs)
        }
        Suite::OrderEquiv => {
            let ordered = rng.random_bool(0.5);
            let (t, s) = if ordered { ordered_pair(n, cond, rng) } else { (random_ad(n, cond, rng), random_ad(n, cond, rng)) };
            let eq = check_order_equivalences(&t, &s, tol)?;
            let (a, b, c) = eq.as_tuple();
            TrialOutcome::new(n, eq.agree(), format!("(T#S<=S, T<=S, T<=T#S) = ({a}, {b}, {c})"), ad_inputs(&t, &s))
                .with_label(format!("{} pair: ({a}, {b}, {c})", if ordered { "ordered" } else { "independent" }))
        }
        Suite::Thm34 => {
            let (t, s) = (random_ad(n, cond, rng), random_ad(n, cond, rng));
            let r = check_parallel_vs_harmonic(&t, &s, tol)?;
            let vs_geo = compare_parallel_vs_geometric(&t, &s, tol)?;
            TrialOutcome::new(n, r.is_ge(), format!("2(T:S) vs T!S: {}", rel_tags(&r)), ad_inputs(&t, &s))
                .with_label(format!("2(T:S) vs T#S: {}", vs_geo.tag))
        }
        Suite::Lemma31 => {
            let (a, b) = (random_general(n, rng), random_general(n, rng));
            let k = rng.random_range(1..n);
            let d = schur_sum_decomposition(&a, &b, BlockPartition::new(k), tol)?;
            let out = residual_outcome(n, d.residual, tol, vec![named("A", &a), named("B", &b)]);
            TrialOutcome { observed: format!("k={k}: {}", out.observed), ..out }.with_split(k)
        }
        Suite::Identities => {
            let t = random_ad(n, cond, rng);
            let (r1, r2) = identity_residuals(&t, tol)?;
            let worst = r1.worst(r2);
            TrialOutcome::new(
                n,
                r1.within(tol.eq_tol) && r2.within(tol.eq_tol),
                format!("A^-1 residual {:e} (scale {:e}); B^-1 residual {:e} (scale {:e})", r1.abs, r1.scale, r2.abs, r2.scale),
                vec![named("T", t.matrix())],
            )
            .with_residual(worst)
        }
        Suite::Smw => {
            let t = random_ad(n, cond, rng);
            residual_outcome(n, smw_residual(&t, tol)?, tol, vec![named("T", t.matrix())])
        }
        Suite::Prop45 => {
            let k = rng.random_range(1..n);
            let p = BlockPartition::new(k);
            let (t, s, mode) = if index.is_multiple_of(2) {
                let (t, s) = (random_ad(n, cond, rng), random_ad(n, cond, rng));
                (t.into_matrix(), s.into_matrix(), InputMode::AccretiveDissipative)
            } else {
                (random_general(n, rng), random_general(n, rng), InputMode::General)
            };
            let r = parallel_sum_schur_equality(&t, &s, p, mode, tol)?;
            let out = residual_outcome(n, r, tol, vec![named("T", &t), named("S", &s)]);
            TrialOutcome { observed: format!("k={k} {mode:?}: {}", out.observed), ..out }.with_label(format!("{mode:?}")).with_split(k)
        }
        Suite::PdSchurMean => {
            let (a, c) = (random_pd(n, cond, rng), random_pd(n, cond, rng));
            let k = rng.random_range(1..n);
            let r = check_pd_schur_mean(&a, &c, kind, BlockPartition::new(k), tol)?;
            TrialOutcome::new(n, r.is_ge(), format!("k={k} {kind}: {}", rel_tags(&r)), herm_inputs(&a, &c, "A", "C"))
                .with_label(format!("{kind}: {}", r.tag))
                .with_split(k)
                .with_kind(kind)
        }
        Suite::MixedSchur | Suite::Fm => {
            let (a, b) = (random_pd(n, cond, rng), random_pd(n, cond, rng));
            let k = rng.random_range(1..n);
            let p = BlockPartition::new(k);
            let r = if suite == Suite::Fm { check_fm_inequality(&a, &b, p, tol)? } else { check_mixed_schur(&a, &b, p, tol)? };
            TrialOutcome::new(n, r.is_ge(), format!("k={k}: {}", rel_tags(&r)), herm_inputs(&a, &b, "A", "B"))
                .with_label(r.tag.to_string())
                .with_split(k)
        }
        Suite::LowerBoundChain => {
            let (t, s) = (random_ad(n, cond, rng), random_ad(n, cond, rng));
            let k = rng.random_range(1..n);
            let (first, second) = check_lower_bound_chain(&t, &s, kind, BlockPartition::new(k), tol)?;
            TrialOutcome::new(
                n,
                first.is_ge() && second.is_ge(),
                format!("k={k} {kind}: first {}; second {}", rel_tags(&first), rel_tags(&second)),
                ad_inputs(&t, &s),
            )
            .with_split(k)
            .with_kind(kind)
        }
        Suite::Question42Survey => {
            let (t, s) = (random_ad(n, cond, rng), random_ad(n, cond, rng));
            let k = rng.random_range(1..n);
            let out = evaluate_question_42(&t, &s, kind, ArithmeticForm::Mean, BlockPartition::new(k), tol)?;
            let holds = out.relation.is_ge();
            TrialOutcome::new(
                n,
                holds,
                format!("k={k} {kind}: {}{}", rel_tags(&out.relation), if holds { "" } else { "; conjecture falsified" }),
                ad_inputs(&t, &s),
            )
            .with_label(format!("{kind}: {}", out.relation.tag))
            .with_split(k)
            .with_kind(kind)
        }
    })
}

fn trial_count(suite: Suite, spec: &InstanceSpec) -> usize {
    match suite {
        Suite::WorkedExamples => REGISTRY.len(),
        _ => spec.count,
    }
}

pub fn run_suite(suite: Suite, spec: &InstanceSpec, opts: &RunOptions) -> Result<PropertyReport, SuiteError> {
    spec.validate().map_err(SuiteError::InvalidSpec)?;
    opts.tol.validate().map_err(SuiteError::InvalidSpec)?;
    let started = Instant::now();
    let count = trial_count(suite, spec);
    let tol = opts.tol;
    let outcomes = map_trials(count, opts.execution, |i| run_trial(suite, spec, i, &tol));

    let mut violations = 0;
    let mut errors = 0;
    let mut witnesses = Vec::new();
    let mut max_residual: Option<f64> = None;
    let mut outcome_counts = BTreeMap::new();
    for (index, out) in outcomes.into_iter().enumerate() {
        if let Some(r) = out.relative_residual {
            max_residual = Some(max_residual.map_or(r, |m: f64| m.max(r)));
        }
        if let Some(label) = &out.label {
            *outcome_counts.entry(label.clone()).or_insert(0) += 1;
        }
        if out.error {
            errors += 1;
        } else if out.is_violation() {
            violations += 1;
        } else {
            continue;
        }
        witnesses.push(Witness {
            index,
            seed: spec.seed,
            dim: out.dim,
            inputs: out.inputs,
            observed: out.observed,
            split: out.split,
            kind: out.kind,
            high_precision: None,
        });
    }

    if opts.high_precision {
        let verdicts = map_trials(witnesses.len(), opts.execution, |w| highprec::classify(suite, &witnesses[w], &tol));
        for (w, verdict) in witnesses.iter_mut().zip(verdicts) {
            w.high_precision = Some(verdict);
        }
    }

    Ok(PropertyReport {
        schema_version: REPORT_SCHEMA_VERSION,
        suite,
        description: suite.description().to_string(),
        inverted_polarity: suite.inverted_polarity(),
        trials: count,
        violations,
        errors,
        witnesses,
        wall_time_secs: started.elapsed().as_secs_f64(),
        max_relative_residual: max_residual,
        outcome_counts,
        spec: *spec,
        tolerance: tol,
    })
}

/// [`run_suite`] by name.
pub fn run_suite_named(name: &str, spec: &InstanceSpec, opts: &RunOptions) -> Result<PropertyReport, SuiteError> {
    run_suite(name.parse()?, spec, opts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::highprec::Classification;

    fn spec(dim: usize, count: usize) -> InstanceSpec {
        InstanceSpec::new(dim, 7, 100.0, count).unwrap()
    }

    #[test]
    fn names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
            let json = serde_json::to_string(&suite).unwrap();
            assert_eq!(json, format!("\"{}\"", suite.name()));
        }
        assert_eq!("nope".parse::<Suite>(), Err(SuiteError::UnknownSuite("nope".into())));
    }

    #[test]
    fn unknown_suite_by_name() {
        let err = run_suite_named("thm99", &spec(2, 1), &RunOptions::default()).unwrap_err();
        assert!(matches!(err, SuiteError::UnknownSuite(_)));
    }

    #[test]
    fn every_normal_suite_passes_small_runs() {
        let spec = spec(4, 24).with_min_dim(1).unwrap();
        for suite in Suite::ALL {
            if suite.inverted_polarity() || suite == Suite::WorkedExamples {
                continue;
            }
            let report = run_suite(suite, &spec, &RunOptions::default()).unwrap();
            assert!(report.passed(), "{}\n{:#?}", report.summary(), report.witnesses.first());
            assert_eq!(report.trials, 24);
        }
    }

    #[test]
    fn worked_examples_cover_registry() {
        let report = run_suite(Suite::WorkedExamples, &spec(2, 1), &RunOptions::default()).unwrap();
        assert_eq!(report.trials, REGISTRY.len());
        assert!(report.violations <= report.trials);
    }

    #[test]
    fn question42_survey_finds_refutations() {
        let report = run_suite(Suite::Question42Survey, &spec(2, 200), &RunOptions::default()).unwrap();
        assert!(report.inverted_polarity);
        assert!(report.violations > 0);
        assert!(report.passed());
        assert!(report.witnesses.iter().all(|w| w.observed.contains("conjecture falsified")));
    }

    #[test]
    fn witnesses_replay_bit_for_bit() {
        let tol = ToleranceConfig::default();
        let spec = spec(3, 60);
        let report = run_suite(Suite::Question42Survey, &spec, &RunOptions::default()).unwrap();
        let w = report.witnesses.first().expect("survey finds a witness");
        let again = run_trial(Suite::Question42Survey, &spec, w.index, &tol);
        assert_eq!(again.observed, w.observed);
        assert_eq!(again.inputs, w.inputs);
        assert_eq!(again.split, w.split);
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let spec = spec(3, 40);
        let run = |execution| {
            let mut r = run_suite(Suite::Question42Survey, &spec, &RunOptions { execution, ..RunOptions::default() }).unwrap();
            r.wall_time_secs = 0.0;
            r
        };
        assert_eq!(run(Execution::Sequential), run(Execution::Parallel));
    }

    #[test]
    fn report_json_round_trip() {
        let report = run_suite(Suite::Question42Survey, &spec(2, 30), &RunOptions::default()).unwrap();
        let back = PropertyReport::from_json(&report.to_json()).unwrap();
        assert_eq!(back, report);
    }

    #[test]
    fn high_precision_confirms_refutations() {
        let opts = RunOptions { high_precision: true, ..RunOptions::default() };
        let report = run_suite(Suite::Question42Survey, &spec(2, 60), &opts).unwrap();
        assert!(!report.witnesses.is_empty());
        for w in &report.witnesses {
            let verdict = w.high_precision.as_ref().unwrap();
            assert_eq!(verdict.classification, Classification::Genuine, "{}", verdict.detail);
        }
    }

    #[test]
    fn block_suites_use_at_least_two_rows() {
        let spec = spec(1, 3);
        assert_eq!(trial_dim(Suite::Fm, &spec, 0), 2);
        assert_eq!(trial_dim(Suite::Thm34, &spec, 0), 1);
    }
}
