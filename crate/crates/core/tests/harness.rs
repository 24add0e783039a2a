use admeans::harness::generate::{generate_random_ad, InstanceSpec};
use admeans::harness::registry::REGISTRY;
use admeans::harness::suites::{run_suite, run_trial, PropertyReport, RunOptions, Suite};
use admeans::harness::Execution;
use admeans::order::is_accretive_dissipative;
use admeans::ToleranceConfig;
use proptest::prelude::*;

#[test]
fn generated_stream_is_accretive_dissipative() {
    let spec = InstanceSpec::new(6, 11, 100.0, 100).unwrap();
    let all: Vec<_> = generate_random_ad(&spec).collect();
    assert_eq!(all.len(), 100);
    assert!(all.iter().all(|t| t.dim() == 6 && is_accretive_dissipative(t.matrix(), &ToleranceConfig::default())));
    let again: Vec<_> = generate_random_ad(&spec).collect();
    assert_eq!(all, again);
}

#[test]
fn scalar_instances_have_positive_parts() {
    let spec = InstanceSpec::new(1, 3, 10.0, 20).unwrap();
    for t in generate_random_ad(&spec) {
        let z = t.matrix().get(0, 0);
        assert!(z.re > 0.0 && z.im > 0.0);
    }
}

#[test]
fn worked_examples_suite_matches_registry() {
    let spec = InstanceSpec::new(2, 0, 100.0, 1).unwrap();
    let report = run_suite(Suite::WorkedExamples, &spec, &RunOptions::default()).unwrap();
    assert_eq!(report.trials, 9);
    assert_eq!(report.trials, REGISTRY.len());
    // Every failing entry is reported with its id.
    for w in &report.witnesses {
        assert!(REGISTRY.iter().any(|e| w.observed.starts_with(&format!("example {}:", e.id))));
    }
}

#[test]
fn thm34_spec_example() {
    let spec = InstanceSpec::new(4, 0, 100.0, 500).unwrap();
    let report = run_suite(Suite::Thm34, &spec, &RunOptions::default()).unwrap();
    assert_eq!(report.violations, 0, "{}", report.summary());
}

#[test]
fn question42_spec_example() {
    let spec = InstanceSpec::new(2, 0, 100.0, 1000).unwrap();
    let report = run_suite(Suite::Question42Survey, &spec, &RunOptions::default()).unwrap();
    assert!(report.inverted_polarity && report.violations > 0 && report.passed());
    assert!(report.violations <= report.trials);
    assert!(report.witnesses.iter().all(|w| w.seed == 0 && w.index < 1000));
}

#[test]
fn every_suite_is_deterministic_across_execution_modes() {
    let spec = InstanceSpec::new(3, 99, 50.0, 12).unwrap().with_min_dim(1).unwrap();
    for suite in Suite::ALL {
        let run = |execution| {
            let mut r = run_suite(suite, &spec, &RunOptions { execution, ..RunOptions::default() }).unwrap();
            r.wall_time_secs = 0.0;
            r
        };
        assert_eq!(run(Execution::Sequential), run(Execution::Parallel), "{suite}");
    }
}

#[test]
fn high_precision_reports_survive_round_trip() {
    let spec = InstanceSpec::new(3, 4, 100.0, 20).unwrap();
    let opts = RunOptions { high_precision: true, ..RunOptions::default() };
    let report = run_suite(Suite::Question42Survey, &spec, &opts).unwrap();
    assert!(report.witnesses.iter().all(|w| w.high_precision.is_some()));
    assert_eq!(PropertyReport::from_json(&report.to_json()).unwrap(), report);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn witnesses_replay_exactly(seed in any::<u64>(), dim in 2usize..=4) {
        let spec = InstanceSpec::new(dim, seed, 100.0, 30).unwrap();
        let tol = ToleranceConfig::default();
        let report = run_suite(Suite::Question42Survey, &spec, &RunOptions::default()).unwrap();
        for w in &report.witnesses {
            let again = run_trial(Suite::Question42Survey, &spec, w.index, &tol);
            prop_assert_eq!(&again.observed, &w.observed);
            prop_assert_eq!(&again.inputs, &w.inputs);
        }
    }

    #[test]
    fn reports_round_trip(seed in any::<u64>(), k in 0usize..16) {
        let suite = Suite::ALL[k];
        let spec = InstanceSpec::new(2, seed, 100.0, 4).unwrap();
        let report = run_suite(suite, &spec, &RunOptions::default()).unwrap();
        prop_assert!(report.violations <= report.trials);
        prop_assert_eq!(PropertyReport::from_json(&report.to_json()).unwrap(), report);
    }
}
