use std::hint::black_box;

use admeans::harness::generate::InstanceSpec;
use admeans::harness::suites::{run_suite, RunOptions, Suite};
use admeans::harness::Execution;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn execution_modes(c: &mut Criterion) {
    let spec = InstanceSpec::new(6, 1, 100.0, 200).unwrap().with_min_dim(2).unwrap();
    let mut group = c.benchmark_group("suites");
    group.sample_size(10);
    for suite in [Suite::Amgmhm, Suite::Thm34, Suite::Question42Survey] {
        for (label, execution) in [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)] {
            let opts = RunOptions { execution, ..RunOptions::default() };
            group.bench_with_input(BenchmarkId::new(suite.name(), label), &opts, |b, opts| {
                b.iter(|| black_box(run_suite(suite, &spec, opts).unwrap()))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, execution_modes);
criterion_main!(benches);
