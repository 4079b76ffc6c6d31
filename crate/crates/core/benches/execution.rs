use criterion::{criterion_group, criterion_main, Criterion};
use num_rational::BigRational;
use rzero_core::fixtures;
use rzero_core::harness::check_stability;
use rzero_core::par::Execution;
use rzero_core::{analyze, Options};

fn executions() -> [(&'static str, Execution); 2] {
    [("serial", Execution::Serial), ("parallel", Execution::Parallel)]
}

fn analysis(c: &mut Criterion) {
    let mut group = c.benchmark_group("analyze_grid");
    group.sample_size(10);
    let f = fixtures::grid_identity();
    for (name, exec) in executions() {
        let opts = Options::default().with_exec(exec);
        group.bench_function(name, |b| b.iter(|| analyze(&f, &opts).unwrap()));
    }
    group.finish();
}

fn stability(c: &mut Criterion) {
    let mut group = c.benchmark_group("stability_octagon");
    group.sample_size(10);
    let f = fixtures::octagon();
    let delta = BigRational::new(1.into(), 10.into());
    for (name, exec) in executions() {
        let opts = Options::default().with_exec(exec);
        group.bench_function(name, |b| b.iter(|| check_stability(&f, &opts, &delta, 8).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, analysis, stability);
criterion_main!(benches);
