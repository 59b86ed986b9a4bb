use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use stablab_core::idealization::{stability_trials, Fp, IdealizationRing};
use stablab_core::sweep::{run_with, SweepConfig};
use stablab_core::Execution;

fn modes() -> Vec<(&'static str, Execution)> {
    let mut out = vec![("sequential", Execution::Sequential)];
    if stablab_core::par::is_parallel_enabled() {
        out.push(("parallel", Execution::Parallel));
    }
    out
}

fn semigroup_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("semigroup_sweep");
    group.sample_size(10);
    for genus in [6u32, 9] {
        for (name, exec) in modes() {
            group.bench_with_input(BenchmarkId::new(name, genus), &genus, |b, &g| {
                b.iter(|| run_with(black_box(SweepConfig::new(g)), exec).unwrap())
            });
        }
    }
    group.finish();
}

fn idealization_trials(c: &mut Criterion) {
    let mut group = c.benchmark_group("idealization_trials");
    group.sample_size(10);
    let ring = IdealizationRing::new::<Fp<2>>(2, 16).unwrap();
    for (name, exec) in modes() {
        group.bench_function(name, |b| b.iter(|| stability_trials::<Fp<2>>(ring, black_box(50), 7, exec)));
    }
    group.finish();
}

criterion_group!(benches, semigroup_sweep, idealization_trials);
criterion_main!(benches);
