use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qeuler_core::par::ExecMode;
use qeuler_core::verify::{run_suite, Bounds, Suite};

fn grids(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    let bounds = Bounds::default();
    for suite in [Suite::Thm3, Suite::Weighted, Suite::Zeta] {
        for (label, mode) in [("sequential", ExecMode::Sequential), ("parallel", ExecMode::Parallel)] {
            group.bench_with_input(BenchmarkId::new(suite.name(), label), &mode, |b, &mode| {
                b.iter(|| run_suite(black_box(suite), &bounds, mode).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, grids);
criterion_main!(benches);
