use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use slitpath_bench::{probability_weights, unit_weights, worked_example};
use slitpath_core::genfun::{denominator, g_term, genfun};
use slitpath_core::SlitSpec;

fn worked(c: &mut Criterion) {
    let (spec, w) = worked_example();
    c.bench_function("genfun m=9 order=20", |b| {
        b.iter(|| genfun(&spec, &w, 20).unwrap())
    });
    c.bench_function("g_term n=4 m=9", |b| {
        b.iter(|| g_term(4, &spec, &w).unwrap())
    });
}

fn denominators(c: &mut Criterion) {
    let mut group = c.benchmark_group("denominator");
    for m in [10usize, 30, 60] {
        let spec = SlitSpec::new(m).unwrap();
        let unit = unit_weights();
        let prob = probability_weights();
        group.bench_with_input(BenchmarkId::new("unit", m), &spec, |b, s| {
            b.iter(|| denominator(s, &unit))
        });
        group.bench_with_input(BenchmarkId::new("probability", m), &spec, |b, s| {
            b.iter(|| denominator(s, &prob))
        });
    }
    group.finish();
}

criterion_group!(benches, worked, denominators);
criterion_main!(benches);
