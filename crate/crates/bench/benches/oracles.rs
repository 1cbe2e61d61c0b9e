use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use slitpath_bench::{unit_weights, worked_example};
use slitpath_core::oracles::{
    closed_form_numeric, enumerate_paths, interior_charpoly, matrix_series,
};
use slitpath_core::SlitSpec;

fn exact_oracles(c: &mut Criterion) {
    let (spec, w) = worked_example();
    c.bench_function("matrix_series m=9 order=24", |b| {
        b.iter(|| matrix_series(&spec, &w, 24))
    });
    c.bench_function("enumerate_paths m=9 order=16", |b| {
        b.iter(|| enumerate_paths(&spec, &w, 16).unwrap())
    });

    let mut group = c.benchmark_group("interior_charpoly");
    for m in [10usize, 20, 40] {
        let spec = SlitSpec::new(m).unwrap();
        let unit = unit_weights();
        group.bench_with_input(BenchmarkId::from_parameter(m), &spec, |b, s| {
            b.iter(|| interior_charpoly(s, &unit))
        });
    }
    group.finish();
}

fn numeric(c: &mut Criterion) {
    let (spec, w) = worked_example();
    c.bench_function("closed_form_numeric m=9", |b| {
        b.iter(|| closed_form_numeric(0.05, 1.0, &spec, &w).unwrap())
    });
}

criterion_group!(benches, exact_oracles, numeric);
criterion_main!(benches);
