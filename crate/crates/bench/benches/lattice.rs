use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use normlattice::sweep::{run_sweep, SweepCheck};
use normlattice::{enumerate_subgroups, has_dense_normalizers, normalizer_report, zm_search};
use normlattice_bench::{fixture, SPECS};

fn lattice(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_subgroups");
    group.sample_size(10);
    for spec in SPECS {
        let g = fixture(spec);
        group.bench_with_input(BenchmarkId::from_parameter(spec), &g, |b, g| {
            b.iter(|| enumerate_subgroups(g))
        });
    }
    group.finish();
}

fn normalizers(c: &mut Criterion) {
    let mut group = c.benchmark_group("normalizer_report");
    group.sample_size(10);
    for spec in SPECS {
        let g = fixture(spec);
        let lattice = enumerate_subgroups(&g);
        group.bench_with_input(BenchmarkId::from_parameter(spec), &lattice, |b, lattice| {
            b.iter(|| {
                let report = normalizer_report(&g, lattice);
                has_dense_normalizers(lattice, &report)
            })
        });
    }
    group.finish();
}

fn searches(c: &mut Criterion) {
    let mut group = c.benchmark_group("search");
    group.sample_size(10);
    group.bench_function("zm_search k=4 mn<=120", |b| {
        b.iter(|| zm_search(120, 4, None))
    });
    group.bench_function("density sweep order<=60", |b| {
        b.iter(|| run_sweep(60, SweepCheck::Density))
    });
    group.finish();
}

criterion_group!(benches, lattice, normalizers, searches);
criterion_main!(benches);
