use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ehrhart_core::{
    count_fixed_lattice_points_with_budget, ehrhart_quasipolynomial, phi_data, phi_series, Budget, CycleType,
};

fn quasipolynomial(c: &mut Criterion) {
    let mut group = c.benchmark_group("quasipolynomial");
    for lambda in ["2,1,1", "4,2,2,1,1", "1,1,1,1,1,1,1", "3,2,2,1,1,1,1,1"] {
        let lambda: CycleType = lambda.parse().unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(&lambda), &lambda, |b, l| {
            b.iter(|| ehrhart_quasipolynomial(black_box(l)))
        });
    }
    group.finish();
}

fn series(c: &mut Criterion) {
    let mut group = c.benchmark_group("phi_series");
    for lambda in ["2,1,1", "4,2,2,1,1", "2,2,1,1,1,1"] {
        let lambda: CycleType = lambda.parse().unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(&lambda), &lambda, |b, l| {
            b.iter(|| phi_series(black_box(l)))
        });
    }
    group.finish();
}

fn equivariant(c: &mut Criterion) {
    let mut group = c.benchmark_group("phi_data");
    group.sample_size(10);
    for n in [4u32, 6, 7] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| phi_data(black_box(n)))
        });
    }
    group.finish();
}

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle");
    group.sample_size(10);
    let budget = Budget::default();
    for (lambda, t) in [
        ("2,1,1", 4u64),
        ("1,1,1,1,1", 3),
        ("2,2,1,1", 4),
        ("1,1,1,1,1,1", 2),
    ] {
        let lambda: CycleType = lambda.parse().unwrap();
        let id = format!("{lambda} t={t}");
        group.bench_function(id, |b| {
            b.iter(|| count_fixed_lattice_points_with_budget(black_box(&lambda), t, &budget).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, quasipolynomial, series, equivariant, oracle);
criterion_main!(benches);
