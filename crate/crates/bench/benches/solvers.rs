use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use tavis_bench::workloads;
use tavis_core::{build_sector, critical_point, find_ground, solve_sector, trial_coefficients, HalfInt, NuMaxPolicy, ScanPolicy};

fn sector(c: &mut Criterion) {
    let mut group = c.benchmark_group("solve_sector");
    for (label, params) in workloads() {
        let lambda = HalfInt::nearest_with_parity(critical_point(&params).lambda_sc, params.j_half());
        let h = build_sector(&params, lambda).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(label), &h, |b, h| {
            b.iter(|| solve_sector(black_box(h)).unwrap())
        });
    }
    group.finish();
}

fn ground(c: &mut Criterion) {
    let mut group = c.benchmark_group("find_ground");
    group.sample_size(10);
    for (label, params) in workloads() {
        group.bench_with_input(BenchmarkId::from_parameter(label), &params, |b, p| {
            b.iter(|| find_ground(black_box(p), &ScanPolicy::default()).unwrap())
        });
    }
    group.finish();
}

fn trial(c: &mut Criterion) {
    let mut group = c.benchmark_group("trial_coefficients");
    for (label, params) in workloads().into_iter().take(2) {
        group.bench_with_input(BenchmarkId::from_parameter(label), &params, |b, p| {
            b.iter(|| trial_coefficients(black_box(p), &NuMaxPolicy::default()).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, sector, ground, trial);
criterion_main!(benches);
