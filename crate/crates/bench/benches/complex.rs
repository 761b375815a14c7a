use std::hint::black_box;

use cactus_core::complex::{build_complex, check_npc, Space};
use cactus_core::forests::enumerate_forests;
use cactus_core::hyperplanes::{compute_hyperplanes, specialness_report};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate");
    for (n, k) in [(4, 2), (5, 2), (5, 4)] {
        g.bench_with_input(BenchmarkId::from_parameter(format!("n{n}k{k}")), &(n, k), |b, &(n, k)| {
            b.iter(|| enumerate_forests(black_box(n), k))
        });
    }
    g.finish();
}

fn build(c: &mut Criterion) {
    let mut g = c.benchmark_group("build");
    for (n, space) in [(3, Space::Cover), (4, Space::Base), (4, Space::Cover)] {
        g.bench_with_input(BenchmarkId::new(space.to_string(), n), &n, |b, &n| {
            b.iter(|| build_complex(black_box(n), space).unwrap())
        });
    }
    g.finish();
}

fn checks(c: &mut Criterion) {
    let mut g = c.benchmark_group("checks");
    g.sample_size(10);
    for n in [3, 4] {
        let m = build_complex(n, Space::Cover).unwrap();
        g.bench_function(BenchmarkId::new("hyperplanes", n), |b| b.iter(|| compute_hyperplanes(&m)));
        g.bench_function(BenchmarkId::new("special", n), |b| b.iter(|| specialness_report(&m)));
        g.bench_function(BenchmarkId::new("npc", n), |b| b.iter(|| check_npc(&m)));
    }
    g.finish();
}

criterion_group!(benches, enumeration, build, checks);
criterion_main!(benches);
