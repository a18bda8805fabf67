use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qwalk_bench::hadamard_line;
use qwalk_core::{build_sequential_ab, build_spatial_eq, enumerate_words, Word};
use std::hint::black_box;

fn line_evolution(c: &mut Criterion) {
    let mut group = c.benchmark_group("hadamard_line");
    for n in [101, 1001, 10001] {
        let (walk, start) = hadamard_line(n).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, _| {
            b.iter(|| walk.evolve(black_box(&start), 50).unwrap())
        });
    }
    group.finish();
}

fn machine_acceptance(c: &mut Criterion) {
    let spatial = build_spatial_eq(8).unwrap();
    let sequential = build_sequential_ab(16).unwrap();
    let w = Word::a_m_b_m(8);
    c.bench_function("spatial_eq_16", |b| {
        b.iter(|| spatial.acceptance(black_box(&w)).unwrap())
    });
    c.bench_function("seq_ab_16", |b| {
        b.iter(|| sequential.acceptance(black_box(&w)).unwrap())
    });
}

fn sweep(c: &mut Criterion) {
    let machines: Vec<_> = (1..=10)
        .map(|n| qwalk_core::spatial_eq_for_length(n).unwrap())
        .collect();
    c.bench_function("spatial_eq_sweep_10", |b| {
        b.iter(|| {
            enumerate_words(10)
                .map(|w| machines[w.len() - 1].acceptance(&w).unwrap())
                .sum::<f64>()
        })
    });
}

criterion_group!(benches, line_evolution, machine_acceptance, sweep);
criterion_main!(benches);
