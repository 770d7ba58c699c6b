use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use lbs_core::gen::{self, GenKind, GenSpec};
use lbs_core::{linear, Oracle};
use std::hint::black_box;

fn bench_lbsl(c: &mut Criterion) {
    let mut group = c.benchmark_group("lbsl");
    for size in [100_000usize, 1_000_000, 4_000_000] {
        let input = gen::uniform(size, 42);
        group.throughput(Throughput::Bytes(size as u64));
        group.bench_with_input(BenchmarkId::from_parameter(size), &input, |b, input| {
            b.iter(|| linear::lbsl(black_box(input)).unwrap());
        });
    }
    group.finish();
}

fn bench_lbs(c: &mut Criterion) {
    let mut group = c.benchmark_group("lbs");
    group.sample_size(20);
    for size in [100_000usize, 1_000_000] {
        let input = gen::uniform(size, 42);
        group.throughput(Throughput::Bytes(size as u64));
        group.bench_with_input(BenchmarkId::from_parameter(size), &input, |b, input| {
            b.iter(|| linear::lbs(black_box(input)).unwrap());
        });
    }
    group.finish();
}

fn bench_input_shapes(c: &mut Criterion) {
    let mut group = c.benchmark_group("lbsl_shapes");
    let size = 1_000_000;
    for kind in [GenKind::Uniform, GenKind::AdversarialDeep, GenKind::AdversarialFlat] {
        let input = gen::generate(&GenSpec { kind, len: size, seed: 42 }).unwrap();
        group.throughput(Throughput::Bytes(size as u64));
        group.bench_with_input(BenchmarkId::from_parameter(kind), &input, |b, input| {
            b.iter(|| linear::lbsl(black_box(input)).unwrap());
        });
    }
    group.finish();
}

fn bench_oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle_lbs");
    group.sample_size(20);
    let oracle = Oracle::new();
    for size in [200usize, 1_000] {
        let input = gen::uniform(size, 42);
        group.bench_with_input(BenchmarkId::from_parameter(size), &input, |b, input| {
            b.iter(|| oracle.lbs(black_box(input)).unwrap());
        });
    }
    group.finish();
}

criterion_group!(benches, bench_lbsl, bench_lbs, bench_input_shapes, bench_oracle);
criterion_main!(benches);
