//! Exact-kernel benchmarks: the weight-blocked graded-piece engine and the
//! Gröbner elimination cross-check.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use crl_bench::{quintic_32, septimic_322, sextic_33};
use crl_core::ideal_la::{graded_piece_kernel, groebner_eliminate, KernelConfig};
use crl_core::partitions::Partition;

fn bench_kernels(c: &mut Criterion) {
    let config = KernelConfig::default();
    c.bench_function("kernel (3,2) m=4 [dim 28]", |b| {
        let lambda = quintic_32();
        b.iter(|| graded_piece_kernel(black_box(&lambda), black_box(4), &config).unwrap())
    });
    c.bench_function("kernel (3,3) m=3 [dim 29]", |b| {
        let lambda = sextic_33();
        b.iter(|| graded_piece_kernel(black_box(&lambda), black_box(3), &config).unwrap())
    });
    c.bench_function("kernel (3,2,2) m=6 [dim 364]", |b| {
        let lambda = septimic_322();
        b.iter(|| graded_piece_kernel(black_box(&lambda), black_box(6), &config).unwrap())
    });
    c.bench_function("groebner eliminate twisted cubic", |b| {
        let lambda = Partition::from_parts(&[3]).unwrap();
        b.iter(|| groebner_eliminate(black_box(&lambda), &config).unwrap())
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = bench_kernels
}
criterion_main!(benches);
