//! Covariant benchmarks: transvectant construction and exact calibration
//! of vanishing combinations on a locus.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use crl_bench::quintic_32;
use crl_core::covariants::{calibrate_combination, generic_form, named_covariants, transvectant};

fn bench_covariants(c: &mut Criterion) {
    c.bench_function("hessian of the generic sextic", |b| {
        let f = generic_form(6);
        b.iter(|| transvectant(black_box(&f), black_box(&f), 2).unwrap())
    });
    c.bench_function("named covariants d=6", |b| {
        b.iter(|| named_covariants(black_box(6)))
    });
    c.bench_function("calibrate quintic H^2 vs iF^2", |b| {
        let named = named_covariants(5);
        let basis = [
            named["H"].pow(2),
            named["i"].mul(&named["F"].pow(2)).unwrap(),
        ];
        let lambda = quintic_32();
        b.iter(|| calibrate_combination(black_box(&basis), black_box(&lambda)).unwrap())
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = bench_covariants
}
criterion_main!(benches);
