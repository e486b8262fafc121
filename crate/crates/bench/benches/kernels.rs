//! Microbenchmarks for the enumeration, weighting, moment, and
//! continued-fraction kernels at desk scale.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use lukas_core::operators::{char_polys, moment, OperatorKind};
use lukas_core::paths::{weight_polynomial, Family, FamilySpec};
use lukas_core::series::{series_from_family, SeriesFamily};
use lukas_core::vcf::{cf_term, eval_finite_cf, tail_vector};
use lukas_core::CoeffTable;

fn bench_enumeration(c: &mut Criterion) {
    let spec = FamilySpec::new(Family::D, 2, 10, 0, 0).unwrap();
    c.bench_function("enumerate_excursions_p2_n10", |b| {
        b.iter(|| black_box(spec.enumerate().count()))
    });
    let walks = FamilySpec::new(Family::P, 3, 8, 0, 0).unwrap();
    c.bench_function("enumerate_walks_p3_n8", |b| {
        b.iter(|| black_box(walks.enumerate().count()))
    });
}

fn bench_weight_polynomials(c: &mut Criterion) {
    let symbolic = CoeffTable::symbolic(2);
    let spec = FamilySpec::new(Family::D, 2, 8, 0, 0).unwrap();
    c.bench_function("weight_poly_symbolic_p2_n8", |b| {
        b.iter(|| black_box(weight_polynomial(&spec, &symbolic).unwrap()))
    });
    let numeric = CoeffTable::random(3, (-16, 16), 5).unwrap();
    let walks = FamilySpec::new(Family::P, 3, 10, 0, 0).unwrap();
    c.bench_function("weight_poly_numeric_p3_n10", |b| {
        b.iter(|| black_box(weight_polynomial(&walks, &numeric).unwrap()))
    });
}

fn bench_moments(c: &mut Criterion) {
    let table = CoeffTable::symbolic(2);
    c.bench_function("moment_two_sided_p2_n8", |b| {
        b.iter(|| black_box(moment(OperatorKind::TwoSided, 8, 0, &table).unwrap()))
    });
    let numeric = CoeffTable::random(2, (-24, 24), 9).unwrap();
    c.bench_function("charpoly_numeric_p2_n8", |b| {
        b.iter(|| black_box(char_polys(8, &numeric).unwrap()))
    });
}

fn bench_series_and_cf(c: &mut Criterion) {
    let table = CoeffTable::random(2, (-24, 24), 13).unwrap();
    c.bench_function("family_series_numeric_p2_N12", |b| {
        b.iter(|| black_box(series_from_family(SeriesFamily::A, 0, 0, 12, &table).unwrap()))
    });
    let terms: Vec<_> = (1..=4).map(|k| cf_term(k, &table).unwrap()).collect();
    let tail = tail_vector(4, 12, &table).unwrap();
    c.bench_function("eval_finite_cf_tailed_p2_stages4_N12", |b| {
        b.iter(|| {
            black_box(eval_finite_cf(&terms, Some(tail.vector()), 12, &table).unwrap())
        })
    });
}

criterion_group!(
    kernels,
    bench_enumeration,
    bench_weight_polynomials,
    bench_moments,
    bench_series_and_cf
);
criterion_main!(kernels);
