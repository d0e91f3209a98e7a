use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use parry_core::complexity::closed_form_complexity;
use parry_core::numeration::{beta_integers, beta_of};
use parry_core::palindrome::closed_form_palindrome_table;
use parry_core::{
    fixed_point_prefix, quadratic_substitution, Language, QuadraticParams, RenyiExpansion,
};

fn params() -> QuadraticParams {
    QuadraticParams::new(5, 2).unwrap()
}

fn fixed_point(c: &mut Criterion) {
    let sub = quadratic_substitution(params());
    let mut g = c.benchmark_group("fixed_point_prefix");
    for len in [10_000, 1_000_000] {
        g.bench_with_input(BenchmarkId::from_parameter(len), &len, |b, &len| {
            b.iter(|| fixed_point_prefix(black_box(&sub), len))
        });
    }
    g.finish();
}

fn language(c: &mut Criterion) {
    let sub = quadratic_substitution(params());
    let mut g = c.benchmark_group("language");
    g.sample_size(20);
    for max_len in [60, 200] {
        g.bench_with_input(BenchmarkId::from_parameter(max_len), &max_len, |b, &n| {
            b.iter(|| Language::new(black_box(&sub), n))
        });
    }
    g.finish();
}

fn closed_forms(c: &mut Criterion) {
    c.bench_function("closed_form_complexity/10000", |b| {
        b.iter(|| closed_form_complexity(black_box(params()), 10_000).unwrap())
    });
    c.bench_function("closed_form_palindromes/10000", |b| {
        b.iter(|| closed_form_palindrome_table(black_box(params()), 10_000).unwrap())
    });
}

fn beta(c: &mut Criterion) {
    let renyi = RenyiExpansion::quadratic(params());
    let beta = beta_of(params(), 64).unwrap();
    let mut g = c.benchmark_group("beta_integers");
    g.sample_size(10);
    g.bench_function("1000", |b| {
        b.iter(|| beta_integers(black_box(&renyi), &beta, 1_000).unwrap())
    });
    g.finish();
}

criterion_group!(benches, fixed_point, language, closed_forms, beta);
criterion_main!(benches);
