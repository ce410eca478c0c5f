use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use num_complex::Complex64;

use binet_core::angular::{build_suf2, casimir_suf2, verify_tilde, Spin};
use binet_core::calculus::{golden_exp, jackson_antiderivative, ExpKind, FnRepr};
use binet_core::fibonomial::{fibonomial_row, golden_binomial, remarkable_limit, BinomialForm};
use binet_core::golden::{fib_exact, fib_extended};
use binet_core::oscillator::{build_ladder, verify_oscillator_algebra};
use binet_core::{verify_all, VerifyOptions};

fn fibonacci(c: &mut Criterion) {
    let mut g = c.benchmark_group("fib_exact");
    for n in [100i64, 10_000, 1_000_000] {
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| fib_exact(black_box(n)).unwrap())
        });
    }
    g.finish();

    let mut g = c.benchmark_group("fib_extended");
    for digits in [34u32, 100] {
        g.bench_with_input(BenchmarkId::from_parameter(digits), &digits, |b, &d| {
            b.iter(|| fib_extended(black_box(Complex64::new(3.7, 0.4)), d).unwrap())
        });
    }
    g.finish();
}

fn fibonomials(c: &mut Criterion) {
    c.bench_function("fibonomial_row/100", |b| {
        b.iter(|| fibonomial_row(black_box(100)))
    });
    c.bench_function("golden_binomial_product/20", |b| {
        b.iter(|| golden_binomial(black_box(20), BinomialForm::Product).unwrap())
    });
    c.bench_function("remarkable_limit/80", |b| {
        b.iter(|| remarkable_limit(black_box(Complex64::new(1.0, 0.0)), 80, 100).unwrap())
    });
}

fn calculus(c: &mut Criterion) {
    c.bench_function("golden_exp/e", |b| {
        b.iter(|| golden_exp(black_box(Complex64::new(1.3, 0.0)), ExpKind::SmallE, 200).unwrap())
    });
    let g = FnRepr::from_int_coeffs(&[1, -2, 0, 3]);
    c.bench_function("jackson_antiderivative", |b| {
        b.iter(|| jackson_antiderivative(&g, black_box(1.5), 200).unwrap())
    });
}

fn matrices(c: &mut Criterion) {
    c.bench_function("oscillator_algebra/40", |b| {
        let l = build_ladder(40).unwrap();
        b.iter(|| verify_oscillator_algebra(black_box(&l), 1e-12).unwrap())
    });
    let j = Spin::integer(10).unwrap();
    c.bench_function("build_suf2/10", |b| b.iter(|| build_suf2(black_box(j))));
    c.bench_function("casimir_suf2/10", |b| b.iter(|| casimir_suf2(black_box(j))));
    c.bench_function("verify_tilde/10", |b| {
        b.iter(|| verify_tilde(black_box(j), 1e-10))
    });
}

fn verification(c: &mut Criterion) {
    let mut g = c.benchmark_group("verify_all");
    g.sample_size(10);
    g.bench_function("default", |b| {
        b.iter(|| verify_all(&VerifyOptions::default()).unwrap())
    });
    g.finish();
}

criterion_group!(
    benches,
    fibonacci,
    fibonomials,
    calculus,
    matrices,
    verification
);
criterion_main!(benches);
