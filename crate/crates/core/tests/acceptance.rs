//! The ten acceptance criteria, each printed as one PASS/FAIL line.
//!
//! Run with `cargo test -p binet-core --test acceptance -- --nocapture` to
//! see the lines; the test fails if any criterion fails.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use binet_core::angular::{
    casimir_ratio, casimir_suf2, commutator_identity_scan, verify_tilde, Spin,
};
use binet_core::calculus::{
    fibonacci_exponential_closed, fibonacci_exponential_sum, golden_derivative_at,
    jackson_antiderivative_fn, FnRepr,
};
use binet_core::fibonomial::{
    fib_factorial, full_y_derivative, golden_binomial, printed_polynomials, remarkable_limit,
    BinomialForm,
};
use binet_core::golden::{fib_exact, fib_extended, ratio_sequence, PHI, SQRT5};
use binet_core::hp::{Ctx, Precision};
use binet_core::oscillator::{
    build_ladder, diagonal_identities_exact, energy_ratios, spectrum, verify_oscillator_algebra,
};
use binet_core::{verify_all, Status, VerifyOptions, ZPhi};

type Criterion = (&'static str, fn() -> Verdict);

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        pass,
        detail: detail.into(),
    }
}

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm().max(1.0)
}

/// F_n for −50 ≤ n ≤ 300 by stepping the recurrence both ways from F_0, F_1.
fn recurrence_oracle() -> Vec<(i64, BigInt)> {
    let mut up = vec![BigInt::from(0), BigInt::from(1)];
    while up.len() <= 300 {
        let next = &up[up.len() - 1] + &up[up.len() - 2];
        up.push(next);
    }
    let mut out: Vec<(i64, BigInt)> = up
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, v)| (i as i64, v))
        .collect();
    let (mut hi, mut lo) = (BigInt::from(1), BigInt::from(0));
    for n in (-50..0).rev() {
        let below = &hi - &lo;
        out.push((n, below.clone()));
        hi = lo;
        lo = below;
    }
    out
}

fn fibonacci_and_binet() -> Verdict {
    let start = Instant::now();
    let mut worst = 0.0f64;
    for (n, oracle) in recurrence_oracle() {
        if fib_exact(n).unwrap() != oracle {
            return verdict(false, format!("fib_exact({n}) differs from the recurrence"));
        }
        let v = fib_extended(c(n as f64), 34).unwrap().to_c64();
        worst = worst.max(rel(v, c(oracle.to_f64().unwrap())));
    }
    let elapsed = start.elapsed();
    verdict(
        worst < 1e-12 && elapsed < Duration::from_secs(1),
        format!("-50..=300 exact; analytic rel err {worst:.1e}; {elapsed:.2?}"),
    )
}

fn spectrum_levels() -> Verdict {
    let table = spectrum(3, 1.0).unwrap();
    let expected = [(1, 2), (1, 1), (3, 2), (5, 2)];
    let got: Vec<BigRational> = table.levels.iter().map(|l| l.multiplier.clone()).collect();
    let want: Vec<BigRational> = expected
        .iter()
        .map(|&(p, q)| BigRational::new(p.into(), q.into()))
        .collect();
    verdict(
        got == want,
        format!(
            "E_0..E_3 = {}",
            got.iter()
                .map(|r| r.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        ),
    )
}

fn golden_limits() -> Verdict {
    let mut ctx = Ctx::new(Precision::new(34).unwrap());
    let fib_ratio = ctx.to_f64(&ratio_sequence(30, 34).unwrap()[29]);
    let energy_ratio = ctx.to_f64(&energy_ratios(30, 34).unwrap()[30]);
    let casimir = casimir_ratio(30).unwrap().last().unwrap().value;
    let (a, b, d) = (
        (fib_ratio - PHI).abs(),
        (energy_ratio - PHI).abs(),
        (casimir + PHI * PHI).abs(),
    );
    verdict(
        a < 1e-12 && b < 1e-12 && d < 1e-10 && (PHI - 1.618_033_988_7).abs() < 1e-10,
        format!("F ratio {a:.1e}, E ratio {b:.1e}, Casimir ratio {d:.1e}"),
    )
}

fn oscillator_algebra() -> Verdict {
    let report = verify_oscillator_algebra(&build_ladder(12).unwrap(), 1e-12).unwrap();
    let exact = diagonal_identities_exact(100).unwrap();
    verdict(
        report.pass() && report.identities.len() >= 4 && exact.is_none(),
        format!(
            "dim 12 max residual {:.1e}; diagonal forms exact to n = 100",
            report.max_residual()
        ),
    )
}

fn golden_binomial_identities() -> Verdict {
    let forms = (0..=20u32).all(|n| {
        golden_binomial(n, BinomialForm::Product).unwrap()
            == golden_binomial(n, BinomialForm::Expansion).unwrap()
    });
    let printed = printed_polynomials();
    let tabulated = printed.iter().all(|p| p.matches_definition().unwrap());
    let degrees: Vec<u32> = printed.iter().map(|p| p.degree).collect();
    let derivative = (1..=4u32).all(|k| {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        full_y_derivative(2 * k).unwrap()
            == ZPhi::from_int(fib_factorial(2 * k as i64).unwrap() * sign)
    });
    verdict(
        forms && tabulated && derivative && degrees == [1, 2, 3, 4, 5, 6, 7],
        format!("forms {forms}, tabulated {tabulated}, y-derivative {derivative}"),
    )
}

fn summation_formula() -> Verdict {
    let sum = fibonacci_exponential_sum(40);
    let closed = (0.5f64).exp() * (SQRT5 / 2.0).sinh() / (SQRT5 / 2.0);
    let d = (sum - closed).abs();
    verdict(
        d < 1e-12
            && (fibonacci_exponential_closed() - closed).abs() < 1e-15
            && (sum - 2.01432).abs() < 1e-5,
        format!("sum {sum:.12}, |diff| {d:.1e}"),
    )
}

fn remarkable() -> Verdict {
    let start = Instant::now();
    let mut worst = 0.0f64;
    for y in [0.5, 1.0, SQRT5] {
        worst = worst.max(remarkable_limit(c(y), 80, 60).unwrap().difference);
    }
    let elapsed = start.elapsed();
    verdict(
        worst < 1e-6 && elapsed < Duration::from_secs(1),
        format!("n = 80 max |diff| {worst:.1e}; {elapsed:.2?}"),
    )
}

fn calculus_round_trips() -> Verdict {
    let mut round_trip = 0.0f64;
    for coeffs in [&[1i64][..], &[0, 1], &[0, 0, 1]] {
        let g = FnRepr::from_int_coeffs(coeffs);
        let big_g = jackson_antiderivative_fn(&g, 200).unwrap();
        for x in [0.5, 1.0, 2.0] {
            let d = golden_derivative_at(&big_g, c(x)).unwrap();
            round_trip = round_trip.max(rel(d, g.eval(c(x)).unwrap()));
        }
    }
    let report = verify_all(&VerifyOptions {
        tol: Some(1e-10),
        only: Some("calculus.".into()),
        ..Default::default()
    })
    .unwrap();
    let wanted = [
        "calculus.leibnitz_image",
        "calculus.leibnitz_symmetric",
        "calculus.leibnitz_alpha",
        "calculus.quotient_rules",
        "calculus.taylor_basis",
    ];
    let suites = wanted
        .iter()
        .all(|id| report.entry(id).is_some_and(|e| e.status == Status::Pass));
    let exp = report
        .entry("calculus.exp_eigenrelations")
        .unwrap()
        .max_residual;
    verdict(
        round_trip < 1e-10 && suites && exp < 1e-8,
        format!("round trip {round_trip:.1e}, rule suites pass {suites}, exp eigen {exp:.1e}"),
    )
}

fn angular_momentum() -> Verdict {
    let integer = commutator_identity_scan(40).unwrap().is_none();
    let mut casimir = 0.0f64;
    for twice in 0..=12 {
        let f = casimir_suf2(Spin::from_twice(twice).unwrap());
        casimir = casimir
            .max(f.forms_residual.value)
            .max(f.eigen_residual.value);
    }
    let mut tilde = 0.0f64;
    for twice in 0..=10 {
        let r = verify_tilde(Spin::from_twice(twice).unwrap(), 1e-10);
        tilde = tilde.max(r.anticommutator_residual.value);
    }
    verdict(
        integer && casimir < 1e-12 && tilde < 1e-10,
        format!("integer identity {integer}, Casimir {casimir:.1e}, tilde {tilde:.1e}"),
    )
}

fn verification_report() -> Verdict {
    let start = Instant::now();
    let report = verify_all(&VerifyOptions::default()).unwrap();
    let elapsed = start.elapsed();
    let deviations = report.known_deviations();
    let expected = [
        "deviation.golden_pi",
        "deviation.integral_notation",
        "deviation.inversion_branch",
    ];
    let schema: serde_json::Value =
        serde_json::from_str(include_str!("../schema/verification_report.schema.json")).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let instance = serde_json::to_value(&report).unwrap();
    let valid = validator.is_valid(&instance);
    verdict(
        report.summary.fail == 0
            && deviations == expected
            && valid
            && elapsed < Duration::from_secs(60),
        format!(
            "{} pass, {} fail, {} known-deviation; schema valid {valid}; {elapsed:.2?}",
            report.summary.pass, report.summary.fail, report.summary.known_deviation
        ),
    )
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 10] = [
        ("fibonacci and binet", fibonacci_and_binet),
        ("spectrum levels", spectrum_levels),
        ("golden-ratio limits", golden_limits),
        ("oscillator algebra", oscillator_algebra),
        ("golden binomial", golden_binomial_identities),
        ("summation formula", summation_formula),
        ("remarkable limit", remarkable),
        ("calculus round trips", calculus_round_trips),
        ("angular momentum", angular_momentum),
        ("verification report", verification_report),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let v = run();
        println!(
            "{} criterion {:>2} {name}: {}",
            if v.pass { "PASS" } else { "FAIL" },
            i + 1,
            v.detail
        );
        if !v.pass {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
