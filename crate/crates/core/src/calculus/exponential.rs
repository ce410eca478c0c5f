use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::calculus::fnrepr::{big_sign, golden_difference};
use crate::calculus::series::{accumulate, check_terms, SeriesValue, SERIES_TERM_LIMIT};
use crate::error::Result;
use crate::golden::{fib_f64, SQRT5};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ExpKind {
    /// e_F^x = Σ x^n / F_n!
    #[serde(rename = "small_e")]
    SmallE,
    /// E_F^x = Σ (−1)^{n(n−1)/2} x^n / F_n!
    #[serde(rename = "big_E")]
    BigE,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TrigKind {
    #[serde(rename = "cos_F")]
    Cos,
    #[serde(rename = "sin_F")]
    Sin,
    #[serde(rename = "Cosh_F")]
    Cosh,
    #[serde(rename = "Sinh_F")]
    Sinh,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OscKind {
    Hyperbolic,
    Elliptic,
}

/// Golden exponential of either kind.
pub fn golden_exp(x: Complex64, kind: ExpKind, n_terms: usize) -> Result<SeriesValue> {
    check_terms(n_terms, SERIES_TERM_LIMIT)?;
    let mut power = Complex64::new(1.0, 0.0);
    accumulate(n_terms, |n| {
        if n > 0 {
            power = power * x / fib_f64(n as i64);
        }
        Ok(match kind {
            ExpKind::SmallE => power,
            ExpKind::BigE => power * big_sign(n),
        })
    })
}

fn combine(a: SeriesValue, b: SeriesValue, value: Complex64) -> SeriesValue {
    SeriesValue {
        value,
        terms_used: a.terms_used.max(b.terms_used),
        tail_bound: 0.5 * (a.tail_bound + b.tail_bound),
    }
}

/// cos_F and sin_F are the even and odd parts of e_F^{ix}; Cosh_F and
/// Sinh_F are the even and odd parts of E_F^x.
pub fn golden_trig(x: Complex64, kind: TrigKind, n_terms: usize) -> Result<SeriesValue> {
    let i = Complex64::i();
    Ok(match kind {
        TrigKind::Cos | TrigKind::Sin => {
            let p = golden_exp(i * x, ExpKind::SmallE, n_terms)?;
            let m = golden_exp(-i * x, ExpKind::SmallE, n_terms)?;
            let v = if kind == TrigKind::Cos {
                (p.value + m.value) / 2.0
            } else {
                (p.value - m.value) / (2.0 * i)
            };
            combine(p, m, v)
        }
        TrigKind::Cosh | TrigKind::Sinh => {
            let p = golden_exp(x, ExpKind::BigE, n_terms)?;
            let m = golden_exp(-x, ExpKind::BigE, n_terms)?;
            let v = if kind == TrigKind::Cosh {
                (p.value + m.value) / 2.0
            } else {
                (p.value - m.value) / 2.0
            };
            combine(p, m, v)
        }
    })
}

fn exp_kind(kind: OscKind) -> ExpKind {
    match kind {
        OscKind::Hyperbolic => ExpKind::SmallE,
        OscKind::Elliptic => ExpKind::BigE,
    }
}

/// A·e_F^{kt} + B·e_F^{−kt} (hyperbolic) or A·E_F^{kt} + B·E_F^{−kt}
/// (elliptic).
pub fn f_oscillator_solution(
    k: Complex64,
    kind: OscKind,
    a: Complex64,
    b: Complex64,
    t: Complex64,
    n_terms: usize,
) -> Result<Complex64> {
    let e = exp_kind(kind);
    Ok(a * golden_exp(k * t, e, n_terms)?.value + b * golden_exp(-k * t, e, n_terms)?.value)
}

/// |(D_F² ∓ k²) φ(t)| with D_F applied twice as a finite golden difference.
pub fn f_oscillator_residual(
    k: Complex64,
    kind: OscKind,
    a: Complex64,
    b: Complex64,
    t: Complex64,
    n_terms: usize,
) -> Result<f64> {
    let phi = |s: Complex64| f_oscillator_solution(k, kind, a, b, s, n_terms);
    let first = |s: Complex64| golden_difference(phi, s);
    let second = golden_difference(first, t)?;
    let value = phi(t)?;
    let sign = match kind {
        OscKind::Hyperbolic => -1.0,
        OscKind::Elliptic => 1.0,
    };
    Ok((second + sign * k * k * value).norm())
}

/// Σ_{n<n_terms} F_n / n!.
pub fn fibonacci_exponential_sum(n_terms: usize) -> f64 {
    let mut fact = 1.0;
    let mut sum = 0.0;
    for n in 0..n_terms {
        if n > 0 {
            fact *= n as f64;
        }
        sum += fib_f64(n as i64) / fact;
    }
    sum
}

/// e^{1/2} sinh(√5/2) / (√5/2), the closed form of Σ F_n / n!.
pub fn fibonacci_exponential_closed() -> f64 {
    let h = SQRT5 / 2.0;
    0.5f64.exp() * h.sinh() / h
}
