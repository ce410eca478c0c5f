use std::sync::Arc;

use num_complex::Complex64;
use serde::Serialize;

use crate::calculus::fnrepr::{dilations, FnRepr};
use crate::calculus::series::{accumulate, check_terms, SeriesValue, SERIES_TERM_LIMIT};
use crate::error::{GoldenError, Result};
use crate::golden::PHI;

/// Ratio Q = −1/φ² of the golden Jackson grid.
pub fn jackson_ratio() -> f64 {
    -1.0 / (PHI * PHI)
}

/// G(x) = (1 − Q) x Σ_k Q^k g(Q^k x / φ), whose golden derivative is g.
pub fn jackson_antiderivative(g: &FnRepr, x: f64, n_terms: usize) -> Result<SeriesValue> {
    check_terms(n_terms, SERIES_TERM_LIMIT)?;
    if x == 0.0 || !x.is_finite() {
        return Err(GoldenError::InvalidArgument(format!(
            "antiderivative point must be finite and nonzero, got {x}"
        )));
    }
    antiderivative_series(g, Complex64::new(x, 0.0), n_terms)
}

fn antiderivative_series(g: &FnRepr, x: Complex64, n_terms: usize) -> Result<SeriesValue> {
    let q = jackson_ratio();
    let scale = x * (1.0 - q);
    let mut qk = 1.0;
    let mut s = accumulate(n_terms, |k| {
        if k > 0 {
            qk *= q;
        }
        Ok(scale * qk * g.eval(x * qk / PHI)?)
    })?;
    s.tail_bound *= 1.0 / (1.0 - q.abs());
    Ok(s)
}

/// The antiderivative as a callable, so it can be fed back into D_F.
pub fn jackson_antiderivative_fn(g: &FnRepr, n_terms: usize) -> Result<FnRepr> {
    check_terms(n_terms, SERIES_TERM_LIMIT)?;
    let g = g.clone();
    Ok(FnRepr::Callable(Arc::new(move |x| {
        if x == Complex64::new(0.0, 0.0) {
            return Ok(x);
        }
        Ok(antiderivative_series(&g, x, n_terms)?.value)
    })))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PeriodicityReport {
    pub periodic: bool,
    pub max_defect: f64,
    pub worst_sample: f64,
}

/// Checks f(φx) = f(−x/φ) up to `tol·(1 + |f(φx)|)` at every sample.
pub fn is_golden_periodic(f: &FnRepr, samples: &[f64], tol: f64) -> Result<PeriodicityReport> {
    if samples.is_empty() {
        return Err(GoldenError::InvalidArgument("no samples given".into()));
    }
    let mut report = PeriodicityReport {
        periodic: true,
        max_defect: 0.0,
        worst_sample: samples[0],
    };
    for &x in samples {
        if x == 0.0 {
            return Err(GoldenError::InvalidArgument(
                "samples must be nonzero".into(),
            ));
        }
        let (up, down) = dilations(Complex64::new(x, 0.0));
        let a = f.eval(up)?;
        let b = f.eval(down)?;
        let defect = (a - b).norm() / (1.0 + a.norm());
        if defect > report.max_defect {
            report.max_defect = defect;
            report.worst_sample = x;
        }
        if defect > tol {
            report.periodic = false;
        }
    }
    Ok(report)
}

/// sin(π ln|x| / ln φ), a golden-periodic function.
pub fn log_periodic_example() -> FnRepr {
    FnRepr::callable(|x| {
        let arg = std::f64::consts::PI * x.norm().ln() / PHI.ln();
        Complex64::new(arg.sin(), 0.0)
    })
}

/// `n` samples spaced evenly in log|x| over [lo, hi], alternating sign.
pub fn log_spaced_samples(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let (a, b) = (lo.ln(), hi.ln());
    (0..n)
        .map(|i| {
            let t = if n > 1 {
                i as f64 / (n - 1) as f64
            } else {
                0.0
            };
            let v = (a + t * (b - a)).exp();
            if i % 2 == 0 {
                v
            } else {
                -v
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::fnrepr::golden_derivative_at;
    use crate::golden::fib_f64;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn antiderivatives_of_monomials() {
        for n in 0..=4u32 {
            let g = FnRepr::callable(move |x| x.powu(n));
            for x in [0.5, 1.0, 2.0, -1.5] {
                let big = jackson_antiderivative(&g, x, 200).unwrap().value;
                let expected = x.powi(n as i32 + 1) / fib_f64(n as i64 + 1);
                assert!((big.re - expected).abs() < 1e-12 * expected.abs().max(1.0));
            }
        }
    }

    #[test]
    fn round_trip() {
        for n in 0..=2u32 {
            let g = FnRepr::callable(move |x| x.powu(n));
            let big = jackson_antiderivative_fn(&g, 200).unwrap();
            for x in [0.5, 1.0, 2.0] {
                let d = golden_derivative_at(&big, c(x)).unwrap();
                assert!((d - c(x).powu(n)).norm() < 1e-10);
            }
        }
    }

    #[test]
    fn guards() {
        let g = FnRepr::callable(|x| x);
        assert!(jackson_antiderivative(&g, 0.0, 50).is_err());
        assert!(jackson_antiderivative(&g, 1.0, 501).is_err());
        let bad = FnRepr::fallible(|_| Err(GoldenError::Evaluation("boom".into())));
        assert!(jackson_antiderivative(&bad, 1.0, 50).is_err());
    }

    #[test]
    fn periodicity() {
        let samples = log_spaced_samples(0.05, 20.0, 20);
        assert!(
            is_golden_periodic(&FnRepr::callable(|_| c(3.0)), &samples, 1e-12)
                .unwrap()
                .periodic
        );
        assert!(
            is_golden_periodic(&log_periodic_example(), &samples, 1e-10)
                .unwrap()
                .periodic
        );
        assert!(
            !is_golden_periodic(&FnRepr::callable(|x| x), &samples, 1e-10)
                .unwrap()
                .periodic
        );
        assert!(is_golden_periodic(&FnRepr::callable(|x| x), &[], 1e-10).is_err());
    }
}
