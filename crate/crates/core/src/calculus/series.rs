use num_complex::Complex64;

use crate::error::{GoldenError, Result};

/// Largest term count accepted by the series evaluators.
pub const SERIES_TERM_LIMIT: usize = 500;

/// Relative size below which a term ends the summation.
pub const SERIES_CUTOFF: f64 = 1e-30;

/// A truncated series: its partial sum, how many terms went into it, and
/// the magnitude of the first omitted term.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SeriesValue {
    pub value: Complex64,
    pub terms_used: usize,
    pub tail_bound: f64,
}

pub(crate) fn check_terms(n_terms: usize, limit: usize) -> Result<()> {
    if n_terms == 0 {
        return Err(GoldenError::TooSmall {
            what: "n_terms",
            got: 0,
            minimum: 1,
        });
    }
    if n_terms > limit {
        return Err(GoldenError::TooLarge {
            what: "n_terms",
            got: n_terms as i64,
            maximum: limit as i64,
        });
    }
    Ok(())
}

/// Sums `term(0) + term(1) + …` for at most `n_terms` terms.
///
/// Summation stops early at the first nonzero term whose magnitude falls
/// below [`SERIES_CUTOFF`] times the running sum; that term is not added and
/// its magnitude becomes the tail bound. Terms that are exactly zero never
/// stop the loop, so series with vanishing odd or even parts run on.
pub(crate) fn accumulate(
    n_terms: usize,
    mut term: impl FnMut(usize) -> Result<Complex64>,
) -> Result<SeriesValue> {
    let mut sum = Complex64::new(0.0, 0.0);
    for k in 0..n_terms {
        let t = term(k)?;
        if !t.is_finite() {
            return Err(GoldenError::Evaluation(format!(
                "series term {k} is not finite"
            )));
        }
        let mag = t.norm();
        if k > 0 && mag != 0.0 && mag < SERIES_CUTOFF * sum.norm() {
            return Ok(SeriesValue {
                value: sum,
                terms_used: k,
                tail_bound: mag,
            });
        }
        sum += t;
    }
    let next = term(n_terms).map(|t| t.norm()).unwrap_or(f64::INFINITY);
    Ok(SeriesValue {
        value: sum,
        terms_used: n_terms,
        tail_bound: next,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_series_stops_on_cutoff() {
        let s = accumulate(500, |k| Ok(Complex64::new(0.5f64.powi(k as i32), 0.0))).unwrap();
        assert!((s.value.re - 2.0).abs() < 1e-15);
        assert!(s.terms_used < 500);
        assert!(s.tail_bound < 1e-29);
    }

    #[test]
    fn exact_zero_terms_do_not_stop() {
        let s = accumulate(10, |k| {
            Ok(Complex64::new(if k % 2 == 0 { 1.0 } else { 0.0 }, 0.0))
        })
        .unwrap();
        assert_eq!(s.value.re, 5.0);
        assert_eq!(s.terms_used, 10);
    }

    #[test]
    fn term_count_guard() {
        assert!(check_terms(0, 10).is_err());
        assert!(check_terms(11, 10).is_err());
        assert!(check_terms(10, 10).is_ok());
    }
}
