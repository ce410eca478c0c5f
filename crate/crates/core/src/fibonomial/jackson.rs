use num_complex::Complex64;

use crate::calculus::series::{accumulate, check_terms, SeriesValue};
use crate::error::{GoldenError, Result};
use crate::golden::{fib_f64, PHI, SQRT5};

pub const JACKSON_TERM_LIMIT: usize = 200;
pub const LIMIT_INDEX_MAX: usize = 200;

/// The base −φ² of the Jackson exponential appearing in the limit.
pub fn golden_jackson_base() -> f64 {
    -PHI * PHI
}

/// Basic numbers [0]_q … [n]_q via [k]_q = 1 + q[k−1]_q, which gives
/// (q^k − 1)/(q − 1) and reduces to k at q = 1.
pub fn q_numbers(q: f64, n: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(0.0);
    for k in 1..=n {
        out.push(1.0 + q * out[k - 1]);
    }
    out
}

/// Jackson exponential e_q(x) = Σ x^k / [k]_q!, summed over k < n_terms.
pub fn jackson_exp(q: f64, x: Complex64, n_terms: usize) -> Result<SeriesValue> {
    check_terms(n_terms, JACKSON_TERM_LIMIT)?;
    if !q.is_finite() {
        return Err(GoldenError::InvalidArgument(format!(
            "base q = {q} is not finite"
        )));
    }
    let nums = q_numbers(q, n_terms);
    if let Some(k) = (1..=n_terms).find(|&k| nums[k] == 0.0) {
        return Err(GoldenError::VanishingFactorial { index: k, q });
    }
    let mut term = Complex64::new(1.0, 0.0);
    accumulate(n_terms, |k| {
        if k > 0 {
            term = term * x / nums[k];
        }
        Ok(term)
    })
}

/// Finite expansion Σ_k [n,k]_F (−1)^{k(k−1)/2} y^k / φ^{nk} of
/// (1 + y/φ^n)_F^n.
pub fn remarkable_limit_lhs(y: Complex64, n: usize) -> Result<Complex64> {
    if n == 0 {
        return Err(GoldenError::TooSmall {
            what: "limit index n",
            got: 0,
            minimum: 1,
        });
    }
    if n > LIMIT_INDEX_MAX {
        return Err(GoldenError::TooLarge {
            what: "limit index n",
            got: n as i64,
            maximum: LIMIT_INDEX_MAX as i64,
        });
    }
    let scaled = y * PHI.powi(-(n as i32));
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    for k in 1..=n {
        let ratio = fib_f64((n - k + 1) as i64) / fib_f64(k as i64);
        let sign = if (k - 1) % 2 == 0 { 1.0 } else { -1.0 };
        term = term * scaled * (ratio * sign);
        sum += term;
    }
    Ok(sum)
}

/// Both sides of the limit (1 + y/φ^n)_F^n → e_{−φ²}(y/√5).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LimitReport {
    pub n: usize,
    pub lhs: Complex64,
    pub rhs: SeriesValue,
    pub difference: f64,
}

pub fn remarkable_limit(y: Complex64, n: usize, n_terms: usize) -> Result<LimitReport> {
    let lhs = remarkable_limit_lhs(y, n)?;
    let rhs = jackson_exp(golden_jackson_base(), y / SQRT5, n_terms)?;
    Ok(LimitReport {
        n,
        lhs,
        rhs,
        difference: (lhs - rhs.value).norm(),
    })
}
