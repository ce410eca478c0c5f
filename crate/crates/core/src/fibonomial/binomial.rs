use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{GoldenError, Result};
use crate::fibonomial::factorial::fibonomial_row;
use crate::fibonomial::poly::BivarPoly;
use crate::golden::{phi_pow, ZPhi};

pub const BINOMIAL_LIMIT: u32 = 30;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BinomialForm {
    /// Π_{j<n} (x + (−1)^j φ^{n−1−2j} y), multiplied out in Z[φ].
    Product,
    /// Σ_k [n,k]_F (−1)^{k(k−1)/2} x^{n−k} y^k.
    #[default]
    Expansion,
}

/// (−1)^{k(k−1)/2}: the sign pattern + + − − repeating.
pub fn triangular_sign(k: u64) -> i64 {
    if (k * k.saturating_sub(1) / 2).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn check_degree(n: u32) -> Result<()> {
    if n > BINOMIAL_LIMIT {
        return Err(GoldenError::TooLarge {
            what: "binomial degree",
            got: n as i64,
            maximum: BINOMIAL_LIMIT as i64,
        });
    }
    Ok(())
}

/// The j-th root ratio −φ^{n−1−2j} of the product form, as a Z[φ] unit.
pub fn binomial_root(n: u32, j: u32) -> ZPhi {
    let sign = ZPhi::sign(j as i64 + 1);
    &sign * &phi_pow(n as i64 - 1 - 2 * j as i64)
}

/// The golden binomial (x + y)_F^n.
pub fn golden_binomial(n: u32, form: BinomialForm) -> Result<BivarPoly> {
    check_degree(n)?;
    Ok(match form {
        BinomialForm::Product => (0..n).fold(BivarPoly::one(), |acc, j| {
            acc.mul(&BivarPoly::linear(-binomial_root(n, j)))
        }),
        BinomialForm::Expansion => {
            let row = fibonomial_row(n as usize);
            let mut p = BivarPoly::zero();
            for (k, c) in row.into_iter().enumerate() {
                let c = ZPhi::from_int(c * triangular_sign(k as u64));
                p.add_term(c, n - k as u32, k as u32);
            }
            p
        }
    })
}

/// Coefficients of (x + y)_F^n by ascending power of y.
pub fn binomial_coefficients(p: &BivarPoly, n: u32) -> Vec<ZPhi> {
    (0..=n).map(|k| p.coeff(n - k, k)).collect()
}

/// Whether (x + y)_F^n vanishes at x = t·y.
pub fn vanishes_at_ratio(p: &BivarPoly, t: &ZPhi) -> bool {
    p.eval_ratio(t).is_zero()
}

/// The constant `(−1)^k F_{2k}!`, or `(−1)^k F_{2k+1}!` for odd degree,
/// reached by differentiating (x + y)_F^n in y exactly n times.
pub fn full_y_derivative(n: u32) -> Result<ZPhi> {
    let mut p = golden_binomial(n, BinomialForm::Expansion)?;
    for _ in 0..n {
        p = p.golden_derivative_y();
    }
    Ok(p.coeff(0, 0))
}

impl BinomialForm {
    pub fn all() -> [BinomialForm; 2] {
        [BinomialForm::Product, BinomialForm::Expansion]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fibonomial::factorial::{fib_factorial, fibonomial};
    use num_traits::One;

    fn is_monic(p: &BivarPoly, n: u32) -> bool {
        p.coeff(n, 0).is_one()
    }

    fn zi(v: i64) -> ZPhi {
        ZPhi::from_int(v)
    }

    #[test]
    fn small_binomials() {
        let p1 = golden_binomial(1, BinomialForm::Product).unwrap();
        assert_eq!(p1.to_string(), "x + y");
        let p2 = golden_binomial(2, BinomialForm::Product).unwrap();
        assert_eq!(p2.to_string(), "x^2 + xy - y^2");
        let p3 = golden_binomial(3, BinomialForm::Product).unwrap();
        assert_eq!(p3.to_string(), "x^3 + 2x^2y - 2xy^2 - y^3");
        assert_eq!(
            golden_binomial(0, BinomialForm::Product).unwrap(),
            BivarPoly::one()
        );
        assert!(golden_binomial(31, BinomialForm::Expansion).is_err());
    }

    #[test]
    fn forms_agree_and_are_integral() {
        for n in 0..=20 {
            let a = golden_binomial(n, BinomialForm::Product).unwrap();
            let b = golden_binomial(n, BinomialForm::Expansion).unwrap();
            assert_eq!(a, b, "n = {n}");
            assert!(a.is_integral());
            assert!(is_monic(&a, n));
        }
    }

    #[test]
    fn roots_at_golden_powers() {
        for n in 1..=10 {
            let p = golden_binomial(n, BinomialForm::Expansion).unwrap();
            for j in 0..n {
                assert!(
                    vanishes_at_ratio(&p, &binomial_root(n, j)),
                    "n = {n}, j = {j}"
                );
            }
            assert!(!vanishes_at_ratio(&p, &zi(2)));
        }
    }

    #[test]
    fn coefficients_are_signed_fibonomials() {
        let p = golden_binomial(6, BinomialForm::Product).unwrap();
        let c = binomial_coefficients(&p, 6);
        for (k, ck) in c.iter().enumerate() {
            let expected = fibonomial(6, k as i64).unwrap() * triangular_sign(k as u64);
            assert_eq!(ck, &ZPhi::from_int(expected));
        }
    }

    #[test]
    fn repeated_y_derivative() {
        for k in 0..=4u32 {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            let even = full_y_derivative(2 * k).unwrap();
            assert_eq!(
                even,
                ZPhi::from_int(fib_factorial(2 * k as i64).unwrap() * sign)
            );
            let odd = full_y_derivative(2 * k + 1).unwrap();
            assert_eq!(
                odd,
                ZPhi::from_int(fib_factorial(2 * k as i64 + 1).unwrap() * sign)
            );
        }
    }

    #[test]
    fn sign_pattern() {
        let s: Vec<i64> = (0..8).map(triangular_sign).collect();
        assert_eq!(s, vec![1, 1, -1, -1, 1, 1, -1, -1]);
    }
}
