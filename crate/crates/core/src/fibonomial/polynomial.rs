use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::fibonomial::binomial::{golden_binomial, BinomialForm};
use crate::fibonomial::factorial::fib_factorial;
use crate::fibonomial::poly::{BivarPoly, UnivarPoly};
use crate::golden::{fib_exact, phi_pow, ZPhi};

/// F_n! P_n(x) = (x − a)_F^n as a homogeneous polynomial in (x, a).
pub fn golden_polynomial_numerator(n: u32) -> Result<BivarPoly> {
    let p = golden_binomial(n, BinomialForm::Expansion)?;
    let mut out = BivarPoly::zero();
    for (&(i, j), c) in p.terms() {
        out.add_term(c * &ZPhi::sign(j as i64), i, j);
    }
    Ok(out)
}

/// The golden polynomial P_n(x) = (x − a)_F^n / F_n! for a concrete `a`.
pub fn golden_polynomial(n: u32, a: &BigRational) -> Result<UnivarPoly<BigRational>> {
    let num = golden_polynomial_numerator(n)?;
    let den = BigRational::from_integer(fib_factorial(n as i64)?);
    let mut coeffs = vec![BigRational::zero(); n as usize + 1];
    for (&(i, j), c) in num.terms() {
        let c = BigRational::from_integer(c.a.clone());
        coeffs[i as usize] += c * pow_rational(a, j) / &den;
    }
    Ok(UnivarPoly::new(coeffs))
}

fn pow_rational(a: &BigRational, k: u32) -> BigRational {
    (0..k).fold(BigRational::one(), |acc, _| acc * a)
}

fn signed(k: i64) -> ZPhi {
    ZPhi::sign(k)
}

fn x_minus(c: ZPhi) -> BivarPoly {
    // x − c·a
    BivarPoly::linear(-c)
}

/// Numerator of P_N as the product over its roots x = ±φ^{±k} a.
pub fn factored_root_form(degree: u32) -> BivarPoly {
    let n = (degree / 2) as i64;
    let mut p = BivarPoly::one();
    if degree.is_multiple_of(2) {
        for k in 1..=n {
            let s = signed(n + k);
            p = p.mul(&x_minus(&s * &phi_pow(2 * k - 1)));
            p = p.mul(&x_minus(-(&s * &phi_pow(1 - 2 * k))));
        }
    } else {
        p = x_minus(signed(n));
        for k in 1..=n {
            let s = signed(n + k);
            p = p.mul(&x_minus(&s * &phi_pow(2 * k)));
            p = p.mul(&x_minus(&s * &phi_pow(-2 * k)));
        }
    }
    p
}

fn quadratic(mid: BigInt, last: i64) -> BivarPoly {
    let mut q = BivarPoly::term(ZPhi::one(), 2, 0);
    q.add_term(ZPhi::from_int(mid), 1, 1);
    q.add_term(ZPhi::from_int(last), 0, 2);
    q
}

fn fib(n: i64) -> BigInt {
    fib_exact(n).expect("small index")
}

/// Numerator of P_N as a product of integer quadratics whose middle
/// coefficients are Fibonacci combinations.
pub fn factored_fibonacci_form(degree: u32) -> BivarPoly {
    let n = (degree / 2) as i64;
    let mut p = BivarPoly::one();
    if degree.is_multiple_of(2) {
        for k in 1..=n {
            let s = ZPhi::sign(n + k).a;
            let mid = -(s * (fib(2 * k - 1) + fib(2 * k - 2) * 2u32));
            p = p.mul(&quadratic(mid, -1));
        }
    } else {
        p = x_minus(signed(n));
        for k in 1..=n {
            let s = ZPhi::sign(n + k).a;
            let mid = -(s * (fib(2 * k) + fib(2 * k - 1) * 2u32));
            p = p.mul(&quadratic(mid, 1));
        }
    }
    p
}

/// A golden polynomial in the factored shape listed in the literature:
/// `numerator / denominator`, with the numerator given as factors.
#[derive(Clone, Debug)]
pub struct PrintedPolynomial {
    pub degree: u32,
    pub denominator: i64,
    pub factors: Vec<BivarPoly>,
}

impl PrintedPolynomial {
    pub fn numerator(&self) -> BivarPoly {
        self.factors
            .iter()
            .fold(BivarPoly::one(), |acc, f| acc.mul(f))
    }

    /// Compares against `golden_polynomial_numerator` and F_n!.
    pub fn matches_definition(&self) -> Result<bool> {
        let den = fib_factorial(self.degree as i64)?;
        Ok(den == BigInt::from(self.denominator)
            && self.numerator() == golden_polynomial_numerator(self.degree)?)
    }
}

fn lin(s: i64) -> BivarPoly {
    BivarPoly::linear(ZPhi::from_int(s))
}

fn quad(mid: i64, last: i64) -> BivarPoly {
    quadratic(BigInt::from(mid), last)
}

/// The tabulated P_1 … P_7.
pub fn printed_polynomials() -> Vec<PrintedPolynomial> {
    let entry = |degree, denominator, factors| PrintedPolynomial {
        degree,
        denominator,
        factors,
    };
    vec![
        entry(1, 1, vec![lin(-1)]),
        entry(2, 1, vec![quad(-1, -1)]),
        entry(3, 2, vec![lin(1), quad(-3, 1)]),
        entry(4, 2 * 3, vec![quad(1, -1), quad(-4, -1)]),
        entry(5, 2 * 3 * 5, vec![lin(-1), quad(3, 1), quad(-7, 1)]),
        entry(
            6,
            2 * 3 * 5 * 8,
            vec![quad(-1, -1), quad(4, -1), quad(-11, -1)],
        ),
        entry(
            7,
            2 * 3 * 5 * 8 * 13,
            vec![lin(1), quad(-3, 1), quad(7, 1), quad(-18, 1)],
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn low_degrees() {
        assert_eq!(
            golden_polynomial(0, &rat(1)).unwrap(),
            UnivarPoly::constant(rat(1))
        );
        let p2 = golden_polynomial(2, &rat(1)).unwrap();
        assert_eq!(p2.coeffs(), &[rat(-1), rat(-1), rat(1)]);
        // (1/2)(x + 1)(x^2 - 3x + 1) = (x^3 - 2x^2 - 2x + 1)/2
        let p3 = golden_polynomial(3, &rat(1)).unwrap();
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(p3.coeffs(), &[half.clone(), rat(-1), rat(-1), half]);
    }

    #[test]
    fn degree_is_n() {
        for n in 0..=12 {
            let p = golden_polynomial(n, &BigRational::new(3.into(), 7.into())).unwrap();
            assert_eq!(p.degree(), Some(n as usize));
        }
    }

    #[test]
    fn derivative_steps_down() {
        let a = BigRational::new((-5).into(), 3.into());
        for n in 1..=15 {
            let p = golden_polynomial(n, &a).unwrap();
            let q = golden_polynomial(n - 1, &a).unwrap();
            assert_eq!(p.golden_derivative(), q, "n = {n}");
        }
    }

    #[test]
    fn factored_forms_expand_to_definition() {
        for n in 0..=8 {
            let def = golden_polynomial_numerator(n).unwrap();
            assert_eq!(factored_root_form(n), def, "root form, n = {n}");
            assert_eq!(factored_fibonacci_form(n), def, "Fibonacci form, n = {n}");
        }
    }

    #[test]
    fn printed_table_reproduced() {
        for p in printed_polynomials() {
            assert!(p.matches_definition().unwrap(), "P_{}", p.degree);
        }
    }

    #[test]
    fn corrupted_entry_is_detected() {
        let mut p = printed_polynomials().remove(3);
        p.factors[1] = quad(4, -1);
        assert!(!p.matches_definition().unwrap());
    }
}
