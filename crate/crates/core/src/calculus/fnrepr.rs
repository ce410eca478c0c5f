use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::calculus::series::{accumulate, check_terms, SeriesValue, SERIES_TERM_LIMIT};
use crate::error::{GoldenError, Result};
use crate::fibonomial::{fib_factorial, UnivarPoly};
use crate::golden::{fib_f64, PHI, SQRT5};

pub type Evaluator = Arc<dyn Fn(Complex64) -> Result<Complex64> + Send + Sync>;
pub type CoeffStream = Arc<dyn Fn(usize) -> Complex64 + Send + Sync>;

pub const TAYLOR_DEGREE_LIMIT: usize = 100;

/// A function the golden derivative can act on.
#[derive(Clone)]
pub enum FnRepr {
    /// Exact polynomial; D_F acts by x^n ↦ F_n x^{n−1}.
    Polynomial(UnivarPoly<BigRational>),
    /// Black-box evaluator.
    Callable(Evaluator),
    /// Σ c_{n+shift} x^n / F_n!, truncated at `n_terms`. Each D_F raises
    /// `shift` by one.
    Series {
        coeffs: CoeffStream,
        shift: usize,
        n_terms: usize,
    },
}

impl fmt::Debug for FnRepr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FnRepr::Polynomial(p) => f.debug_tuple("Polynomial").field(p).finish(),
            FnRepr::Callable(_) => f.write_str("Callable(..)"),
            FnRepr::Series { shift, n_terms, .. } => f
                .debug_struct("Series")
                .field("shift", shift)
                .field("n_terms", n_terms)
                .finish(),
        }
    }
}

impl FnRepr {
    pub fn polynomial(p: UnivarPoly<BigRational>) -> Self {
        FnRepr::Polynomial(p)
    }

    /// Polynomial from integer coefficients by ascending degree.
    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        FnRepr::Polynomial(UnivarPoly::new(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        ))
    }

    pub fn callable(f: impl Fn(Complex64) -> Complex64 + Send + Sync + 'static) -> Self {
        FnRepr::Callable(Arc::new(move |x| Ok(f(x))))
    }

    pub fn fallible(f: impl Fn(Complex64) -> Result<Complex64> + Send + Sync + 'static) -> Self {
        FnRepr::Callable(Arc::new(f))
    }

    pub fn series(
        coeffs: impl Fn(usize) -> Complex64 + Send + Sync + 'static,
        n_terms: usize,
    ) -> Result<Self> {
        check_terms(n_terms, SERIES_TERM_LIMIT)?;
        Ok(FnRepr::Series {
            coeffs: Arc::new(coeffs),
            shift: 0,
            n_terms,
        })
    }

    /// e_F^{kx} as a coefficient stream c_n = k^n.
    pub fn exp_small(k: Complex64, n_terms: usize) -> Result<Self> {
        Self::series(move |n| k.powu(n as u32), n_terms)
    }

    /// E_F^{kx} as a coefficient stream c_n = (−1)^{n(n−1)/2} k^n.
    pub fn exp_big(k: Complex64, n_terms: usize) -> Result<Self> {
        Self::series(move |n| big_sign(n) * k.powu(n as u32), n_terms)
    }

    pub fn eval(&self, x: Complex64) -> Result<Complex64> {
        match self {
            FnRepr::Polynomial(p) => Ok(p.eval(x)),
            FnRepr::Callable(f) => {
                let v = f(x)?;
                if v.is_finite() {
                    Ok(v)
                } else {
                    Err(GoldenError::Evaluation(format!(
                        "non-finite value at x = {x}"
                    )))
                }
            }
            FnRepr::Series { .. } => Ok(self.eval_series(x)?.value),
        }
    }

    /// Series evaluation with its truncation data; other variants report a
    /// single exact term.
    pub fn eval_series(&self, x: Complex64) -> Result<SeriesValue> {
        match self {
            FnRepr::Series {
                coeffs,
                shift,
                n_terms,
            } => {
                let mut power = Complex64::one();
                accumulate(*n_terms, |n| {
                    if n > 0 {
                        power = power * x / fib_f64(n as i64);
                    }
                    Ok(coeffs(n + shift) * power)
                })
            }
            _ => Ok(SeriesValue {
                value: self.eval(x)?,
                terms_used: 1,
                tail_bound: 0.0,
            }),
        }
    }
}

/// (−1)^{n(n−1)/2} as f64.
pub(crate) fn big_sign(n: usize) -> f64 {
    if (n * n.saturating_sub(1) / 2).is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

/// The two golden dilations φx and −x/φ.
pub fn dilations(x: Complex64) -> (Complex64, Complex64) {
    (x * PHI, -x / PHI)
}

/// (f(φx) − f(−x/φ)) / (√5 x) for a black-box f; undefined at x = 0.
pub fn golden_difference(
    f: impl Fn(Complex64) -> Result<Complex64>,
    x: Complex64,
) -> Result<Complex64> {
    if x == Complex64::zero() {
        return Err(GoldenError::SingularPoint);
    }
    let (up, down) = dilations(x);
    Ok((f(up)? - f(down)?) / (x * SQRT5))
}

/// The golden derivative D_F as a new function representation.
pub fn golden_derivative(f: &FnRepr) -> FnRepr {
    match f {
        FnRepr::Polynomial(p) => FnRepr::Polynomial(p.golden_derivative()),
        FnRepr::Callable(g) => {
            let g = g.clone();
            FnRepr::Callable(Arc::new(move |x| golden_difference(|y| g(y), x)))
        }
        FnRepr::Series {
            coeffs,
            shift,
            n_terms,
        } => FnRepr::Series {
            coeffs: coeffs.clone(),
            shift: shift + 1,
            n_terms: *n_terms,
        },
    }
}

/// (D_F f)(x). Callables are rejected at x = 0.
pub fn golden_derivative_at(f: &FnRepr, x: Complex64) -> Result<Complex64> {
    golden_derivative(f).eval(x)
}

/// (D_F^n f)(0) for n = 0 ..= deg f, computed by repeated exact derivation.
pub fn golden_taylor(f: &FnRepr) -> Result<Vec<BigRational>> {
    let FnRepr::Polynomial(p) = f else {
        return Err(GoldenError::NotPolynomial);
    };
    let Some(deg) = p.degree() else {
        return Ok(vec![BigRational::zero()]);
    };
    if deg > TAYLOR_DEGREE_LIMIT {
        return Err(GoldenError::TooLarge {
            what: "polynomial degree",
            got: deg as i64,
            maximum: TAYLOR_DEGREE_LIMIT as i64,
        });
    }
    let mut out = Vec::with_capacity(deg + 1);
    let mut d = p.clone();
    for _ in 0..=deg {
        out.push(d.at_zero());
        d = d.golden_derivative();
    }
    Ok(out)
}

/// Σ t_n x^n / F_n!, inverting [`golden_taylor`].
pub fn taylor_reconstruct(taylor: &[BigRational]) -> Result<UnivarPoly<BigRational>> {
    let mut coeffs = Vec::with_capacity(taylor.len());
    for (n, t) in taylor.iter().enumerate() {
        coeffs.push(t / BigRational::from_integer(fib_factorial(n as i64)?));
    }
    Ok(UnivarPoly::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn monomial_derivative() {
        let f = FnRepr::from_int_coeffs(&[0, 0, 0, 1]);
        let FnRepr::Polynomial(d) = golden_derivative(&f) else {
            panic!("polynomial expected");
        };
        assert_eq!(d.coeffs(), &[rat(0), rat(0), rat(2)]);
        let FnRepr::Polynomial(z) = golden_derivative(&FnRepr::from_int_coeffs(&[7])) else {
            panic!("polynomial expected");
        };
        assert!(z.is_zero());
    }

    #[test]
    fn exponential_callable() {
        let f = FnRepr::callable(|x| x.exp());
        let v = golden_derivative_at(&f, c(1.0)).unwrap();
        let expected = (PHI.exp() - (-1.0 / PHI).exp()) / SQRT5;
        assert!((v.re - expected).abs() < 1e-15);
        // Σ F_n/n!
        let mut s = 0.0;
        let mut fact = 1.0;
        for n in 0..40 {
            if n > 0 {
                fact *= n as f64;
            }
            s += fib_f64(n) / fact;
        }
        assert!((v.re - s).abs() < 1e-13);
    }

    #[test]
    fn callable_is_singular_at_zero() {
        let f = FnRepr::callable(|x| x * x);
        assert_eq!(
            golden_derivative_at(&f, c(0.0)),
            Err(GoldenError::SingularPoint)
        );
        let p = FnRepr::from_int_coeffs(&[0, 0, 1]);
        assert_eq!(golden_derivative_at(&p, c(0.0)).unwrap(), c(0.0));
    }

    #[test]
    fn polynomial_and_callable_derivatives_agree() {
        let p = FnRepr::from_int_coeffs(&[3, -1, 4, 1, -5, 9]);
        let q = p.clone();
        let cb = FnRepr::fallible(move |x| q.eval(x));
        for x in [0.3, -1.1, 1.7] {
            let a = golden_derivative_at(&p, c(x)).unwrap();
            let b = golden_derivative_at(&cb, c(x)).unwrap();
            assert!((a - b).norm() < 1e-12 * a.norm().max(1.0));
        }
    }

    #[test]
    fn taylor_round_trip() {
        let f = FnRepr::from_int_coeffs(&[0, 0, 1]);
        assert_eq!(golden_taylor(&f).unwrap(), vec![rat(0), rat(0), rat(1)]);
        assert_eq!(
            golden_taylor(&FnRepr::from_int_coeffs(&[1])).unwrap(),
            vec![rat(1)]
        );
        let f = FnRepr::from_int_coeffs(&[0, 1, 0, 1]);
        let t = golden_taylor(&f).unwrap();
        assert_eq!(t, vec![rat(0), rat(1), rat(0), rat(2)]);
        let FnRepr::Polynomial(p) = &f else {
            unreachable!()
        };
        assert_eq!(&taylor_reconstruct(&t).unwrap(), p);
        assert_eq!(
            golden_taylor(&FnRepr::callable(|x| x)),
            Err(GoldenError::NotPolynomial)
        );
    }

    #[test]
    fn series_shift_is_exact_derivative() {
        let k = c(0.7);
        let e = FnRepr::exp_small(k, 200).unwrap();
        let d = golden_derivative(&e);
        for x in [-1.0, 0.0, 0.4, 2.0] {
            let lhs = d.eval(c(x)).unwrap();
            let direct = k * e.eval(c(x)).unwrap();
            assert!((lhs - direct).norm() < 1e-13 * direct.norm().max(1.0));
        }
    }
}
