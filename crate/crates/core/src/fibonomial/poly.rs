use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::golden::{fib_exact, ZPhi};

/// Scalar usable as a polynomial coefficient.
pub trait Coeff:
    Clone + PartialEq + Zero + One + Neg<Output = Self> + fmt::Debug + Send + Sync
where
    for<'a> &'a Self: Add<&'a Self, Output = Self> + Mul<&'a Self, Output = Self>,
{
    fn from_bigint(v: &BigInt) -> Self;
    fn to_c64(&self) -> Complex64;
}

impl Coeff for BigRational {
    fn from_bigint(v: &BigInt) -> Self {
        BigRational::from_integer(v.clone())
    }

    fn to_c64(&self) -> Complex64 {
        Complex64::new(self.to_f64().unwrap_or(f64::NAN), 0.0)
    }
}

impl Coeff for ZPhi {
    fn from_bigint(v: &BigInt) -> Self {
        ZPhi::from_int(v.clone())
    }

    fn to_c64(&self) -> Complex64 {
        Complex64::new(self.to_f64(), 0.0)
    }
}

impl Coeff for Complex64 {
    fn from_bigint(v: &BigInt) -> Self {
        Complex64::new(v.to_f64().unwrap_or(f64::NAN), 0.0)
    }

    fn to_c64(&self) -> Complex64 {
        *self
    }
}

/// Dense univariate polynomial, coefficients by ascending degree, with no
/// trailing zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct UnivarPoly<T> {
    coeffs: Vec<T>,
}

impl<T: Coeff> UnivarPoly<T>
where
    for<'a> &'a T: Add<&'a T, Output = T> + Mul<&'a T, Output = T>,
{
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: T, degree: usize) -> Self {
        let mut coeffs = vec![T::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| &self.coeff(k) + &other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-T::one()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Exact golden derivative: x^n ↦ F_n x^{n−1}.
    pub fn golden_derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(n, c)| {
                    c * &T::from_bigint(&fib_exact(n as i64).expect("degree within range"))
                })
                .collect(),
        )
    }

    /// Value at 0.
    pub fn at_zero(&self) -> T {
        self.coeff(0)
    }

    pub fn eval(&self, x: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::zero(), |acc, c| acc * x + c.to_c64())
    }

    pub fn map<U: Coeff>(&self, f: impl Fn(&T) -> U) -> UnivarPoly<U>
    where
        for<'a> &'a U: Add<&'a U, Output = U> + Mul<&'a U, Output = U>,
    {
        UnivarPoly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<T: Coeff + fmt::Display> fmt::Display for UnivarPoly<T>
where
    for<'a> &'a T: Add<&'a T, Output = T> + Mul<&'a T, Output = T>,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let scalar = !text.contains(' ');
            let (neg, body) = match text.strip_prefix('-') {
                Some(rest) if scalar => (true, rest),
                _ => (false, text.as_str()),
            };
            let sep = match (first, neg) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            first = false;
            let coef = match (k, body) {
                (0, _) => body.to_string(),
                (_, "1") if scalar => String::new(),
                _ if scalar && !body.contains('/') => body.to_string(),
                _ => format!("({body})"),
            };
            match k {
                0 => write!(f, "{sep}{coef}")?,
                1 => write!(f, "{sep}{coef}x")?,
                _ => write!(f, "{sep}{coef}x^{k}")?,
            }
        }
        Ok(())
    }
}

/// Sparse bivariate polynomial Σ c_{ij} x^i y^j over Z[φ]; no explicit zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BivarPoly {
    terms: BTreeMap<(u32, u32), ZPhi>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(ZPhi::one(), 0, 0)
    }

    pub fn term(c: ZPhi, i: u32, j: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(c, i, j);
        p
    }

    /// The linear form `x + c·y`.
    pub fn linear(c: ZPhi) -> Self {
        let mut p = Self::term(ZPhi::one(), 1, 0);
        p.add_term(c, 0, 1);
        p
    }

    pub fn add_term(&mut self, c: ZPhi, i: u32, j: u32) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((i, j)).or_insert_with(ZPhi::zero);
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn coeff(&self, i: u32, j: u32) -> ZPhi {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(ZPhi::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &ZPhi)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&(i1, j1), a) in &self.terms {
            for (&(i2, j2), b) in &other.terms {
                out.add_term(a * b, i1 + i2, j1 + j2);
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(i, j), c) in &other.terms {
            out.add_term(c.clone(), i, j);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-ZPhi::one()))
    }

    pub fn scale(&self, c: &ZPhi) -> Self {
        let mut out = Self::zero();
        for (&(i, j), a) in &self.terms {
            out.add_term(a * c, i, j);
        }
        out
    }

    /// True when every coefficient lies in Z.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(ZPhi::is_integer)
    }

    /// Golden derivative in x: x^i ↦ F_i x^{i−1}.
    pub fn golden_derivative_x(&self) -> Self {
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            if i > 0 {
                let f = ZPhi::from_int(fib_exact(i as i64).expect("small index"));
                out.add_term(c * &f, i - 1, j);
            }
        }
        out
    }

    /// Golden derivative in y.
    pub fn golden_derivative_y(&self) -> Self {
        self.swap_vars().golden_derivative_x().swap_vars()
    }

    pub fn swap_vars(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((j, i), c.clone()))
                .collect(),
        }
    }

    /// Substitutes y ↦ t·x^0 (a scalar), leaving a polynomial in x.
    pub fn substitute_y(&self, t: &ZPhi) -> UnivarPoly<ZPhi> {
        let deg = self
            .terms
            .keys()
            .map(|&(i, _)| i as usize)
            .max()
            .unwrap_or(0);
        let mut coeffs = vec![ZPhi::zero(); deg + 1];
        for (&(i, j), c) in &self.terms {
            let tj = t.pow(j as i64).expect("non-negative power");
            coeffs[i as usize] += &(c * &tj);
        }
        UnivarPoly::new(coeffs)
    }

    /// Evaluates at the point (x, y) = (t, 1), exactly.
    pub fn eval_ratio(&self, t: &ZPhi) -> ZPhi {
        self.swap_vars()
            .substitute_y(t)
            .coeffs()
            .iter()
            .fold(ZPhi::zero(), |acc, c| &acc + c)
    }

    pub fn eval(&self, x: Complex64, y: Complex64) -> Complex64 {
        self.terms
            .iter()
            .fold(Complex64::zero(), |acc, (&(i, j), c)| {
                acc + x.powu(i) * y.powu(j) * c.to_f64()
            })
    }
}

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (&(i, j), c) in self.terms.iter().rev() {
            let mono = match (i, j) {
                (0, 0) => String::new(),
                (i, 0) => pow_str("x", i),
                (0, j) => pow_str("y", j),
                (i, j) => format!("{}{}", pow_str("x", i), pow_str("y", j)),
            };
            let coef = if c.is_integer() {
                c.a.to_string()
            } else {
                format!("({c})")
            };
            parts.push(match (coef.as_str(), mono.is_empty()) {
                (_, true) => coef.clone(),
                ("1", false) => mono,
                ("-1", false) => format!("-{mono}"),
                _ => format!("{coef}{mono}"),
            });
        }
        let mut out = parts[0].clone();
        for p in &parts[1..] {
            match p.strip_prefix('-') {
                Some(rest) => out.push_str(&format!(" - {rest}")),
                None => out.push_str(&format!(" + {p}")),
            }
        }
        write!(f, "{out}")
    }
}

fn pow_str(v: &str, k: u32) -> String {
    if k == 1 {
        v.to_string()
    } else {
        format!("{v}^{k}")
    }
}
