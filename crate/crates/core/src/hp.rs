//! Multiprecision real and complex scalars.
//!
//! Thin layer over [`astro_float::BigFloat`] that fixes a rounding mode,
//! maps decimal working precision to binary precision (plus guard bits), and
//! offers the handful of complex operations the Binet extension needs.

use std::fmt;

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_bigint::BigInt;
use num_complex::Complex64;

use crate::error::{GoldenError, Result};

/// Default working precision in decimal digits.
pub const DEFAULT_PRECISION: u32 = 34;
/// Smallest accepted working precision.
pub const MIN_PRECISION: u32 = 16;
/// Largest accepted working precision.
pub const MAX_PRECISION: u32 = 4000;

const GUARD_BITS: usize = 64;
const RM: RoundingMode = RoundingMode::ToEven;

/// Working precision in decimal digits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Precision(u32);

impl Precision {
    pub fn new(digits: u32) -> Result<Self> {
        if digits < MIN_PRECISION {
            return Err(GoldenError::PrecisionTooLow {
                requested: digits,
                minimum: MIN_PRECISION,
            });
        }
        if digits > MAX_PRECISION {
            return Err(GoldenError::PrecisionTooHigh {
                requested: digits,
                maximum: MAX_PRECISION,
            });
        }
        Ok(Self(digits))
    }

    pub fn digits(self) -> u32 {
        self.0
    }

    /// Binary precision used for intermediate results.
    pub fn bits(self) -> usize {
        // log2(10) ~ 3.3219
        (self.0 as usize * 33219).div_ceil(10000) + GUARD_BITS
    }
}

impl Default for Precision {
    fn default() -> Self {
        Self(DEFAULT_PRECISION)
    }
}

/// Evaluation context: binary precision plus the constants cache.
pub struct Ctx {
    prec: Precision,
    p: usize,
    cc: Consts,
}

impl fmt::Debug for Ctx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Ctx").field("prec", &self.prec).finish()
    }
}

impl Ctx {
    pub fn new(prec: Precision) -> Self {
        let cc = Consts::new().expect("allocating multiprecision constant cache");
        Self {
            prec,
            p: prec.bits(),
            cc,
        }
    }

    pub fn precision(&self) -> Precision {
        self.prec
    }

    pub fn int(&self, v: i64) -> HpReal {
        HpReal(BigFloat::from_i64(v, self.p))
    }

    pub fn big(&mut self, v: &BigInt) -> HpReal {
        if let Ok(small) = i64::try_from(v) {
            return self.int(small);
        }
        self.parse(&v.to_string())
            .expect("decimal integer always parses")
    }

    pub fn f64(&self, v: f64) -> HpReal {
        HpReal(BigFloat::from_f64(v, self.p))
    }

    /// Parses a decimal literal exactly to working precision.
    pub fn parse(&mut self, s: &str) -> Option<HpReal> {
        let v = BigFloat::parse(s.trim(), Radix::Dec, self.p, RM, &mut self.cc);
        if v.is_nan() || v.is_inf() {
            None
        } else {
            Some(HpReal(v))
        }
    }

    pub fn pi(&mut self) -> HpReal {
        HpReal(self.cc.pi(self.p, RM))
    }

    pub fn sqrt5(&self) -> HpReal {
        self.int(5).sqrt(self)
    }

    /// The golden ratio (1 + sqrt 5) / 2.
    pub fn phi(&self) -> HpReal {
        let s = self.sqrt5();
        HpReal(s.0.add(&BigFloat::from_i64(1, self.p), self.p, RM)).div(&self.int(2), self)
    }

    pub fn ln_phi(&mut self) -> HpReal {
        let phi = self.phi();
        self.ln(&phi)
    }

    pub fn exp(&mut self, x: &HpReal) -> HpReal {
        HpReal(x.0.exp(self.p, RM, &mut self.cc))
    }

    pub fn ln(&mut self, x: &HpReal) -> HpReal {
        HpReal(x.0.ln(self.p, RM, &mut self.cc))
    }

    pub fn sin(&mut self, x: &HpReal) -> HpReal {
        HpReal(x.0.sin(self.p, RM, &mut self.cc))
    }

    pub fn cos(&mut self, x: &HpReal) -> HpReal {
        HpReal(x.0.cos(self.p, RM, &mut self.cc))
    }

    /// `e^{i theta}` for real `theta`.
    pub fn cis(&mut self, theta: &HpReal) -> HpComplex {
        HpComplex {
            re: self.cos(theta),
            im: self.sin(theta),
        }
    }

    /// Complex exponential.
    pub fn cexp(&mut self, z: &HpComplex) -> HpComplex {
        let modulus = self.exp(&z.re);
        self.cis(&z.im).scale(&modulus, self)
    }

    /// Formats `x` with `digits` significant decimal digits.
    pub fn format(&mut self, x: &HpReal, digits: u32) -> String {
        match x.0.format(Radix::Dec, RM, &mut self.cc) {
            Ok(s) => round_scientific(&s, digits as usize),
            Err(_) => "NaN".to_string(),
        }
    }

    pub fn to_f64(&mut self, x: &HpReal) -> f64 {
        self.format(x, 20).parse().unwrap_or(f64::NAN)
    }
}

/// Multiprecision real scalar.
#[derive(Clone, Debug)]
pub struct HpReal(BigFloat);

impl HpReal {
    pub fn inner(&self) -> &BigFloat {
        &self.0
    }

    pub fn add(&self, o: &HpReal, ctx: &Ctx) -> HpReal {
        HpReal(self.0.add(&o.0, ctx.p, RM))
    }

    pub fn sub(&self, o: &HpReal, ctx: &Ctx) -> HpReal {
        HpReal(self.0.sub(&o.0, ctx.p, RM))
    }

    pub fn mul(&self, o: &HpReal, ctx: &Ctx) -> HpReal {
        HpReal(self.0.mul(&o.0, ctx.p, RM))
    }

    pub fn div(&self, o: &HpReal, ctx: &Ctx) -> HpReal {
        HpReal(self.0.div(&o.0, ctx.p, RM))
    }

    pub fn sqrt(&self, ctx: &Ctx) -> HpReal {
        HpReal(self.0.sqrt(ctx.p, RM))
    }

    pub fn neg(&self) -> HpReal {
        HpReal(self.0.neg())
    }

    pub fn abs(&self) -> HpReal {
        HpReal(self.0.abs())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        !(self.0.is_nan() || self.0.is_inf())
    }

    /// Nearest integer, ties away from zero. `None` for non-finite values.
    pub fn round_to_bigint(&self, ctx: &mut Ctx) -> Option<BigInt> {
        if !self.is_finite() {
            return None;
        }
        let half = ctx.f64(0.5);
        let shifted = if self.0.is_negative() {
            self.sub(&half, ctx)
        } else {
            self.add(&half, ctx)
        };
        let truncated = HpReal(shifted.0.int());
        let digits = truncated
            .0
            .exponent()
            .map(|e| (e.max(1) as f64 * std::f64::consts::LOG10_2).ceil() as u32 + 2)
            .unwrap_or(2);
        let s = ctx.format(&truncated, digits.max(2));
        parse_scientific_integer(&s)
    }

    pub fn cmp_abs(&self, o: &HpReal) -> std::cmp::Ordering {
        match self.0.abs_cmp(&o.0) {
            Some(x) if x < 0 => std::cmp::Ordering::Less,
            Some(0) => std::cmp::Ordering::Equal,
            _ => std::cmp::Ordering::Greater,
        }
    }
}

/// Multiprecision complex scalar.
#[derive(Clone, Debug)]
pub struct HpComplex {
    pub re: HpReal,
    pub im: HpReal,
}

impl HpComplex {
    pub fn real(re: HpReal, ctx: &Ctx) -> Self {
        Self { re, im: ctx.int(0) }
    }

    pub fn from_c64(z: Complex64, ctx: &Ctx) -> Self {
        Self {
            re: ctx.f64(z.re),
            im: ctx.f64(z.im),
        }
    }

    pub fn add(&self, o: &HpComplex, ctx: &Ctx) -> Self {
        Self {
            re: self.re.add(&o.re, ctx),
            im: self.im.add(&o.im, ctx),
        }
    }

    pub fn sub(&self, o: &HpComplex, ctx: &Ctx) -> Self {
        Self {
            re: self.re.sub(&o.re, ctx),
            im: self.im.sub(&o.im, ctx),
        }
    }

    pub fn mul(&self, o: &HpComplex, ctx: &Ctx) -> Self {
        let re = self.re.mul(&o.re, ctx).sub(&self.im.mul(&o.im, ctx), ctx);
        let im = self.re.mul(&o.im, ctx).add(&self.im.mul(&o.re, ctx), ctx);
        Self { re, im }
    }

    pub fn div(&self, o: &HpComplex, ctx: &Ctx) -> Self {
        let den = o.re.mul(&o.re, ctx).add(&o.im.mul(&o.im, ctx), ctx);
        let re = self.re.mul(&o.re, ctx).add(&self.im.mul(&o.im, ctx), ctx);
        let im = self.im.mul(&o.re, ctx).sub(&self.re.mul(&o.im, ctx), ctx);
        Self {
            re: re.div(&den, ctx),
            im: im.div(&den, ctx),
        }
    }

    pub fn scale(&self, k: &HpReal, ctx: &Ctx) -> Self {
        Self {
            re: self.re.mul(k, ctx),
            im: self.im.mul(k, ctx),
        }
    }

    pub fn abs(&self, ctx: &Ctx) -> HpReal {
        self.re
            .mul(&self.re, ctx)
            .add(&self.im.mul(&self.im, ctx), ctx)
            .sqrt(ctx)
    }

    pub fn to_c64(&self, ctx: &mut Ctx) -> Complex64 {
        Complex64::new(ctx.to_f64(&self.re), ctx.to_f64(&self.im))
    }
}

/// Rounds a decimal scientific string (`[-]d.ddd[e[+-]x]`) to `digits`
/// significant digits, returning `[-]d.ddde[+-]x` form.
pub(crate) fn round_scientific(s: &str, digits: usize) -> String {
    let digits = digits.max(1);
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (mant, exp) = match body.find(['e', 'E']) {
        Some(i) => (&body[..i], body[i + 1..].parse::<i64>().unwrap_or(0)),
        None => (body, 0),
    };
    let (int_part, frac_part) = match mant.find('.') {
        Some(i) => (&mant[..i], &mant[i + 1..]),
        None => (mant, ""),
    };
    let mut all: Vec<u8> = int_part
        .bytes()
        .chain(frac_part.bytes())
        .filter(u8::is_ascii_digit)
        .map(|b| b - b'0')
        .collect();
    // exponent of the first digit in `all`
    let mut exp10 = exp + int_part.len() as i64 - 1;
    let lead = all.iter().position(|&d| d != 0);
    let Some(lead) = lead else {
        return "0".to_string();
    };
    all.drain(..lead);
    exp10 -= lead as i64;

    let mut kept: Vec<u8> = all.iter().copied().take(digits).collect();
    kept.resize(digits, 0);
    if all.len() > digits && all[digits] >= 5 {
        let mut i = digits;
        loop {
            if i == 0 {
                kept.insert(0, 1);
                kept.pop();
                exp10 += 1;
                break;
            }
            i -= 1;
            if kept[i] == 9 {
                kept[i] = 0;
            } else {
                kept[i] += 1;
                break;
            }
        }
    }
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    out.push((b'0' + kept[0]) as char);
    if digits > 1 {
        out.push('.');
        out.extend(kept[1..].iter().map(|d| (b'0' + d) as char));
    }
    out.push_str(&format!("e{exp10}"));
    out
}

fn parse_scientific_integer(s: &str) -> Option<BigInt> {
    if s == "0" {
        return Some(BigInt::from(0));
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (mant, exp) = body.split_once('e')?;
    let exp: i64 = exp.parse().ok()?;
    let digits: String = mant.chars().filter(char::is_ascii_digit).collect();
    // value = 0.d1d2... * 10^(exp+1)
    let shift = exp + 1 - digits.len() as i64;
    let mut v: BigInt = digits.parse().ok()?;
    if shift >= 0 {
        v *= BigInt::from(10).pow(shift as u32);
    } else {
        v /= BigInt::from(10).pow((-shift) as u32);
    }
    Some(if neg { -v } else { v })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precision_floor() {
        assert!(Precision::new(15).is_err());
        assert!(Precision::new(16).is_ok());
    }

    #[test]
    fn rounding_carries() {
        assert_eq!(round_scientific("9.9996e+2", 4), "1.000e3");
        assert_eq!(round_scientific("1.23449e0", 5), "1.2345e0");
        assert_eq!(round_scientific("-0.000123456", 3), "-1.23e-4");
        assert_eq!(round_scientific("0.0", 3), "0");
    }

    #[test]
    fn phi_to_f64() {
        let mut ctx = Ctx::new(Precision::default());
        let phi = ctx.phi();
        let v = ctx.to_f64(&phi);
        assert!((v - 1.618_033_988_749_895).abs() < 1e-15);
    }

    #[test]
    fn round_to_integer() {
        let mut ctx = Ctx::new(Precision::default());
        let x = ctx.parse("12345678901234567890123.4").unwrap();
        assert_eq!(
            x.round_to_bigint(&mut ctx).unwrap().to_string(),
            "12345678901234567890123"
        );
        let y = ctx.parse("-2.5").unwrap();
        assert_eq!(y.round_to_bigint(&mut ctx).unwrap(), BigInt::from(-3));
        let z = ctx.parse("0.2").unwrap();
        assert_eq!(z.round_to_bigint(&mut ctx).unwrap(), BigInt::from(0));
    }
}
