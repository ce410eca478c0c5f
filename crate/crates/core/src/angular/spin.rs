use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{GoldenError, Result};
use crate::golden::{fib_f64, PHI, SQRT5};

/// Largest supported 2j.
pub const SPIN_TWICE_MAX: u32 = 50;

/// A spin label j stored as the integer 2j.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct Spin {
    twice: u32,
}

impl Spin {
    pub fn from_twice(twice: u32) -> Result<Self> {
        if twice > SPIN_TWICE_MAX {
            return Err(GoldenError::TooLarge {
                what: "2j",
                got: twice as i64,
                maximum: SPIN_TWICE_MAX as i64,
            });
        }
        Ok(Self { twice })
    }

    pub fn integer(j: u32) -> Result<Self> {
        Self::from_twice(j.saturating_mul(2))
    }

    /// Accepts "2", "1.5" or "3/2".
    pub fn parse(text: &str) -> Result<Self> {
        let bad = || GoldenError::InvalidArgument(format!("invalid spin label '{text}'"));
        let t = text.trim();
        let twice = if let Some((num, den)) = t.split_once('/') {
            let num: u32 = num.trim().parse().map_err(|_| bad())?;
            match den.trim() {
                "1" => num.checked_mul(2).ok_or_else(bad)?,
                "2" => num,
                _ => return Err(bad()),
            }
        } else {
            let v: f64 = t.parse().map_err(|_| bad())?;
            let d = v * 2.0;
            if !(d.is_finite() && d >= 0.0 && d.fract() == 0.0 && d <= u32::MAX as f64) {
                return Err(bad());
            }
            d as u32
        };
        Self::from_twice(twice)
    }

    pub fn twice(self) -> u32 {
        self.twice
    }

    pub fn value(self) -> f64 {
        self.twice as f64 / 2.0
    }

    pub fn is_integer(self) -> bool {
        self.twice.is_multiple_of(2)
    }

    /// Number of states, 2j + 1.
    pub fn dim(self) -> usize {
        self.twice as usize + 1
    }

    /// m for basis index k, with k = m + j.
    pub fn m(self, k: usize) -> f64 {
        k as f64 - self.value()
    }

    /// (n1, n2) = (j + m, j − m) for basis index k.
    pub fn occupations(self, k: usize) -> (i64, i64) {
        (k as i64, self.twice as i64 - k as i64)
    }
}

impl TryFrom<u32> for Spin {
    type Error = GoldenError;

    fn try_from(twice: u32) -> Result<Self> {
        Self::from_twice(twice)
    }
}

impl From<Spin> for u32 {
    fn from(s: Spin) -> u32 {
        s.twice
    }
}

impl FromStr for Spin {
    type Err = GoldenError;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl fmt::Display for Spin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

/// (−1)^x = e^{iπx}, exact on the quarter-turns.
pub fn neg_one_pow(x: f64) -> Complex64 {
    let t = x * 2.0;
    if t.fract() == 0.0 && t.abs() < 1e15 {
        return match (t as i64).rem_euclid(4) {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
    }
    Complex64::cis(std::f64::consts::PI * x)
}

/// F_x = (φ^x − (−1)^x φ^{−x}) / √5 in double precision; exact at integers.
pub fn fib_real(x: f64) -> Complex64 {
    if x.fract() == 0.0 && x.abs() < 1e6 {
        return Complex64::new(fib_f64(x as i64), 0.0);
    }
    (Complex64::new(PHI.powf(x), 0.0) - neg_one_pow(x) * PHI.powf(-x)) / SQRT5
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::golden::fib_extended;

    #[test]
    fn parsing() {
        assert_eq!(Spin::parse("3/2").unwrap().twice(), 3);
        assert_eq!(Spin::parse("1.5").unwrap().twice(), 3);
        assert_eq!(Spin::parse("2").unwrap().twice(), 4);
        assert_eq!(Spin::parse("4/1").unwrap().twice(), 8);
        assert!(Spin::parse("1/3").is_err());
        assert!(Spin::parse("-1").is_err());
        assert!(Spin::parse("0.3").is_err());
        assert!(Spin::parse("26").is_err());
        assert_eq!(Spin::from_twice(5).unwrap().to_string(), "5/2");
        assert_eq!(Spin::integer(3).unwrap().to_string(), "3");
    }

    #[test]
    fn labels() {
        let s = Spin::from_twice(3).unwrap();
        assert_eq!(s.dim(), 4);
        assert_eq!(s.m(0), -1.5);
        assert_eq!(s.occupations(1), (1, 2));
    }

    #[test]
    fn phases() {
        assert_eq!(neg_one_pow(0.5), Complex64::new(0.0, 1.0));
        assert_eq!(neg_one_pow(-0.5), Complex64::new(0.0, -1.0));
        assert_eq!(neg_one_pow(-3.0), Complex64::new(-1.0, 0.0));
        let e = neg_one_pow(0.25);
        assert!((e - Complex64::cis(std::f64::consts::FRAC_PI_4)).norm() < 1e-15);
    }

    #[test]
    fn half_integer_fibonacci_matches_multiprecision() {
        for x in [0.5, 1.5, -2.5, 7.5] {
            let hp = fib_extended(Complex64::new(x, 0.0), 30).unwrap().to_c64();
            let v = fib_real(x);
            assert!((v - hp).norm() < 1e-13 * hp.norm().max(1.0), "x = {x}");
        }
    }
}
