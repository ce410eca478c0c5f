use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Result;
use crate::golden::fib::fib_exact;
use crate::hp::{Ctx, HpReal};

/// Exact element `a + b·φ` of the ring Z[φ], reduced with φ² = φ + 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ZPhi {
    pub a: BigInt,
    pub b: BigInt,
}

impl ZPhi {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        Self {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn from_int(a: impl Into<BigInt>) -> Self {
        Self::new(a, 0)
    }

    /// φ itself.
    pub fn phi() -> Self {
        Self::new(0, 1)
    }

    /// The conjugate root φ′ = 1 − φ = −1/φ.
    pub fn phi_conj() -> Self {
        Self::new(1, -1)
    }

    /// √5 = 2φ − 1.
    pub fn sqrt5() -> Self {
        Self::new(-1, 2)
    }

    /// Galois conjugate, sending φ to φ′.
    pub fn conj(&self) -> Self {
        Self {
            a: &self.a + &self.b,
            b: -&self.b,
        }
    }

    /// Field norm `a² + ab − b²`.
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a + &self.a * &self.b - &self.b * &self.b
    }

    pub fn is_unit(&self) -> bool {
        self.norm().abs().is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.b.is_zero()
    }

    /// Multiplicative inverse, defined only for units (norm ±1).
    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_one() {
            Some(self.conj())
        } else if (-&n).is_one() {
            Some(-self.conj())
        } else {
            None
        }
    }

    /// Exact division; `None` when the quotient leaves Z[φ] or `rhs` is zero.
    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        let n = rhs.norm();
        if n.is_zero() {
            return None;
        }
        let num = self * &rhs.conj();
        let (qa, ra) = num.a.div_rem(&n);
        let (qb, rb) = num.b.div_rem(&n);
        (ra.is_zero() && rb.is_zero()).then_some(Self { a: qa, b: qb })
    }

    /// Integer power; negative exponents require a unit base.
    pub fn pow(&self, exp: i64) -> Option<Self> {
        let base = if exp < 0 {
            self.inverse()?
        } else {
            self.clone()
        };
        let mut e = exp.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Some(acc)
    }

    /// `(−1)^k` as a ring element.
    pub fn sign(k: i64) -> Self {
        if k.rem_euclid(2) == 0 {
            Self::one()
        } else {
            -Self::one()
        }
    }

    pub fn to_f64(&self) -> f64 {
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        // loses relative accuracy when a and bφ nearly cancel; use to_hp there
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        a + b * phi
    }

    pub fn to_hp(&self, ctx: &mut Ctx) -> HpReal {
        let phi = ctx.phi();
        let a = ctx.big(&self.a);
        let b = ctx.big(&self.b);
        a.add(&b.mul(&phi, ctx), ctx)
    }
}

/// `φ^n` as an exact ring element, computed by repeated multiplication.
pub fn phi_pow(n: i64) -> ZPhi {
    ZPhi::phi().pow(n).expect("φ is a unit")
}

/// `φ^n = F_{n−1} + F_n φ`, built directly from Fibonacci numbers.
pub fn phi_power_exact(n: i64) -> Result<ZPhi> {
    Ok(ZPhi {
        a: fib_exact(n - 1)?,
        b: fib_exact(n)?,
    })
}

impl fmt::Display for ZPhi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}φ", self.b),
            (false, false) if self.b.is_negative() => write!(f, "{} - {}φ", self.a, -&self.b),
            (false, false) => write!(f, "{} + {}φ", self.a, self.b),
        }
    }
}

impl Zero for ZPhi {
    fn zero() -> Self {
        Self::new(0, 0)
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for ZPhi {
    fn one() -> Self {
        Self::new(1, 0)
    }
}

impl From<i64> for ZPhi {
    fn from(v: i64) -> Self {
        Self::from_int(v)
    }
}

impl From<BigInt> for ZPhi {
    fn from(v: BigInt) -> Self {
        Self::from_int(v)
    }
}

impl<'a> Add<&'a ZPhi> for &'a ZPhi {
    type Output = ZPhi;
    fn add(self, rhs: &ZPhi) -> ZPhi {
        ZPhi {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl<'a> Sub<&'a ZPhi> for &'a ZPhi {
    type Output = ZPhi;
    fn sub(self, rhs: &ZPhi) -> ZPhi {
        ZPhi {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl<'a> Mul<&'a ZPhi> for &'a ZPhi {
    type Output = ZPhi;
    fn mul(self, rhs: &ZPhi) -> ZPhi {
        let bb = &self.b * &rhs.b;
        ZPhi {
            a: &self.a * &rhs.a + &bb,
            b: &self.a * &rhs.b + &rhs.a * &self.b + bb,
        }
    }
}

impl Neg for &ZPhi {
    type Output = ZPhi;
    fn neg(self) -> ZPhi {
        ZPhi {
            a: -&self.a,
            b: -&self.b,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<ZPhi> for ZPhi {
            type Output = ZPhi;
            fn $m(self, rhs: ZPhi) -> ZPhi {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a ZPhi> for ZPhi {
            type Output = ZPhi;
            fn $m(self, rhs: &ZPhi) -> ZPhi {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for ZPhi {
    type Output = ZPhi;
    fn neg(self) -> ZPhi {
        -&self
    }
}

impl AddAssign<&ZPhi> for ZPhi {
    fn add_assign(&mut self, rhs: &ZPhi) {
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

impl SubAssign<&ZPhi> for ZPhi {
    fn sub_assign(&mut self, rhs: &ZPhi) {
        self.a -= &rhs.a;
        self.b -= &rhs.b;
    }
}

impl MulAssign<&ZPhi> for ZPhi {
    fn mul_assign(&mut self, rhs: &ZPhi) {
        *self = &*self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn zphi() -> impl Strategy<Value = ZPhi> {
        (-1000i64..1000, -1000i64..1000).prop_map(|(a, b)| ZPhi::new(a, b))
    }

    #[test]
    fn phi_squared_is_phi_plus_one() {
        let phi = ZPhi::phi();
        assert_eq!(&phi * &phi, ZPhi::new(1, 1));
    }

    #[test]
    fn phi_fourth_power() {
        // repeated multiplication oracle
        let phi = ZPhi::phi();
        let p4 = &(&(&phi * &phi) * &phi) * &phi;
        assert_eq!(p4, ZPhi::new(2, 3));
        assert_eq!(phi_power_exact(4).unwrap(), p4);
        assert_eq!(phi_power_exact(0).unwrap(), ZPhi::one());
        assert_eq!(phi_power_exact(1).unwrap(), ZPhi::phi());
    }

    #[test]
    fn negative_powers_use_unit_inverse() {
        // φ^{-1} = φ - 1
        assert_eq!(phi_pow(-1), ZPhi::new(-1, 1));
        assert_eq!(phi_power_exact(-1).unwrap(), ZPhi::new(-1, 1));
        assert_eq!(&phi_pow(-7) * &phi_pow(7), ZPhi::one());
    }

    #[test]
    fn conjugate_root() {
        assert_eq!(ZPhi::phi_conj(), -phi_pow(-1));
        assert_eq!(&ZPhi::phi() + &ZPhi::phi_conj(), ZPhi::one());
        assert_eq!(&ZPhi::sqrt5() * &ZPhi::sqrt5(), ZPhi::from_int(5));
    }

    #[test]
    fn non_unit_has_no_inverse() {
        assert!(ZPhi::from_int(2).inverse().is_none());
        assert!(ZPhi::from_int(2).pow(-1).is_none());
        assert_eq!(ZPhi::from_int(7).checked_div(&ZPhi::from_int(2)), None);
        assert_eq!(ZPhi::from_int(0).checked_div(&ZPhi::zero()), None);
    }

    #[test]
    fn display() {
        assert_eq!(ZPhi::new(2, 3).to_string(), "2 + 3φ");
        assert_eq!(ZPhi::new(1, -1).to_string(), "1 - 1φ");
        assert_eq!(ZPhi::new(0, 4).to_string(), "4φ");
        assert_eq!(ZPhi::new(-5, 0).to_string(), "-5");
    }

    proptest! {
        #[test]
        fn product_formula(x in zphi(), y in zphi()) {
            let p = &x * &y;
            prop_assert_eq!(&p.a, &(&x.a * &y.a + &x.b * &y.b));
            prop_assert_eq!(&p.b, &(&x.a * &y.b + &y.a * &x.b + &x.b * &y.b));
        }

        #[test]
        fn norm_is_multiplicative(x in zphi(), y in zphi()) {
            prop_assert_eq!((&x * &y).norm(), x.norm() * y.norm());
        }

        #[test]
        fn division_inverts_multiplication(x in zphi(), y in zphi()) {
            prop_assume!(!y.is_zero());
            prop_assert_eq!((&x * &y).checked_div(&y), Some(x));
        }

        #[test]
        fn power_matches_fibonacci_pair(n in -300i64..300) {
            prop_assert_eq!(phi_pow(n), phi_power_exact(n).unwrap());
        }
    }
}
