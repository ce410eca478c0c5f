use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{GoldenError, Result};
use crate::hp::{Ctx, HpReal, Precision};

/// Largest |n| accepted by the exact Fibonacci routines.
pub const FIB_INDEX_LIMIT: i64 = 1_000_000;

/// An exact Fibonacci number together with its index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FibInt {
    pub n: i64,
    pub value: BigInt,
}

impl FibInt {
    pub fn new(n: i64) -> Result<Self> {
        Ok(Self {
            n,
            value: fib_exact(n)?,
        })
    }
}

fn check_index(n: i64) -> Result<()> {
    if n.unsigned_abs() > FIB_INDEX_LIMIT as u64 {
        return Err(GoldenError::IndexOutOfRange {
            index: n,
            limit: FIB_INDEX_LIMIT,
        });
    }
    Ok(())
}

/// `(F_n, F_{n+1})` by fast doubling:
/// F_{2k} = F_k (2F_{k+1} − F_k), F_{2k+1} = F_k² + F_{k+1}².
fn fib_pair(n: u64) -> (BigInt, BigInt) {
    let mut a = BigInt::zero();
    let mut b = BigInt::one();
    if n == 0 {
        return (a, b);
    }
    let bits = 64 - n.leading_zeros();
    for i in (0..bits).rev() {
        let two_b = &b << 1usize;
        let c = &a * (two_b - &a);
        let d = &a * &a + &b * &b;
        if (n >> i) & 1 == 1 {
            b = &c + &d;
            a = d;
        } else {
            a = c;
            b = d;
        }
    }
    (a, b)
}

/// Exact F_n for any signed index, using F_{−n} = (−1)^{n+1} F_n.
pub fn fib_exact(n: i64) -> Result<BigInt> {
    check_index(n)?;
    let (f, _) = fib_pair(n.unsigned_abs());
    if n < 0 && n % 2 == 0 {
        Ok(-f)
    } else {
        Ok(f)
    }
}

/// F_0 ..= F_n as a table.
pub fn fib_table(n: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(n + 1);
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 0..=n {
        out.push(a.clone());
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    out
}

/// F_n as f64 (exact up to F_78, correctly rounded beyond).
pub fn fib_f64(n: i64) -> f64 {
    fib_exact(n)
        .ok()
        .and_then(|v| v.to_f64())
        .unwrap_or(f64::INFINITY)
}

/// Higher Fibonacci number F_n^{(m)} = F_{mn} / F_m.
pub fn fib_higher(n: i64, m: i64) -> Result<BigRational> {
    if m == 0 {
        return Err(GoldenError::ZeroOrder);
    }
    if m < 0 {
        return Err(GoldenError::TooSmall {
            what: "order m",
            got: m,
            minimum: 1,
        });
    }
    let mn = n.checked_mul(m).ok_or(GoldenError::IndexOutOfRange {
        index: i64::MAX,
        limit: FIB_INDEX_LIMIT,
    })?;
    Ok(BigRational::new(fib_exact(mn)?, fib_exact(m)?))
}

/// The golden ratio φ and its conjugate φ′ = −1/φ.
pub fn phi_value(precision: u32) -> Result<(HpReal, HpReal)> {
    let prec = Precision::new(precision)?;
    let ctx = Ctx::new(prec);
    let phi = ctx.phi();
    let conj = ctx.int(1).sub(&phi, &ctx);
    Ok((phi, conj))
}

/// Ratios F_{n+1}/F_n for n = 1 ..= n_max.
pub fn ratio_sequence(n_max: usize, precision: u32) -> Result<Vec<HpReal>> {
    if n_max < 1 {
        return Err(GoldenError::TooSmall {
            what: "n_max",
            got: n_max as i64,
            minimum: 1,
        });
    }
    check_index(n_max as i64 + 1)?;
    let mut ctx = Ctx::new(Precision::new(precision)?);
    let table = fib_table(n_max + 1);
    Ok((1..=n_max)
        .map(|n| {
            let num = ctx.big(&table[n + 1]);
            let den = ctx.big(&table[n]);
            num.div(&den, &ctx)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Naive recurrence in both directions, independent of fast doubling.
    fn naive(n: i64) -> BigInt {
        if n >= 0 {
            let (mut a, mut b) = (BigInt::zero(), BigInt::one());
            for _ in 0..n {
                let c = &a + &b;
                a = std::mem::replace(&mut b, c);
            }
            a
        } else {
            // F_{k-1} = F_{k+1} - F_k walking downwards
            let (mut hi, mut lo) = (BigInt::one(), BigInt::zero()); // F_1, F_0
            for _ in 0..(-n) {
                let next = &hi - &lo;
                hi = std::mem::replace(&mut lo, next);
            }
            lo
        }
    }

    #[test]
    fn small_values() {
        let first: Vec<i64> = (1..=7)
            .map(|n| fib_exact(n).unwrap().try_into().unwrap())
            .collect();
        assert_eq!(first, vec![1, 1, 2, 3, 5, 8, 13]);
        assert_eq!(fib_exact(0).unwrap(), BigInt::zero());
        assert_eq!(fib_exact(-3).unwrap(), BigInt::from(2));
        assert_eq!(fib_exact(-4).unwrap(), BigInt::from(-3));
    }

    #[test]
    fn matches_naive_recursion() {
        for n in -60..=400 {
            assert_eq!(fib_exact(n).unwrap(), naive(n), "n = {n}");
        }
    }

    #[test]
    fn index_guard() {
        assert!(fib_exact(FIB_INDEX_LIMIT).is_ok());
        assert!(matches!(
            fib_exact(FIB_INDEX_LIMIT + 1),
            Err(GoldenError::IndexOutOfRange { .. })
        ));
        assert!(fib_exact(-FIB_INDEX_LIMIT - 1).is_err());
    }

    #[test]
    fn table_agrees() {
        let t = fib_table(100);
        for (n, v) in t.iter().enumerate() {
            assert_eq!(v, &fib_exact(n as i64).unwrap());
        }
    }

    #[test]
    fn higher_fibonacci() {
        let int = |v: i64| BigRational::from_integer(BigInt::from(v));
        assert_eq!(fib_higher(3, 2).unwrap(), int(8));
        assert_eq!(fib_higher(4, 2).unwrap(), int(21));
        for k in 1..20 {
            assert_eq!(fib_higher(1, k).unwrap(), int(1));
        }
        assert_eq!(fib_higher(2, 0), Err(GoldenError::ZeroOrder));
    }

    #[test]
    fn phi_values() {
        let (phi, conj) = phi_value(16).unwrap();
        let mut ctx = Ctx::new(Precision::new(16).unwrap());
        assert!((ctx.to_f64(&phi) - 1.618_033_988_7).abs() < 1e-10);
        let sum = phi.add(&conj, &ctx);
        assert!((ctx.to_f64(&sum) - 1.0).abs() < 1e-16);
        assert!(phi_value(15).is_err());

        let (phi, conj) = phi_value(50).unwrap();
        let mut ctx = Ctx::new(Precision::new(50).unwrap());
        let prod = phi.mul(&conj, &ctx).add(&ctx.int(1), &ctx);
        assert!(prod.abs().cmp_abs(&ctx.parse("1e-48").unwrap()).is_lt());
    }

    #[test]
    fn ratios() {
        let mut ctx = Ctx::new(Precision::default());
        let r: Vec<f64> = ratio_sequence(3, 34)
            .unwrap()
            .iter()
            .map(|x| ctx.to_f64(x))
            .collect();
        assert_eq!(r, vec![1.0, 2.0, 1.5]);

        let r = ratio_sequence(30, 34).unwrap();
        let phi = ctx.phi();
        let err = r[29].sub(&phi, &ctx);
        // Binet remainder bound φ^{-2n}/√5 at n = 30 is about 1.2e-13
        assert!(ctx.to_f64(&err).abs() < 1e-12);
        assert!(ratio_sequence(0, 34).is_err());
    }
}
