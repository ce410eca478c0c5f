use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{GoldenError, Result};
use crate::golden::fib_exact;
use crate::hp::{Ctx, HpReal, Precision};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: i64) -> Self {
        if n % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    fn name(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }

    fn unit(self) -> i64 {
        match self {
            Parity::Even => 1,
            Parity::Odd => -1,
        }
    }
}

/// log_φ|√5/2·F ± √(5F²/4 + u)| with u = +1 for even and −1 for odd index.
fn log_branch(ctx: &mut Ctx, f: &BigInt, parity: Parity, plus: bool) -> HpReal {
    let fv = ctx.big(f);
    let half_sqrt5 = ctx.sqrt5().div(&ctx.int(2), ctx);
    let lead = half_sqrt5.mul(&fv, ctx);
    let radicand = fv
        .mul(&fv, ctx)
        .mul(&ctx.int(5), ctx)
        .div(&ctx.int(4), ctx)
        .add(&ctx.int(parity.unit()), ctx);
    let root = radicand.sqrt(ctx);
    let arg = if plus {
        lead.add(&root, ctx)
    } else {
        lead.sub(&root, ctx).abs()
    };
    let ln_phi = ctx.ln_phi();
    let ln_arg = ctx.ln(&arg);
    ln_arg.div(&ln_phi, ctx)
}

/// Recovers n from F_n and the parity of n. F = 1 resolves to the smallest
/// index of its parity class: 1 when odd, 2 when even.
pub fn invert_number(fib_value: &BigInt, parity: Parity, precision: u32) -> Result<i64> {
    if !fib_value.is_positive() {
        return Err(GoldenError::InvalidArgument(format!(
            "Fibonacci value must be positive, got {fib_value}"
        )));
    }
    let mut ctx = Ctx::new(Precision::new(precision)?);
    let not_fib = || GoldenError::NotFibonacci {
        value: fib_value.to_string(),
        parity: parity.name(),
    };
    let n = log_branch(&mut ctx, fib_value, parity, true)
        .round_to_bigint(&mut ctx)
        .and_then(|v| v.to_i64())
        .ok_or_else(not_fib)?;
    if n < 1 || Parity::of(n) != parity || &fib_exact(n)? != fib_value {
        return Err(not_fib());
    }
    Ok(n)
}

/// The minus branch of the same logarithm, which lands on −n.
pub fn invert_number_minus_branch(
    fib_value: &BigInt,
    parity: Parity,
    precision: u32,
) -> Result<f64> {
    let mut ctx = Ctx::new(Precision::new(precision)?);
    let v = log_branch(&mut ctx, fib_value, parity, false);
    Ok(ctx.to_f64(&v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn examples() {
        assert_eq!(invert_number(&big(55), Parity::Even, 34).unwrap(), 10);
        assert_eq!(invert_number(&big(13), Parity::Odd, 34).unwrap(), 7);
        assert_eq!(invert_number(&big(1), Parity::Odd, 34).unwrap(), 1);
        assert_eq!(invert_number(&big(1), Parity::Even, 34).unwrap(), 2);
    }

    #[test]
    fn round_trip_over_range() {
        for n in 1..=300 {
            let f = fib_exact(n).unwrap();
            if n == 1 || n == 2 {
                continue;
            }
            assert_eq!(invert_number(&f, Parity::of(n), 34).unwrap(), n);
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(invert_number(&big(4), Parity::Even, 34).is_err());
        assert!(invert_number(&big(55), Parity::Odd, 34).is_err());
        assert!(invert_number(&big(0), Parity::Even, 34).is_err());
        assert!(invert_number(&big(-5), Parity::Odd, 34).is_err());
    }

    #[test]
    fn minus_branch_gives_negative_index() {
        let v = invert_number_minus_branch(&big(55), Parity::Even, 34).unwrap();
        assert!((v + 10.0).abs() < 1e-12);
        let v = invert_number_minus_branch(&big(13), Parity::Odd, 34).unwrap();
        assert!((v + 7.0).abs() < 1e-12);
    }
}
