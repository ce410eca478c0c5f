use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{GoldenError, Result};
use crate::golden::fib_table;

pub const FACTORIAL_LIMIT: i64 = 10_000;
pub const FIBONOMIAL_LIMIT: i64 = 300;

/// F_n! = F_1 F_2 ⋯ F_n, with F_0! = 1.
pub fn fib_factorial(n: i64) -> Result<BigInt> {
    if n < 0 {
        return Err(GoldenError::TooSmall {
            what: "factorial index",
            got: n,
            minimum: 0,
        });
    }
    if n > FACTORIAL_LIMIT {
        return Err(GoldenError::TooLarge {
            what: "factorial index",
            got: n,
            maximum: FACTORIAL_LIMIT,
        });
    }
    let fibs = fib_table(n as usize);
    Ok(fibs.iter().skip(1).fold(BigInt::one(), |acc, f| acc * f))
}

/// Fibonomial coefficient F_n! / (F_k! F_{n−k}!). Returns 0 when k lies
/// outside [0, n].
pub fn fibonomial(n: i64, k: i64) -> Result<BigInt> {
    if n < 0 {
        return Err(GoldenError::TooSmall {
            what: "fibonomial n",
            got: n,
            minimum: 0,
        });
    }
    if n > FIBONOMIAL_LIMIT {
        return Err(GoldenError::TooLarge {
            what: "fibonomial n",
            got: n,
            maximum: FIBONOMIAL_LIMIT,
        });
    }
    if k < 0 || k > n {
        return Ok(BigInt::zero());
    }
    let k = k.min(n - k) as usize;
    let n = n as usize;
    let fibs = fib_table(n);
    // after step i the accumulator is the fibonomial [n-k+i, i], an integer
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc *= &fibs[n - k + i];
        acc /= &fibs[i];
    }
    Ok(acc)
}

/// Row n of the Fibonomial triangle.
pub fn fibonomial_row(n: usize) -> Vec<BigInt> {
    let fibs = fib_table(n);
    let mut row = Vec::with_capacity(n + 1);
    let mut acc = BigInt::one();
    row.push(acc.clone());
    // [n, k] = [n, k-1] F_{n-k+1} / F_k
    for k in 1..=n {
        acc = acc * &fibs[n - k + 1] / &fibs[k];
        row.push(acc.clone());
    }
    row
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn factorials() {
        assert_eq!(fib_factorial(0).unwrap(), int(1));
        assert_eq!(fib_factorial(5).unwrap(), int(2 * 3 * 5));
        assert_eq!(fib_factorial(7).unwrap(), int(240 * 13));
        assert!(fib_factorial(-1).is_err());
        assert!(fib_factorial(FACTORIAL_LIMIT + 1).is_err());
    }

    #[test]
    fn fibonomials_by_exact_division() {
        assert_eq!(fibonomial(5, 2).unwrap(), int(30 / 2));
        assert_eq!(fibonomial(6, 3).unwrap(), int(240 / 4));
        for n in 0..12 {
            assert_eq!(fibonomial(n, 0).unwrap(), int(1));
        }
        assert_eq!(fibonomial(4, 5).unwrap(), int(0));
        assert_eq!(fibonomial(4, -1).unwrap(), int(0));
        assert!(fibonomial(301, 1).is_err());
    }

    #[test]
    fn incremental_product_matches_factorial_quotient() {
        for n in 0..=40i64 {
            let row = fibonomial_row(n as usize);
            for k in 0..=n {
                let num = fib_factorial(n).unwrap();
                let den = fib_factorial(k).unwrap() * fib_factorial(n - k).unwrap();
                let (q, r) = num.div_rem(&den);
                assert!(r.is_zero());
                assert_eq!(fibonomial(n, k).unwrap(), q);
                assert_eq!(row[k as usize], q);
            }
        }
    }
}
