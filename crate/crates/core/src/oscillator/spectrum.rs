use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{GoldenError, Result};
use crate::golden::fib_table;
use crate::hp::{Ctx, HpReal, Precision};

pub const SPECTRUM_N_MAX: usize = 1000;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Level {
    pub n: usize,
    /// E_n / ħω = F_{n+2} / 2, exact.
    #[serde(serialize_with = "ser_rational")]
    pub multiplier: BigRational,
    pub energy: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectrumTable {
    pub hbar_omega: f64,
    pub levels: Vec<Level>,
    /// E_{n+1} / E_n for consecutive levels.
    pub ratios: Vec<f64>,
}

fn ser_rational<S: serde::Serializer>(
    r: &BigRational,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

/// E_n = (ħω/2) F_{n+2} for n = 0 … n_max.
pub fn spectrum(n_max: usize, hbar_omega: f64) -> Result<SpectrumTable> {
    if n_max > SPECTRUM_N_MAX {
        return Err(GoldenError::TooLarge {
            what: "n_max",
            got: n_max as i64,
            maximum: SPECTRUM_N_MAX as i64,
        });
    }
    if !(hbar_omega.is_finite() && hbar_omega > 0.0) {
        return Err(GoldenError::InvalidArgument(format!(
            "hbar_omega must be positive and finite, got {hbar_omega}"
        )));
    }
    let fibs = fib_table(n_max + 3);
    let two = BigInt::from(2);
    let levels: Vec<Level> = (0..=n_max)
        .map(|n| {
            let multiplier = BigRational::new(fibs[n + 2].clone(), two.clone());
            let energy = multiplier.to_f64().unwrap_or(f64::INFINITY) * hbar_omega;
            Level {
                n,
                multiplier,
                energy,
            }
        })
        .collect();
    let ratios = levels
        .windows(2)
        .map(|w| {
            (&w[1].multiplier / &w[0].multiplier)
                .to_f64()
                .unwrap_or(f64::NAN)
        })
        .collect();
    Ok(SpectrumTable {
        hbar_omega,
        levels,
        ratios,
    })
}

impl SpectrumTable {
    /// E_{n+1} − E_n = (ħω/2) F_{n+1}, checked exactly.
    pub fn gaps_are_fibonacci(&self) -> bool {
        let fibs = fib_table(self.levels.len() + 1);
        self.levels.windows(2).all(|w| {
            &w[1].multiplier - &w[0].multiplier
                == BigRational::new(fibs[w[0].n + 1].clone(), BigInt::from(2))
        })
    }
}

/// r_n = E_{n+1}/E_n = F_{n+3}/F_{n+2} for n = 0 … n_max.
pub fn energy_ratios(n_max: usize, precision: u32) -> Result<Vec<HpReal>> {
    if n_max < 1 {
        return Err(GoldenError::TooSmall {
            what: "n_max",
            got: n_max as i64,
            minimum: 1,
        });
    }
    if n_max > SPECTRUM_N_MAX {
        return Err(GoldenError::TooLarge {
            what: "n_max",
            got: n_max as i64,
            maximum: SPECTRUM_N_MAX as i64,
        });
    }
    let mut ctx = Ctx::new(Precision::new(precision)?);
    let fibs = fib_table(n_max + 3);
    Ok((0..=n_max)
        .map(|n| {
            let num = ctx.big(&fibs[n + 3]);
            let den = ctx.big(&fibs[n + 2]);
            num.div(&den, &ctx)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn low_levels() {
        let s = spectrum(3, 1.0).unwrap();
        let m: Vec<BigRational> = s.levels.iter().map(|l| l.multiplier.clone()).collect();
        assert_eq!(m, vec![r(1, 2), r(1, 1), r(3, 2), r(5, 2)]);
        assert_eq!(spectrum(10, 1.0).unwrap().levels[10].multiplier, r(72, 1));
        assert!(s.gaps_are_fibonacci());
        assert_eq!(s.ratios[0], 2.0);
        assert!(spectrum(3, 0.0).is_err());
        assert!(spectrum(1001, 1.0).is_err());
    }

    #[test]
    fn ratios_approach_phi() {
        let mut ctx = Ctx::new(Precision::default());
        let v = energy_ratios(30, 34).unwrap();
        assert_eq!(ctx.to_f64(&v[0]), 2.0);
        assert_eq!(ctx.to_f64(&v[1]), 1.5);
        let phi = ctx.phi();
        let err = ctx.to_f64(&v[30].sub(&phi, &ctx)).abs();
        assert!(err < 1e-12);
        assert!(energy_ratios(0, 34).is_err());
        // alternating approach: errors shrink in magnitude
        let errs: Vec<f64> = v
            .iter()
            .map(|x| ctx.to_f64(&x.sub(&phi, &ctx)).abs())
            .collect();
        assert!(errs.windows(2).all(|w| w[1] < w[0]));
    }
}
