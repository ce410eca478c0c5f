use std::sync::Arc;

use num_complex::Complex64;

use super::fnrepr::{dilations, golden_derivative_at, golden_difference, FnRepr};
use crate::error::{GoldenError, Result};

/// The product f·g, kept exact when both factors are polynomials.
pub fn product(f: &FnRepr, g: &FnRepr) -> FnRepr {
    if let (FnRepr::Polynomial(p), FnRepr::Polynomial(q)) = (f, g) {
        return FnRepr::Polynomial(p.mul(q));
    }
    let (f, g) = (f.clone(), g.clone());
    FnRepr::Callable(Arc::new(move |x| Ok(f.eval(x)? * g.eval(x)?)))
}

/// D_F(fg)(x) computed directly and through each product rule.
#[derive(Clone, Debug, PartialEq)]
pub struct ProductRules {
    pub direct: Complex64,
    /// D_F f · g(φx) + f(−x/φ) · D_F g
    pub image_first: Complex64,
    /// D_F f · g(−x/φ) + f(φx) · D_F g
    pub image_second: Complex64,
    /// Average of the two.
    pub symmetric: Complex64,
    /// (α, value) for the α-weighted rule.
    pub weighted: Vec<(f64, Complex64)>,
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm().max(1.0)
}

impl ProductRules {
    /// Largest relative deviation of any rule from the direct value.
    pub fn max_residual(&self) -> f64 {
        let mut worst = rel(self.image_first, self.direct)
            .max(rel(self.image_second, self.direct))
            .max(rel(self.symmetric, self.direct));
        for (_, v) in &self.weighted {
            worst = worst.max(rel(*v, self.direct));
        }
        worst
    }
}

pub fn product_rules(f: &FnRepr, g: &FnRepr, x: Complex64, alphas: &[f64]) -> Result<ProductRules> {
    let (up, down) = dilations(x);
    let df = golden_derivative_at(f, x)?;
    let dg = golden_derivative_at(g, x)?;
    let (f_up, f_down) = (f.eval(up)?, f.eval(down)?);
    let (g_up, g_down) = (g.eval(up)?, g.eval(down)?);
    let weighted = alphas
        .iter()
        .map(|&a| {
            let fa = f_down * a + f_up * (1.0 - a);
            let ga = g_up * a + g_down * (1.0 - a);
            (a, fa * dg + ga * df)
        })
        .collect();
    Ok(ProductRules {
        direct: golden_derivative_at(&product(f, g), x)?,
        image_first: df * g_up + f_down * dg,
        image_second: df * g_down + f_up * dg,
        symmetric: df * (g_up + g_down) * 0.5 + dg * (f_up + f_down) * 0.5,
        weighted,
    })
}

/// D_F(f/g)(x) by direct difference and through the three quotient rules.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuotientRules {
    pub direct: Complex64,
    pub image_up: Complex64,
    pub image_down: Complex64,
    pub symmetric: Complex64,
}

impl QuotientRules {
    pub fn max_residual(&self) -> f64 {
        rel(self.image_up, self.direct)
            .max(rel(self.image_down, self.direct))
            .max(rel(self.symmetric, self.direct))
    }
}

/// Requires g(φx)·g(−x/φ) ≠ 0 and x ≠ 0.
pub fn quotient_rules(f: &FnRepr, g: &FnRepr, x: Complex64) -> Result<QuotientRules> {
    let (up, down) = dilations(x);
    let (f_up, f_down) = (f.eval(up)?, f.eval(down)?);
    let (g_up, g_down) = (g.eval(up)?, g.eval(down)?);
    let denom = g_up * g_down;
    if denom.norm() == 0.0 {
        return Err(GoldenError::InvalidArgument(format!(
            "quotient rule needs g(phi x) g(-x/phi) != 0 at x = {x}"
        )));
    }
    let df = golden_derivative_at(f, x)?;
    let dg = golden_derivative_at(g, x)?;
    let direct = golden_difference(|y| Ok(f.eval(y)? / g.eval(y)?), x)?;
    Ok(QuotientRules {
        direct,
        image_up: (df * g_up - dg * f_up) / denom,
        image_down: (df * g_down - dg * f_down) / denom,
        symmetric: (df * (g_down + g_up) - dg * (f_down + f_up)) * 0.5 / denom,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn rules_on_fixed_pairs() {
        let f = FnRepr::from_int_coeffs(&[1, -2, 0, 3]);
        let g = FnRepr::from_int_coeffs(&[2, 1, 1]);
        for x in [0.3, -1.1, 1.7] {
            let r = product_rules(&f, &g, c(x), &[-1.5, 0.0, 0.25, 1.0]).unwrap();
            assert!(r.max_residual() < 1e-12, "x = {x}: {r:?}");
            let q = quotient_rules(&f, &g, c(x)).unwrap();
            assert!(q.max_residual() < 1e-10, "x = {x}: {q:?}");
        }
    }

    #[test]
    fn product_of_x_and_x() {
        // D_F(x²) = F_2 x = x
        let x = FnRepr::from_int_coeffs(&[0, 1]);
        let r = product_rules(&x, &x, c(2.0), &[]).unwrap();
        assert!((r.direct - c(2.0)).norm() < 1e-14);
    }

    #[test]
    fn quotient_rejects_vanishing_denominator() {
        let f = FnRepr::from_int_coeffs(&[1]);
        let g0 = FnRepr::from_int_coeffs(&[0, 1]);
        assert!(quotient_rules(&f, &g0, c(0.0)).is_err());
    }
}
