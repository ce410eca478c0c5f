use num_complex::Complex64;

use crate::error::{GoldenError, Result};
use crate::hp::{Ctx, HpComplex, Precision};

/// Bound on |Re z| and |Im z| accepted by [`fib_extended`].
pub const EXTENDED_ARG_LIMIT: f64 = 1e3;

/// F_z for a complex argument, evaluated at a fixed decimal precision.
#[derive(Clone, Debug)]
pub struct GoldenValue {
    pub z: HpComplex,
    pub value: HpComplex,
    pub precision: Precision,
}

impl GoldenValue {
    pub fn to_c64(&self) -> Complex64 {
        let mut ctx = Ctx::new(self.precision);
        self.value.to_c64(&mut ctx)
    }

    /// `(re, im)` rendered with the working number of significant digits.
    pub fn to_strings(&self) -> (String, String) {
        let mut ctx = Ctx::new(self.precision);
        let d = self.precision.digits();
        (ctx.format(&self.value.re, d), ctx.format(&self.value.im, d))
    }
}

/// φ^z on the principal branch, e^{z ln φ}.
pub fn phi_cpow(ctx: &mut Ctx, z: &HpComplex) -> HpComplex {
    let ln_phi = ctx.ln_phi();
    let w = z.scale(&ln_phi, ctx);
    ctx.cexp(&w)
}

/// (−1/φ)^z taken as e^{iπz} φ^{−z}.
pub fn neg_inv_phi_cpow(ctx: &mut Ctx, z: &HpComplex) -> HpComplex {
    let ln_phi = ctx.ln_phi();
    let pi = ctx.pi();
    let re = z.im.mul(&pi, ctx).add(&z.re.mul(&ln_phi, ctx), ctx).neg();
    let im = z.re.mul(&pi, ctx).sub(&z.im.mul(&ln_phi, ctx), ctx);
    ctx.cexp(&HpComplex { re, im })
}

/// F_z = (φ^z − e^{iπz} φ^{−z}) / √5 in the given context.
pub fn fib_extended_in(ctx: &mut Ctx, z: &HpComplex) -> HpComplex {
    let a = phi_cpow(ctx, z);
    let b = neg_inv_phi_cpow(ctx, z);
    let sqrt5 = ctx.sqrt5();
    let diff = a.sub(&b, ctx);
    HpComplex {
        re: diff.re.div(&sqrt5, ctx),
        im: diff.im.div(&sqrt5, ctx),
    }
}

fn check_arg(re: f64, im: f64) -> Result<()> {
    if !(re.is_finite() && im.is_finite())
        || re.abs() > EXTENDED_ARG_LIMIT
        || im.abs() > EXTENDED_ARG_LIMIT
    {
        return Err(GoldenError::ArgumentOutOfRange {
            re,
            im,
            limit: EXTENDED_ARG_LIMIT,
        });
    }
    Ok(())
}

/// Analytic continuation F_z of the Fibonacci numbers.
pub fn fib_extended(z: Complex64, precision: u32) -> Result<GoldenValue> {
    let prec = Precision::new(precision)?;
    check_arg(z.re, z.im)?;
    let mut ctx = Ctx::new(prec);
    let hz = HpComplex::from_c64(z, &ctx);
    let value = fib_extended_in(&mut ctx, &hz);
    Ok(GoldenValue {
        z: hz,
        value,
        precision: prec,
    })
}

/// Like [`fib_extended`], with decimal literals parsed at full precision.
pub fn fib_extended_decimal(re: &str, im: &str, precision: u32) -> Result<GoldenValue> {
    let prec = Precision::new(precision)?;
    let mut ctx = Ctx::new(prec);
    let parse = |ctx: &mut Ctx, s: &str| {
        ctx.parse(s)
            .ok_or_else(|| GoldenError::InvalidArgument(format!("not a decimal number: {s:?}")))
    };
    let hz = HpComplex {
        re: parse(&mut ctx, re)?,
        im: parse(&mut ctx, im)?,
    };
    let approx = hz.to_c64(&mut ctx);
    check_arg(approx.re, approx.im)?;
    let value = fib_extended_in(&mut ctx, &hz);
    Ok(GoldenValue {
        z: hz,
        value,
        precision: prec,
    })
}

fn cpowi(ctx: &Ctx, base: &HpComplex, n: i64) -> HpComplex {
    let one = HpComplex::real(ctx.int(1), ctx);
    let mut acc = one.clone();
    for _ in 0..n.unsigned_abs() {
        acc = acc.mul(base, ctx);
    }
    if n < 0 {
        one.div(&acc, ctx)
    } else {
        acc
    }
}

/// Higher Fibonacci number with complex order,
/// F_n^{(q)} = (φ^{qn} − φ′^{qn}) / (φ^q − φ′^q) with φ′^{qn} = (φ′^q)^n.
pub fn fib_higher_extended(ctx: &mut Ctx, n: i64, order: &HpComplex) -> HpComplex {
    let pq = phi_cpow(ctx, order);
    let cq = neg_inv_phi_cpow(ctx, order);
    let num = cpowi(ctx, &pq, n).sub(&cpowi(ctx, &cq, n), ctx);
    let den = pq.sub(&cq, ctx);
    num.div(&den, ctx)
}
