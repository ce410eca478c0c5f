use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Fault, Outcome, Suite, SuiteCtx};
use crate::angular::{
    build_suf2, casimir_suf2, commutator_identity_scan, double_boson_action, neg_one_pow,
    symmetric_report, verify_tilde, BosonOp, DoubleBosonState, Spin,
};
use crate::calculus::{
    fibonacci_exponential_closed, fibonacci_exponential_sum, golden_derivative,
    golden_derivative_at, golden_exp, jackson_antiderivative_fn, product_rules, quotient_rules,
    ExpKind, FnRepr,
};
use crate::error::Result;
use crate::fibonomial::{
    binomial_root, factored_fibonacci_form, factored_root_form, fib_factorial, fibonomial_row,
    full_y_derivative, golden_binomial, golden_polynomial, golden_polynomial_numerator,
    noncomm_closed_form, noncomm_expand, printed_polynomials, vanishes_at_ratio, BinomialForm,
    UnivarPoly,
};
use crate::golden::{
    fib_exact, fib_extended, fib_extended_in, fib_f64, fib_higher, fib_higher_extended, fib_table,
    phi_pow, ZPhi, PHI,
};
use crate::hp::{Ctx, HpComplex, Precision};
use crate::matrix::off_diagonal_max;
use crate::oscillator::{
    build_ladder, diagonal_identities_exact, invert_number, invert_number_minus_branch,
    number_operator_gap, spectrum, Parity,
};
use crate::record::{OutputRecord, Table};

/// Ids of every suite, one per line.
pub const MANIFEST: &str = include_str!("../../verify_manifest.txt");

pub fn suite_ids() -> Vec<&'static str> {
    all().iter().map(|s| s.id).collect()
}

fn rng(ctx: &SuiteCtx, id: &str) -> ChaCha8Rng {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in id.bytes() {
        h = (h ^ b as u64).wrapping_mul(0x0100_0000_01b3);
    }
    ChaCha8Rng::seed_from_u64(ctx.seed ^ h)
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm().max(1.0)
}

fn cr(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn hp_fib(x: f64) -> Result<Complex64> {
    Ok(fib_extended(cr(x), 34)?.to_c64())
}

fn random_poly(r: &mut ChaCha8Rng, max_degree: usize) -> FnRepr {
    let deg = r.random_range(0..=max_degree);
    let coeffs: Vec<i64> = (0..=deg).map(|_| r.random_range(-5..=5)).collect();
    FnRepr::from_int_coeffs(&coeffs)
}

/// 1 + Σ a_{2i} x^{2i} with a ≥ 0, so g ≥ 1 on the real line.
fn positive_poly(r: &mut ChaCha8Rng, max_degree: usize) -> FnRepr {
    let mut coeffs = vec![0i64; max_degree + 1];
    coeffs[0] = r.random_range(1..=4);
    for k in (2..=max_degree).step_by(2) {
        coeffs[k] = r.random_range(0..=3);
    }
    FnRepr::from_int_coeffs(&coeffs)
}

fn sample_point(r: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    loop {
        let x: f64 = r.random_range(-hi..=hi);
        if x.abs() >= lo {
            return x;
        }
    }
}

// ---- golden core ----------------------------------------------------------

fn addition_law(ctx: &SuiteCtx) -> Result<Outcome> {
    let f = fib_table(402);
    let prev = |n: usize| -> BigInt {
        if n == 0 {
            BigInt::one()
        } else {
            f[n - 1].clone()
        }
    };
    for n in 0..=200usize {
        for m in 0..=200usize {
            let mut lhs = f[n + m].clone();
            if ctx.fault == Some(Fault::Fibonacci) && n == 100 && m == 100 {
                lhs += 1;
            }
            if lhs != prev(n) * &f[m] + &f[n] * &f[m + 1] {
                return Ok(Outcome::exact(false, format!("fails at n = {n}, m = {m}")));
            }
        }
    }
    Ok(Outcome::exact(true, "40401 index pairs"))
}

fn subtraction_law(_: &SuiteCtx) -> Result<Outcome> {
    let f = fib_table(101);
    for n in 0..=100i64 {
        for m in 0..=n {
            // (−1/φ)^{−m} = (−φ)^m and (−1)^{−m} = (−1)^m
            let a = &(&ZPhi::sign(m) * &phi_pow(m)) * &ZPhi::from_int(f[n as usize].clone());
            let b = &(&ZPhi::sign(m) * &phi_pow(n)) * &ZPhi::from_int(f[m as usize].clone());
            if &a - &b != ZPhi::from_int(f[(n - m) as usize].clone()) {
                return Ok(Outcome::exact(false, format!("fails at n = {n}, m = {m}")));
            }
        }
    }
    Ok(Outcome::exact(true, "exact in Z[phi]"))
}

fn multiplication_law(_: &SuiteCtx) -> Result<Outcome> {
    for n in 1..=30i64 {
        for m in 1..=30i64 {
            let higher = fib_higher(m, n)?;
            if !higher.is_integer() {
                return Ok(Outcome::exact(
                    false,
                    format!("F_{m}^({n}) is not an integer"),
                ));
            }
            let rhs = BigRational::from_integer(fib_exact(n)?) * higher;
            if rhs != BigRational::from_integer(fib_exact(n * m)?) {
                return Ok(Outcome::exact(false, format!("fails at n = {n}, m = {m}")));
            }
        }
    }
    Ok(Outcome::exact(
        true,
        "higher Fibonacci numbers are integers",
    ))
}

fn division_law(_: &SuiteCtx) -> Result<Outcome> {
    let mut hp = Ctx::new(Precision::new(34)?);
    let mut worst = 0.0f64;
    for (m, n) in [(4i64, 2i64), (6, 3), (6, 2)] {
        let q = m as f64 / n as f64;
        let z = HpComplex::from_c64(cr(q), &hp);
        let direct = fib_extended_in(&mut hp, &z);
        let fm = HpComplex::from_c64(cr(fib_f64(m)), &hp);
        let higher = fib_higher_extended(&mut hp, n, &z);
        let via = fm.div(&higher, &hp);
        worst = worst.max(rel(direct.to_c64(&mut hp), via.to_c64(&mut hp)));
    }
    Ok(Outcome::measured(worst, "(m, n) in {(4,2), (6,3), (6,2)}"))
}

fn lucas_combinations(_: &SuiteCtx) -> Result<Outcome> {
    for k in 1..=50i64 {
        let even = &phi_pow(2 * k) + &phi_pow(-2 * k);
        let odd = &phi_pow(2 * k + 1) - &phi_pow(-(2 * k + 1));
        let even_rhs = fib_exact(2 * k)? + fib_exact(2 * k - 1)? * 2u32;
        let odd_rhs = fib_exact(2 * k + 1)? + fib_exact(2 * k)? * 2u32;
        if even != ZPhi::from_int(even_rhs) || odd != ZPhi::from_int(odd_rhs) {
            return Ok(Outcome::exact(false, format!("fails at k = {k}")));
        }
    }
    Ok(Outcome::exact(true, "exact in Z[phi]"))
}

fn real_addition(ctx: &SuiteCtx) -> Result<Outcome> {
    let mut r = rng(ctx, "core.real_addition");
    let mut worst = 0.0f64;
    for _ in 0..20 {
        let x: f64 = r.random_range(-5.0..=5.0);
        let y: f64 = r.random_range(-5.0..=5.0);
        let lhs = hp_fib(x + y)?;
        let rhs = hp_fib(y)? * PHI.powf(x) + neg_one_pow(y) * PHI.powf(-y) * hp_fib(x)?;
        worst = worst.max(rel(rhs, lhs));
    }
    Ok(Outcome::measured(worst, "20 seeded pairs"))
}

fn real_recurrence(ctx: &SuiteCtx) -> Result<Outcome> {
    let mut r = rng(ctx, "core.real_recurrence");
    let mut worst = 0.0f64;
    for _ in 0..20 {
        let x: f64 = r.random_range(-10.0..=10.0);
        let lhs = hp_fib(x)?;
        worst = worst.max(rel(hp_fib(x - 1.0)? + hp_fib(x - 2.0)?, lhs));
    }
    Ok(Outcome::measured(worst, "20 seeded points"))
}

// ---- fibonomial -----------------------------------------------------------

fn binomial_forms(_: &SuiteCtx) -> Result<Outcome> {
    for n in 0..=20 {
        if golden_binomial(n, BinomialForm::Product)?
            != golden_binomial(n, BinomialForm::Expansion)?
        {
            return Ok(Outcome::exact(false, format!("forms differ at n = {n}")));
        }
    }
    Ok(Outcome::exact(true, "product and expansion agree"))
}

fn binomial_roots(_: &SuiteCtx) -> Result<Outcome> {
    let mut unsigned_roots = 0;
    let mut total = 0;
    for n in 1..=10u32 {
        let p = golden_binomial(n, BinomialForm::Product)?;
        for j in 0..n {
            total += 1;
            if !vanishes_at_ratio(&p, &binomial_root(n, j)) {
                return Ok(Outcome::exact(
                    false,
                    format!("n = {n}, j = {j} is not a root"),
                ));
            }
            let unsigned = -phi_pow(n as i64 - 1 - 2 * j as i64);
            if vanishes_at_ratio(&p, &unsigned) {
                unsigned_roots += 1;
            }
        }
    }
    Ok(Outcome::exact(
        true,
        format!(
            "roots are (-1)^(j+1) phi^(n-1-2j); the unsigned list -phi^(n-1-2j) gives roots in {unsigned_roots} of {total} cases"
        ),
    ))
}

fn symmetry_integrality(_: &SuiteCtx) -> Result<Outcome> {
    let facts: Vec<BigInt> = (0..=100).map(fib_factorial).collect::<Result<_>>()?;
    for n in 0..=100usize {
        let row = fibonomial_row(n);
        for k in 0..=n {
            let (q, rem) = facts[n].div_rem(&(&facts[k] * &facts[n - k]));
            if !rem.is_zero() || q != row[k] || row[k] != row[n - k] || !row[k].is_positive() {
                return Ok(Outcome::exact(false, format!("fails at n = {n}, k = {k}")));
            }
        }
    }
    Ok(Outcome::exact(true, "factorial quotient oracle"))
}

fn factored_polynomials(_: &SuiteCtx) -> Result<Outcome> {
    for n in 0..=8 {
        let def = golden_polynomial_numerator(n)?;
        if factored_root_form(n) != def || factored_fibonacci_form(n) != def {
            return Ok(Outcome::exact(
                false,
                format!("factored form differs at n = {n}"),
            ));
        }
    }
    let mut bad = Vec::new();
    for p in printed_polynomials() {
        if !p.matches_definition()? {
            bad.push(p.degree);
        }
    }
    if bad.is_empty() {
        Ok(Outcome::exact(true, "tabulated P_1..P_7 match exactly"))
    } else {
        Ok(Outcome::exact(
            false,
            format!("tabulated degrees {bad:?} differ"),
        ))
    }
}

fn noncomm_bridge(_: &SuiteCtx) -> Result<Outcome> {
    for n in 0..=10 {
        if noncomm_expand(n)?.coeffs != noncomm_closed_form(n) {
            return Ok(Outcome::exact(false, format!("fails at n = {n}")));
        }
    }
    Ok(Outcome::exact(
        true,
        "coefficients [n,k]_F (-1/phi)^(k(k-1)/2)",
    ))
}

// ---- calculus ------------------------------------------------------------

fn leibnitz_harness(
    ctx: &SuiteCtx,
    id: &str,
    pick: impl Fn(&crate::calculus::ProductRules) -> f64,
    alphas: usize,
) -> Result<Outcome> {
    let mut r = rng(ctx, id);
    let a: Vec<f64> = (0..alphas).map(|_| r.random_range(-2.0..=2.0)).collect();
    let mut worst = 0.0f64;
    for _ in 0..20 {
        let f = random_poly(&mut r, 6);
        let g = random_poly(&mut r, 6);
        let x = sample_point(&mut r, 1e-3, 2.0);
        let rules = product_rules(&f, &g, cr(x), &a)?;
        worst = worst.max(pick(&rules));
    }
    Ok(Outcome::measured(worst, "20 seeded polynomial pairs"))
}

fn leibnitz_image(ctx: &SuiteCtx) -> Result<Outcome> {
    leibnitz_harness(
        ctx,
        "calculus.leibnitz_image",
        |p| rel(p.image_first, p.direct),
        0,
    )
}

fn leibnitz_symmetric(ctx: &SuiteCtx) -> Result<Outcome> {
    leibnitz_harness(
        ctx,
        "calculus.leibnitz_symmetric",
        |p| rel(p.image_second, p.direct).max(rel(p.symmetric, p.direct)),
        0,
    )
}

fn leibnitz_alpha(ctx: &SuiteCtx) -> Result<Outcome> {
    leibnitz_harness(
        ctx,
        "calculus.leibnitz_alpha",
        |p| {
            p.weighted
                .iter()
                .map(|(_, v)| rel(*v, p.direct))
                .fold(0.0, f64::max)
        },
        5,
    )
}

fn quotient(ctx: &SuiteCtx) -> Result<Outcome> {
    let mut r = rng(ctx, "calculus.quotient_rules");
    let mut worst = 0.0f64;
    for _ in 0..20 {
        let f = random_poly(&mut r, 6);
        let g = positive_poly(&mut r, 6);
        let x = sample_point(&mut r, 0.1, 2.0);
        worst = worst.max(quotient_rules(&f, &g, cr(x))?.max_residual());
    }
    Ok(Outcome::measured(worst, "20 seeded pairs with g >= 1"))
}

fn summation(_: &SuiteCtx) -> Result<Outcome> {
    let s = fibonacci_exponential_sum(40);
    let residual = (s - fibonacci_exponential_closed()).abs();
    Ok(Outcome::measured(residual, format!("40-term sum {s:.15}")))
}

fn exp_eigenrelations(_: &SuiteCtx) -> Result<Outcome> {
    let mut worst = 0.0f64;
    for k in [0.5, -1.3, 1.0] {
        let kc = cr(k);
        let small = FnRepr::exp_small(kc, 120)?;
        let big = FnRepr::exp_big(kc, 120)?;
        let big_neg = FnRepr::exp_big(-kc, 120)?;
        let d_small = golden_derivative(&small);
        let d_big = golden_derivative(&big);
        let small_call =
            FnRepr::fallible(move |x| Ok(golden_exp(x * k, ExpKind::SmallE, 120)?.value));
        let big_call = FnRepr::fallible(move |x| Ok(golden_exp(x * k, ExpKind::BigE, 120)?.value));
        for x in [0.4, 1.2, -0.7] {
            let xc = cr(x);
            let es = small.eval(xc)?;
            let eb = big_neg.eval(xc)?;
            worst = worst
                .max(rel(d_small.eval(xc)?, kc * es))
                .max(rel(d_big.eval(xc)?, kc * eb))
                .max(rel(golden_derivative_at(&small_call, xc)?, kc * es))
                .max(rel(golden_derivative_at(&big_call, xc)?, kc * eb));
        }
    }
    Ok(Outcome::measured(
        worst,
        "series and callable forms, k in {0.5, -1.3, 1}",
    ))
}

fn binomial_derivative(_: &SuiteCtx) -> Result<Outcome> {
    for n in 1..=10u32 {
        let lhs = golden_binomial(n, BinomialForm::Expansion)?.golden_derivative_x();
        let rhs = golden_binomial(n - 1, BinomialForm::Expansion)?
            .scale(&ZPhi::from_int(fib_exact(n as i64)?));
        if lhs != rhs {
            return Ok(Outcome::exact(
                false,
                format!("x-derivative fails at n = {n}"),
            ));
        }
    }
    for k in 1..=4u32 {
        let expected = &ZPhi::sign(k as i64) * &ZPhi::from_int(fib_factorial(2 * k as i64)?);
        if full_y_derivative(2 * k)? != expected {
            return Ok(Outcome::exact(
                false,
                format!("y-derivative fails at k = {k}"),
            ));
        }
    }
    Ok(Outcome::exact(true, "exact polynomial identities"))
}

fn taylor_basis(_: &SuiteCtx) -> Result<Outcome> {
    let points = [
        BigRational::zero(),
        BigRational::one(),
        BigRational::new((-5).into(), 3.into()),
    ];
    for a in &points {
        let mut prev: UnivarPoly<BigRational> = golden_polynomial(0, a)?;
        for n in 1..=15 {
            let p = golden_polynomial(n, a)?;
            if p.golden_derivative() != prev {
                return Ok(Outcome::exact(false, format!("fails at n = {n}, a = {a}")));
            }
            prev = p;
        }
    }
    Ok(Outcome::exact(true, "a in {0, 1, -5/3}"))
}

// ---- oscillator ----------------------------------------------------------

fn ladder(ctx: &SuiteCtx, dim: usize) -> Result<crate::oscillator::LadderSet> {
    let l = build_ladder(dim)?;
    Ok(if ctx.fault == Some(Fault::Ladder) {
        l.perturbed(1e-6)
    } else {
        l
    })
}

fn diagonal_exact(_: &SuiteCtx) -> Result<Outcome> {
    Ok(match diagonal_identities_exact(100)? {
        None => Outcome::exact(true, "exact in Z[phi]"),
        Some(n) => Outcome::exact(false, format!("fails at n = {n}")),
    })
}

fn fock_normalization(ctx: &SuiteCtx) -> Result<Outcome> {
    let l = ladder(ctx, 40)?;
    let worst = l
        .fock_states()
        .iter()
        .map(|v| (v.norm() - 1.0).abs())
        .fold(0.0, f64::max);
    Ok(Outcome::measured(worst, "dim 40"))
}

fn number_gap(ctx: &SuiteCtx) -> Result<Outcome> {
    let gap = number_operator_gap(&ladder(ctx, 20)?);
    Ok(Outcome {
        residual: 0.0,
        holds: Some(gap >= 1.0),
        notes: format!("max |n - F_n| over 3 <= n < 20 is {gap}"),
    })
}

fn hamiltonian_diagonal(ctx: &SuiteCtx) -> Result<Outcome> {
    let dim = 20;
    let l = ladder(ctx, dim)?;
    let h = l.hamiltonian();
    let table = spectrum(dim - 2, 1.0)?;
    let mut worst = off_diagonal_max(&h);
    for level in &table.levels {
        worst = worst.max(rel(h[(level.n, level.n)], cr(level.energy)));
    }
    Ok(Outcome::measured(worst, "interior states of dim 20"))
}

// ---- angular momentum ----------------------------------------------------

fn docagne(_: &SuiteCtx) -> Result<Outcome> {
    Ok(match commutator_identity_scan(40)? {
        None => Outcome::exact(true, "exact integers, both sign forms"),
        Some((j, m)) => Outcome::exact(false, format!("fails at j = {j}, m = {m}")),
    })
}

fn casimir_forms(_: &SuiteCtx) -> Result<Outcome> {
    let mut worst = 0.0f64;
    for twice in 0..=12 {
        let f = casimir_suf2(Spin::from_twice(twice)?);
        worst = worst
            .max(f.forms_residual.value)
            .max(f.eigen_residual.value);
    }
    Ok(Outcome::measured(
        worst,
        "2j = 0..12, eigenvalue (-1)^(-j) F_j F_(j+1)",
    ))
}

fn tilde_anticommutator(_: &SuiteCtx) -> Result<Outcome> {
    let mut worst = 0.0f64;
    for twice in 0..=10 {
        let r = verify_tilde(Spin::from_twice(twice)?, 0.0);
        worst = worst
            .max(r.anticommutator_residual.value)
            .max(r.anticommutator_off_diagonal);
    }
    Ok(Outcome::measured(worst, "2j = 0..10"))
}

fn relabeling(_: &SuiteCtx) -> Result<Outcome> {
    for twice in 0..=12u32 {
        let s = Spin::from_twice(twice)?;
        let rep = build_suf2(s);
        for k in 0..s.dim() {
            let (n1, n2) = s.occupations(k);
            let st = DoubleBosonState::new(n1 as u64, n2 as u64);
            let up = double_boson_action(st, BosonOp::Plus).amplitude;
            let down = double_boson_action(st, BosonOp::Minus).amplitude;
            let want_up = if k + 1 < s.dim() {
                rep.j_plus[(k + 1, k)].re
            } else {
                0.0
            };
            let want_down = if k > 0 {
                rep.j_minus[(k - 1, k)].re
            } else {
                0.0
            };
            if up != want_up || down != want_down || st.m() != s.m(k) {
                return Ok(Outcome::exact(
                    false,
                    format!("fails at 2j = {twice}, k = {k}"),
                ));
            }
        }
    }
    Ok(Outcome::exact(true, "2j = 0..12"))
}

fn hermiticity(_: &SuiteCtx) -> Result<Outcome> {
    let mut worst_phase_defect = 0.0f64;
    for twice in 0..=10 {
        let s = Spin::from_twice(twice)?;
        let std = build_suf2(s);
        if std.j_plus.adjoint() != std.j_minus {
            return Ok(Outcome::exact(
                false,
                format!("standard rep not hermitian at 2j = {twice}"),
            ));
        }
        let t = verify_tilde(s, 0.0);
        worst_phase_defect = worst_phase_defect.max(t.hermiticity.magnitude);
    }
    let broken = verify_tilde(Spin::integer(2)?, 0.0).hermiticity.total;
    Ok(Outcome {
        residual: worst_phase_defect,
        holds: Some(worst_phase_defect <= 1e-12 && broken > 0.5),
        notes: format!(
            "standard exact; tilde differs from its adjoint only by unit phases (entry defect {broken:.3} at j = 2)"
        ),
    })
}

fn symmetric(_: &SuiteCtx) -> Result<Outcome> {
    let mut z = 0.0f64;
    let mut comm = 0.0f64;
    let mut real = 0.0f64;
    for twice in 0..=8 {
        let r = symmetric_report(Spin::from_twice(twice)?);
        z = z.max(r.z_residual.value);
        comm = comm.max(r.commutator_residual.value);
        real = real.max(r.real_form_residual.value);
    }
    let complete = comm.is_finite() && real.is_finite();
    Ok(Outcome {
        residual: z,
        holds: Some(complete && z <= 1e-12),
        notes: format!(
            "recorded only: [J+,J-] residual {comm:.3e} against the (i phi, i/phi) target and {real:.3e} against the real form, 2j = 0..8; max_residual is the J_z relation"
        ),
    })
}

// ---- documented deviations -----------------------------------------------

#[allow(clippy::approx_constant)]
fn golden_pi(_: &SuiteCtx) -> Result<Outcome> {
    let printed = Complex64::new(4.73068, 0.0939706);
    let f_pi = fib_extended(cr(std::f64::consts::PI), 34)?.to_c64();
    let exact_gap = (f_pi * 5f64.sqrt() - printed).norm() / printed.norm();
    // φ^x − (−1)^x φ^{−x} with φ ≈ 1.618 and x ≈ 3.14
    let (phi_r, x_r) = (1.618f64, 3.14f64);
    let rounded = cr(phi_r.powf(x_r)) - neg_one_pow(x_r) * phi_r.powf(-x_r);
    let residual = (rounded - printed).norm() / printed.norm();
    Ok(Outcome {
        residual,
        holds: Some(residual < 1e-5),
        notes: format!(
            "F_pi = {:.6} + {:.7}i; the tabulated value is sqrt(5) F_x at phi = 1.618, x = 3.14 (relative gap {exact_gap:.2e} to sqrt(5) F_pi)",
            f_pi.re, f_pi.im
        ),
    })
}

fn inversion_branch(_: &SuiteCtx) -> Result<Outcome> {
    let mut worst = 0.0f64;
    for n in 3..=60i64 {
        let f = fib_exact(n)?;
        let parity = Parity::of(n);
        if invert_number(&f, parity, 34)? != n {
            return Ok(Outcome::exact(false, format!("plus branch misses n = {n}")));
        }
        worst = worst.max((invert_number_minus_branch(&f, parity, 34)? + n as f64).abs());
    }
    Ok(Outcome {
        residual: worst,
        holds: Some(worst < 1e-9),
        notes: "plus branch recovers n; the minus branch gives -n".into(),
    })
}

fn integral_notation(_: &SuiteCtx) -> Result<Outcome> {
    let mut worst = 0.0f64;
    for coeffs in [&[1i64][..], &[0, 1], &[0, 0, 1]] {
        let g = FnRepr::from_int_coeffs(coeffs);
        let big_g = jackson_antiderivative_fn(&g, 200)?;
        for x in [0.5, 1.0, 2.0] {
            let d = golden_derivative_at(&big_g, cr(x))?;
            worst = worst.max(rel(d, g.eval(cr(x))?));
        }
    }
    Ok(Outcome::measured(
        worst,
        "integrand read as the same g on both sides; D_F G = g for 1, x, x^2",
    ))
}

// ---- front-end contracts -------------------------------------------------

fn sample_record() -> Result<(OutputRecord, Table)> {
    let t = spectrum(3, 1.0)?;
    let mut table = Table::new(["n", "E_n"]);
    for l in &t.levels {
        table.push([l.n.to_string(), l.energy.to_string()]);
    }
    let rec = OutputRecord::new("spectrum", 34)
        .param("n_max", 3)
        .param("hbar_omega", 1.0)
        .with_value(table.to_json_rows());
    Ok((rec, table))
}

fn determinism(ctx: &SuiteCtx) -> Result<Outcome> {
    let a = sample_record()?.0.to_json();
    let b = sample_record()?.0.to_json();
    let r1 = real_addition(ctx)?;
    let r2 = real_addition(ctx)?;
    Ok(Outcome::exact(
        a == b && r1.residual.to_bits() == r2.residual.to_bits(),
        "repeated output and seeded suites are bit-identical",
    ))
}

fn schema(_: &SuiteCtx) -> Result<Outcome> {
    let (rec, table) = sample_record()?;
    let v: serde_json::Value = serde_json::from_str(&rec.to_json())
        .map_err(|e| crate::error::GoldenError::InvalidArgument(e.to_string()))?;
    let keys = ["command", "params", "precision", "value"]
        .iter()
        .all(|k| v.get(k).is_some());
    let back: std::result::Result<OutputRecord, _> = serde_json::from_value(v);
    Ok(Outcome::exact(
        keys && back.is_ok() && !table.header().is_empty(),
        "record keys present, round trip ok, header row present",
    ))
}

fn coverage(_: &SuiteCtx) -> Result<Outcome> {
    let manifest: BTreeSet<&str> = MANIFEST
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let ids: BTreeSet<&str> = suite_ids().into_iter().collect();
    let missing: Vec<_> = manifest.difference(&ids).collect();
    let extra: Vec<_> = ids.difference(&manifest).collect();
    Ok(Outcome::exact(
        missing.is_empty() && extra.is_empty(),
        if missing.is_empty() && extra.is_empty() {
            format!("{} ids match the manifest", ids.len())
        } else {
            format!("missing {missing:?}, unlisted {extra:?}")
        },
    ))
}

macro_rules! suite {
    ($id:expr, $anchor:expr, $range:expr, exact, $run:expr) => {
        Suite {
            id: $id,
            anchor: $anchor,
            range: $range,
            tol: None,
            known_deviation: false,
            run: $run,
        }
    };
    ($id:expr, $anchor:expr, $range:expr, ($d:expr, $s:expr), $run:expr) => {
        Suite {
            id: $id,
            anchor: $anchor,
            range: $range,
            tol: Some(($d, $s)),
            known_deviation: false,
            run: $run,
        }
    };
}

pub(crate) fn all() -> Vec<Suite> {
    let mut v = vec![
        suite!("core.addition_law", "F_{n+m} = F_{n-1}F_m + F_nF_{m+1}", "0 <= n, m <= 200", exact, addition_law),
        suite!("core.subtraction_law", "F_{n-m} = (-1/phi)^{-m}F_n - phi^n(-1)^{-m}F_m", "0 <= m <= n <= 100", exact, subtraction_law),
        suite!("core.multiplication_law", "F_{nm} = F_n F_m^{(n)}", "1 <= n, m <= 30", exact, multiplication_law),
        suite!("core.division_law", "F_{m/n} = F_m / F_n^{(m/n)}", "(m,n) in {(4,2),(6,3),(6,2)}", (1e-10, 1e-20), division_law),
        suite!("core.lucas_combinations", "phi^{2k} + phi^{-2k} = F_{2k} + 2F_{2k-1}; phi^{2k+1} - phi^{-2k-1} = F_{2k+1} + 2F_{2k}", "1 <= k <= 50", exact, lucas_combinations),
        suite!("core.real_addition", "F_{x+y} = phi^x F_y + (-1/phi)^y F_x", "20 pairs in [-5, 5]", (1e-10, 1e-12), real_addition),
        suite!("core.real_recurrence", "F_x = F_{x-1} + F_{x-2}", "20 points in [-10, 10]", (1e-10, 1e-12), real_recurrence),
        suite!("fibonomial.binomial_forms", "(x+y)_F^n product = Fibonomial expansion", "0 <= n <= 20", exact, binomial_forms),
        suite!("fibonomial.binomial_roots", "(x+y)_F^n = 0 at x/y = (-1)^{j+1} phi^{n-1-2j}", "1 <= n <= 10", exact, binomial_roots),
        suite!("fibonomial.symmetry_integrality", "[n,k]_F = [n,n-k]_F, positive integer", "0 <= k <= n <= 100", exact, symmetry_integrality),
        suite!("fibonomial.factored_polynomials", "P_n factored forms = (x-a)_F^n / F_n!", "n <= 8; tabulated P_1..P_7", exact, factored_polynomials),
        suite!("fibonomial.noncomm_bridge", "(x+y)^n on yx = phi xy: [n,k]_F (-1/phi)^{k(k-1)/2}", "0 <= n <= 10", exact, noncomm_bridge),
        suite!("calculus.leibnitz_image", "D_F(fg) = D_F f g(phi x) + f(-x/phi) D_F g", "20 pairs, degree <= 6, x in [-2,2]\\{0}", (1e-10, 1e-12), leibnitz_image),
        suite!("calculus.leibnitz_symmetric", "D_F(fg) = D_F f g(-x/phi) + f(phi x) D_F g and the averaged form", "20 pairs, degree <= 6, x in [-2,2]\\{0}", (1e-10, 1e-12), leibnitz_symmetric),
        suite!("calculus.leibnitz_alpha", "D_F(fg) with alpha-weighted images", "5 alpha in [-2,2], 20 pairs", (1e-10, 1e-12), leibnitz_alpha),
        suite!("calculus.quotient_rules", "D_F(f/g), three quotient forms", "20 pairs, g >= 1, |x| in [0.1, 2]", (1e-10, 1e-11), quotient),
        suite!("calculus.summation_formula", "sum F_n/n! = e^{1/2} sinh(sqrt5/2)/(sqrt5/2)", "40 terms", (1e-12, 1e-14), summation),
        suite!("calculus.exp_eigenrelations", "D_F e_F^{kx} = k e_F^{kx}; D_F E_F^{kx} = k E_F^{-kx}", "k in {0.5,-1.3,1}, x in {0.4,1.2,-0.7}", (1e-8, 1e-10), exp_eigenrelations),
        suite!("calculus.binomial_derivative", "D_F^x (x+y)_F^n = F_n (x+y)_F^{n-1}; (D_F^y)^{2k}(x+y)_F^{2k} = (-1)^k F_{2k}!", "n <= 10, k <= 4", exact, binomial_derivative),
        suite!("calculus.taylor_basis", "D_F P_n = P_{n-1}", "1 <= n <= 15", exact, taylor_basis),
        suite!("oscillator.diagonal_exact", "[n+1]_F - phi[n]_F = (-1/phi)^n; [n+1]_F + [n]_F/phi = phi^n", "0 <= n <= 100", exact, diagonal_exact),
        suite!("oscillator.fock_normalization", "|n> = (b+)^n |0> / sqrt(F_n!) has unit norm", "n < 40", (1e-12, 1e-13), fock_normalization),
        suite!("oscillator.number_operator_gap", "N != b+b", "3 <= n < 20", exact, number_gap),
        suite!("oscillator.hamiltonian_diagonal", "H = (b+b + bb+)/2 = diag(F_{n+2}/2)", "interior states, dim 20", (1e-12, 1e-14), hamiltonian_diagonal),
        suite!("angular.docagne", "F_{j+m}F_{j-m+1} - F_{j-m}F_{j+m+1} = (-1)^{j-m}F_{2m}", "0 <= |m| <= j <= 40", exact, docagne),
        suite!("angular.casimir_forms", "C^F both forms = (-1)^{-j} F_j F_{j+1}", "2j <= 12", (1e-12, 1e-13), casimir_forms),
        suite!("angular.tilde_anticommutator", "{J+, J-} = [2J_z]_F = diag(F_{2m})", "2j <= 10", (1e-10, 1e-12), tilde_anticommutator),
        suite!("angular.relabeling", "|n1, n2> = |j, m> with n1 = j+m, n2 = j-m", "2j <= 12", exact, relabeling),
        suite!("angular.hermiticity", "J-^F = (J+^F)^dagger; tilde only up to phases", "2j <= 10", exact, hermiticity),
        suite!("angular.symmetric_residual", "[J+, J-] = [2J_z]_{i phi, i/phi} (-1)^{1/2 - J_z}", "2j <= 8", exact, symmetric),
        suite!("cli.determinism", "identical inputs give identical output", "sample record, seeded suite", exact, determinism),
        suite!("cli.schema", "records carry command, params, precision, value", "sample record", exact, schema),
        suite!("cli.coverage", "suite ids = manifest", "all suites", exact, coverage),
    ];
    for (id, anchor, range, run) in [
        (
            "deviation.golden_pi",
            "F_pi with the 1/sqrt5 factor",
            "z = pi",
            golden_pi as fn(&SuiteCtx) -> Result<Outcome>,
        ),
        (
            "deviation.inversion_branch",
            "n = log_phi(sqrt5/2 F + sqrt(5F^2/4 +- 1))",
            "3 <= n <= 60",
            inversion_branch,
        ),
        (
            "deviation.integral_notation",
            "G(x) = (1-Q) x sum Q^k g(x Q^k / phi)",
            "g in {1, x, x^2}, x in {0.5, 1, 2}",
            integral_notation,
        ),
    ] {
        v.push(Suite {
            id,
            anchor,
            range,
            tol: if id == "deviation.integral_notation" {
                Some((1e-10, 1e-12))
            } else {
                None
            },
            known_deviation: true,
            run,
        });
    }
    v
}
