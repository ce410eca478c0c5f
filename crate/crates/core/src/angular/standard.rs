use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::rep::{diag_by_m, jz_matrix, ladder_pair, AngularRep, Variant};
use super::spin::{fib_real, neg_one_pow, Spin};
use crate::error::{GoldenError, Result};
use crate::golden::{fib_exact, fib_f64};
use crate::matrix::{c, commutator, diag, residual, CMatrix, EntryResidual};

pub const CASIMIR_RATIO_MAX: u32 = 10_000;

fn amp(a: i64, b: i64) -> Complex64 {
    c((fib_f64(a) * fib_f64(b)).sqrt())
}

/// su_F(2) generators J₊ = b₁⁺b₂, J₋ = b₂⁺b₁, J_z = (N₁ − N₂)/2 on spin j,
/// with the first Casimir form attached.
pub fn build_suf2(j: Spin) -> AngularRep {
    let (j_plus, j_minus) = ladder_pair(j, |n1, n2| amp(n1 + 1, n2), |n1, n2| amp(n1, n2 + 1));
    let mut rep = AngularRep {
        j,
        variant: Variant::StandardF,
        j_plus,
        j_minus,
        j_z: jz_matrix(j),
        casimir: CMatrix::zeros(0, 0),
    };
    rep.casimir = casimir_forms_of(&rep).0;
    rep
}

/// (−1)^{−J_z}(F_{J_z}F_{J_z+1} + (−1)^{−N₂}J₋J₊) and
/// (−1)^{−J_z}(−F_{J_z}F_{J_z−1} + (−1)^{−N₂}J₊J₋).
fn casimir_forms_of(rep: &AngularRep) -> (CMatrix, CMatrix) {
    let j = rep.j;
    let outer = diag_by_m(j, |m, _, _| neg_one_pow(-m));
    let inner = diag_by_m(j, |_, _, n2| neg_one_pow(-(n2 as f64)));
    let up = diag_by_m(j, |m, _, _| fib_real(m) * fib_real(m + 1.0));
    let down = diag_by_m(j, |m, _, _| fib_real(m) * fib_real(m - 1.0));
    let first = &outer * (up + &inner * (&rep.j_minus * &rep.j_plus));
    let second = &outer * (-down + &inner * (&rep.j_plus * &rep.j_minus));
    (first, second)
}

/// C_j = (−1)^{−j} F_j F_{j+1}, with F taken at half-integers when needed.
pub fn casimir_eigenvalue(j: Spin) -> Complex64 {
    let v = j.value();
    neg_one_pow(-v) * fib_real(v) * fib_real(v + 1.0)
}

#[derive(Clone, Debug, PartialEq)]
pub struct CasimirForms {
    pub j: Spin,
    pub first: CMatrix,
    pub second: CMatrix,
    pub eigenvalue: Complex64,
    /// first vs second
    pub forms_residual: EntryResidual,
    /// first vs eigenvalue·1
    pub eigen_residual: EntryResidual,
}

impl CasimirForms {
    pub fn agree(&self, tol: f64) -> bool {
        self.forms_residual.value <= tol && self.eigen_residual.value <= tol
    }
}

pub fn casimir_suf2(j: Spin) -> CasimirForms {
    let rep = build_suf2(j);
    let (first, second) = casimir_forms_of(&rep);
    let eigenvalue = casimir_eigenvalue(j);
    let target = diag(&vec![eigenvalue; j.dim()]);
    CasimirForms {
        j,
        forms_residual: residual(&first, &second),
        eigen_residual: residual(&first, &target),
        first,
        second,
        eigenvalue,
    }
}

/// F_{n1}F_{n2+1} − F_{n2}F_{n1+1} = (−1)^{n2}F_{n1−n2}, together with the
/// mirrored form −(−1)^{n1}F_{n2−n1}, in exact integers.
pub fn commutator_identity_holds(n1: i64, n2: i64) -> Result<bool> {
    let lhs = fib_exact(n1)? * fib_exact(n2 + 1)? - fib_exact(n2)? * fib_exact(n1 + 1)?;
    let sign = |n: i64| if n.rem_euclid(2) == 0 { 1i32 } else { -1i32 };
    let rhs = fib_exact(n1 - n2)? * sign(n2);
    let mirrored = -(fib_exact(n2 - n1)? * sign(n1));
    Ok(lhs == rhs && rhs == mirrored)
}

/// First (j, m) with 0 ≤ j ≤ j_max, −j ≤ m ≤ j violating the exact
/// commutator identity, or `None`.
pub fn commutator_identity_scan(j_max: i64) -> Result<Option<(i64, i64)>> {
    for j in 0..=j_max {
        for m in -j..=j {
            if !commutator_identity_holds(j + m, j - m)? {
                return Ok(Some((j, m)));
            }
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CommutatorReport {
    pub j: Spin,
    pub tol: f64,
    /// 2m values where the exact identity fails.
    pub exact_failures: Vec<i64>,
    pub commutator_residual: EntryResidual,
    pub z_residual: EntryResidual,
}

impl CommutatorReport {
    pub fn pass(&self) -> bool {
        self.exact_failures.is_empty()
            && self.commutator_residual.value <= self.tol
            && self.z_residual.value <= self.tol
    }
}

/// [J₊, J₋] = (−1)^{N₂}F_{2J_z} and [J_z, J±] = ±J± on spin j.
pub fn verify_commutators(j: Spin, tol: f64) -> Result<CommutatorReport> {
    let rep = build_suf2(j);
    let mut exact_failures = Vec::new();
    for k in 0..j.dim() {
        let (n1, n2) = j.occupations(k);
        if !commutator_identity_holds(n1, n2)? {
            exact_failures.push(n1 - n2);
        }
    }
    let expected = diag_by_m(j, |_, n1, n2| neg_one_pow(n2 as f64) * fib_f64(n1 - n2));
    Ok(CommutatorReport {
        j,
        tol,
        exact_failures,
        commutator_residual: residual(&commutator(&rep.j_plus, &rep.j_minus), &expected),
        z_residual: rep.z_commutator_residual(),
    })
}

/// Worst deviation of J±^F from the standard J± dressed by
/// √(F_N/N) factors, in both operator orderings.
pub fn factorization_residual(j: Spin) -> EntryResidual {
    let rep = build_suf2(j);
    let root = |n: i64| -> f64 {
        if n == 0 {
            1.0
        } else {
            (fib_f64(n) / n as f64).sqrt()
        }
    };
    let ordinary = |a: i64, b: i64| c(((a * b) as f64).sqrt());
    let (sp, sm) = ladder_pair(
        j,
        |n1, n2| ordinary(n1 + 1, n2),
        |n1, n2| ordinary(n1, n2 + 1),
    );
    let n1_scale = |shift: i64| diag_by_m(j, move |_, n1, _| c(root(n1 + shift)));
    let n2_scale = |shift: i64| diag_by_m(j, move |_, _, n2| c(root(n2 + shift)));
    let plus_right = &sp * n1_scale(1) * n2_scale(0);
    let plus_left = n1_scale(0) * n2_scale(1) * &sp;
    let minus_right = &sm * n1_scale(0) * n2_scale(1);
    let minus_left = n1_scale(1) * n2_scale(0) * &sm;
    residual(&plus_right, &rep.j_plus)
        .max(residual(&plus_left, &rep.j_plus))
        .max(residual(&minus_right, &rep.j_minus))
        .max(residual(&minus_left, &rep.j_minus))
}

/// A two-mode Fock state |n1, n2⟩, labelled |j, m⟩ with
/// j = (n1 + n2)/2 and m = (n1 − n2)/2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DoubleBosonState {
    pub n1: u64,
    pub n2: u64,
}

impl DoubleBosonState {
    pub fn new(n1: u64, n2: u64) -> Self {
        Self { n1, n2 }
    }

    pub fn j(&self) -> f64 {
        (self.n1 + self.n2) as f64 / 2.0
    }

    pub fn m(&self) -> f64 {
        (self.n1 as f64 - self.n2 as f64) / 2.0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BosonOp {
    Plus,
    Minus,
    Z,
}

/// Amplitude and image state; the state is `None` when the amplitude is
/// killed by an F_0 factor.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct BosonAction {
    pub amplitude: f64,
    pub state: Option<DoubleBosonState>,
}

pub fn double_boson_action(s: DoubleBosonState, op: BosonOp) -> BosonAction {
    let (n1, n2) = (s.n1 as i64, s.n2 as i64);
    match op {
        BosonOp::Plus if s.n2 == 0 => BosonAction {
            amplitude: 0.0,
            state: None,
        },
        BosonOp::Minus if s.n1 == 0 => BosonAction {
            amplitude: 0.0,
            state: None,
        },
        BosonOp::Plus => BosonAction {
            amplitude: amp(n1 + 1, n2).re,
            state: Some(DoubleBosonState::new(s.n1 + 1, s.n2 - 1)),
        },
        BosonOp::Minus => BosonAction {
            amplitude: amp(n1, n2 + 1).re,
            state: Some(DoubleBosonState::new(s.n1 - 1, s.n2 + 1)),
        },
        BosonOp::Z => BosonAction {
            amplitude: s.m(),
            state: Some(s),
        },
    }
}

/// C_j / C_{j−1} = −F_{j+1} / F_{j−1} for integer j.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CasimirRatio {
    pub j: u32,
    #[serde(serialize_with = "ser_rational")]
    pub exact: BigRational,
    pub value: f64,
}

fn ser_rational<S: serde::Serializer>(
    r: &BigRational,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

/// Ratios for j = 2 … j_max.
pub fn casimir_ratio(j_max: u32) -> Result<Vec<CasimirRatio>> {
    if j_max < 2 {
        return Err(GoldenError::TooSmall {
            what: "j_max",
            got: j_max as i64,
            minimum: 2,
        });
    }
    if j_max > CASIMIR_RATIO_MAX {
        return Err(GoldenError::TooLarge {
            what: "j_max",
            got: j_max as i64,
            maximum: CASIMIR_RATIO_MAX as i64,
        });
    }
    let casimir = |j: i64| -> Result<BigInt> {
        let p = fib_exact(j)? * fib_exact(j + 1)?;
        Ok(if j % 2 == 0 { p } else { -p })
    };
    let mut prev = casimir(1)?;
    let mut out = Vec::with_capacity(j_max as usize - 1);
    for j in 2..=j_max {
        let cur = casimir(j as i64)?;
        debug_assert!(!prev.is_zero());
        let exact = BigRational::new(cur.clone(), prev);
        let value = exact.to_f64().unwrap_or(f64::NAN);
        out.push(CasimirRatio { j, exact, value });
        prev = cur;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::golden::PHI;
    use crate::matrix::off_diagonal_max;

    fn spin(twice: u32) -> Spin {
        Spin::from_twice(twice).unwrap()
    }

    #[test]
    fn small_actions() {
        let r = build_suf2(spin(2));
        // J₊|1,0⟩ = |1,1⟩
        assert_eq!(r.j_plus[(2, 1)], c(1.0));
        let h = build_suf2(spin(1));
        assert_eq!(h.j_plus[(1, 0)], c(1.0));
        for twice in 0..12 {
            let r = build_suf2(spin(twice));
            let top = r.dim() - 1;
            assert!(r.j_plus.column(top).iter().all(|z| z.norm() == 0.0));
            assert!(r.j_minus.column(0).iter().all(|z| z.norm() == 0.0));
            assert_eq!(r.j_plus.adjoint(), r.j_minus);
            assert!(r.jz_is_canonical());
            assert!(r.z_commutator_residual().value < 1e-12);
        }
    }

    #[test]
    fn casimir_examples() {
        assert_eq!(casimir_eigenvalue(spin(2)), c(-1.0));
        assert_eq!(casimir_eigenvalue(spin(4)), c(2.0));
        for twice in 0..=12 {
            let f = casimir_suf2(spin(twice));
            assert!(f.agree(1e-12), "2j = {twice}: {f:?}");
            assert!(off_diagonal_max(&f.first) < 1e-12);
        }
    }

    #[test]
    fn commutator_identity_exact() {
        assert_eq!(commutator_identity_scan(40).unwrap(), None);
        // j = 2, m = 1: F_3F_2 − F_1F_4 = −1
        assert!(commutator_identity_holds(3, 1).unwrap());
        let r = verify_commutators(spin(10), 1e-12).unwrap();
        assert!(r.pass(), "{r:?}");
        let r = verify_commutators(spin(7), 1e-12).unwrap();
        assert!(r.pass(), "{r:?}");
    }

    #[test]
    fn factorized_forms() {
        for twice in 0..=12 {
            assert!(factorization_residual(spin(twice)).value < 1e-12);
        }
    }

    #[test]
    fn boson_actions() {
        let a = double_boson_action(DoubleBosonState::new(1, 1), BosonOp::Plus);
        assert_eq!(a.amplitude, 1.0);
        assert_eq!(a.state, Some(DoubleBosonState::new(2, 0)));
        let a = double_boson_action(DoubleBosonState::new(0, 4), BosonOp::Minus);
        assert_eq!((a.amplitude, a.state), (0.0, None));
        let a = double_boson_action(DoubleBosonState::new(3, 1), BosonOp::Z);
        assert_eq!(a.amplitude, 1.0);
    }

    #[test]
    fn relabeling_matches_matrices() {
        for twice in 0..=12u32 {
            let s = spin(twice);
            let r = build_suf2(s);
            for k in 0..s.dim() {
                let (n1, n2) = s.occupations(k);
                let st = DoubleBosonState::new(n1 as u64, n2 as u64);
                let up = double_boson_action(st, BosonOp::Plus);
                let down = double_boson_action(st, BosonOp::Minus);
                if k + 1 < s.dim() {
                    assert_eq!(up.amplitude, r.j_plus[(k + 1, k)].re);
                } else {
                    assert_eq!(up.amplitude, 0.0);
                }
                if k > 0 {
                    assert_eq!(down.amplitude, r.j_minus[(k - 1, k)].re);
                } else {
                    assert_eq!(down.amplitude, 0.0);
                }
                assert_eq!(st.j(), s.value());
                assert_eq!(st.m(), s.m(k));
            }
        }
    }

    #[test]
    fn ratios() {
        let r = casimir_ratio(30).unwrap();
        assert_eq!(r[0].value, -2.0);
        assert_eq!(r[1].value, -3.0);
        assert_eq!(r[2].value, -2.5);
        let last = r.last().unwrap();
        assert_eq!(last.j, 30);
        assert!((last.value + PHI * PHI).abs() < 1e-10);
        assert!(casimir_ratio(1).is_err());
    }
}
