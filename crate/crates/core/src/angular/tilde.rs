use num_complex::Complex64;
use serde::Serialize;

use super::rep::{diag_by_m, jz_matrix, ladder_pair, AngularRep, HermiticityDefect, Variant};
use super::spin::{fib_real, neg_one_pow, Spin};
use crate::golden::fib_f64;
use crate::matrix::{anticommutator, c, off_diagonal_max, residual, CMatrix, EntryResidual};

fn amp(a: i64, b: i64) -> f64 {
    (fib_f64(a) * fib_f64(b)).sqrt()
}

fn assemble(j: Spin, j_plus: CMatrix, j_minus: CMatrix) -> AngularRep {
    let mut rep = AngularRep {
        j,
        variant: Variant::TildeF,
        j_plus,
        j_minus,
        j_z: jz_matrix(j),
        casimir: CMatrix::zeros(0, 0),
    };
    rep.casimir = tilde_casimir_forms(&rep).0;
    rep
}

/// J̃₊ = (−1)^{−N₂/2} b₁⁺b₂ and J̃₋ = b₂⁺b₁ (−1)^{−N₂/2}. The phase on J̃₊
/// is read off the image state, the one on J̃₋ off the source state.
pub fn build_tilde(j: Spin) -> AngularRep {
    let (p, m) = ladder_pair(
        j,
        |n1, n2| neg_one_pow(-(n2 - 1) as f64 / 2.0) * amp(n2, n1 + 1),
        |n1, n2| neg_one_pow(-(n2 as f64) / 2.0) * amp(n1, n2 + 1),
    );
    assemble(j, p, m)
}

/// The tabulated state actions, where both generators carry
/// (−1)^{(j−m)/2} evaluated on the source state.
pub fn build_tilde_tabulated(j: Spin) -> AngularRep {
    let (p, m) = ladder_pair(
        j,
        |n1, n2| neg_one_pow(n2 as f64 / 2.0) * amp(n2, n1 + 1),
        |n1, n2| neg_one_pow(n2 as f64 / 2.0) * amp(n1, n2 + 1),
    );
    assemble(j, p, m)
}

/// (−1)^{J_z}(F_{J_z}F_{J_z+1} − J̃₋J̃₊) and (−1)^{J_z}(J̃₊J̃₋ − F_{J_z}F_{J_z−1}).
fn tilde_casimir_forms(rep: &AngularRep) -> (CMatrix, CMatrix) {
    let j = rep.j;
    let outer = diag_by_m(j, |m, _, _| neg_one_pow(m));
    let up = diag_by_m(j, |m, _, _| fib_real(m) * fib_real(m + 1.0));
    let down = diag_by_m(j, |m, _, _| fib_real(m) * fib_real(m - 1.0));
    let first = &outer * (up - &rep.j_minus * &rep.j_plus);
    let second = &outer * (&rep.j_plus * &rep.j_minus - down);
    (first, second)
}

/// Closed-form tilde Casimir eigenvalues at each m. `sign` is the sign in
/// front of the (−1)^j F_{j−m}F_{j+m+1} term of the first expression.
fn eigen_first(j: Spin, sign: f64) -> CMatrix {
    let jv = j.value();
    diag_by_m(j, |m, n1, n2| {
        neg_one_pow(m) * fib_real(m) * fib_real(m + 1.0)
            + neg_one_pow(jv) * (sign * fib_f64(n2) * fib_f64(n1 + 1))
    })
}

fn eigen_second(j: Spin) -> CMatrix {
    let jv = j.value();
    diag_by_m(j, |m, n1, n2| {
        neg_one_pow(jv) * (fib_f64(n2 + 1) * fib_f64(n1))
            - neg_one_pow(m) * fib_real(m) * fib_real(m - 1.0)
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TildeReport {
    pub j: Spin,
    pub tol: f64,
    /// {J̃₊, J̃₋} against diag(F_{2m}).
    pub anticommutator_residual: EntryResidual,
    pub anticommutator_off_diagonal: f64,
    /// The tabulated state actions against diag(F_{2m}).
    pub tabulated_anticommutator_residual: EntryResidual,
    pub casimir_forms_residual: EntryResidual,
    /// Casimir against (−1)^m F_m F_{m+1} + (−1)^j F_{j−m}F_{j+m+1}.
    pub eigen_first_residual: EntryResidual,
    /// Casimir against the same expression with a minus sign.
    pub eigen_first_minus_residual: EntryResidual,
    /// Casimir against (−1)^j F_{j−m+1}F_{j+m} − (−1)^m F_m F_{m−1}.
    pub eigen_second_residual: EntryResidual,
    pub z_residual: EntryResidual,
    pub hermiticity: HermiticityDefect,
    /// Set for half-integer j, where the phases depend on the branch of (−1)^x.
    pub convention_dependent: bool,
}

impl TildeReport {
    pub fn pass(&self) -> bool {
        let t = self.tol;
        self.anticommutator_residual.value <= t
            && self.anticommutator_off_diagonal <= t
            && self.casimir_forms_residual.value <= t
            && self.eigen_first_residual.value <= t
            && self.eigen_second_residual.value <= t
            && self.z_residual.value <= t
            && self.hermiticity.phase_only(t)
    }
}

pub fn verify_tilde(j: Spin, tol: f64) -> TildeReport {
    let rep = build_tilde(j);
    let tab = build_tilde_tabulated(j);
    let f2m = diag_by_m(j, |_, n1, n2| c(fib_f64(n1 - n2)));
    let anti = anticommutator(&rep.j_plus, &rep.j_minus);
    let (first, second) = tilde_casimir_forms(&rep);
    TildeReport {
        j,
        tol,
        anticommutator_residual: residual(&anti, &f2m),
        anticommutator_off_diagonal: off_diagonal_max(&anti),
        tabulated_anticommutator_residual: residual(
            &anticommutator(&tab.j_plus, &tab.j_minus),
            &f2m,
        ),
        casimir_forms_residual: residual(&first, &second),
        eigen_first_residual: residual(&first, &eigen_first(j, 1.0)),
        eigen_first_minus_residual: residual(&first, &eigen_first(j, -1.0)),
        eigen_second_residual: residual(&first, &eigen_second(j)),
        z_residual: rep.z_commutator_residual(),
        hermiticity: rep.hermiticity_defect(),
        convention_dependent: !j.is_integer(),
    }
}

/// Ratio of the tabulated anticommutator to F_{2m} at the first m ≠ 0.
pub fn tabulated_anticommutator_factor(j: Spin) -> Option<Complex64> {
    let tab = build_tilde_tabulated(j);
    let anti = anticommutator(&tab.j_plus, &tab.j_minus);
    (0..j.dim()).find_map(|k| {
        let (n1, n2) = j.occupations(k);
        let f = fib_f64(n1 - n2);
        (f != 0.0).then(|| anti[(k, k)] / f)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn anticommutator_is_fibonacci() {
        for twice in 0..=10 {
            let j = Spin::from_twice(twice).unwrap();
            let r = verify_tilde(j, 1e-10);
            assert!(r.pass(), "2j = {twice}: {r:?}");
            assert!(r.anticommutator_off_diagonal < 1e-12);
            assert_eq!(r.convention_dependent, twice % 2 == 1);
        }
    }

    #[test]
    fn spot_values() {
        let j = Spin::integer(2).unwrap();
        let anti = anticommutator(&build_tilde(j).j_plus, &build_tilde(j).j_minus);
        // m = 1 sits at k = 3
        assert!((anti[(3, 3)] - c(1.0)).norm() < 1e-12);
        let j1 = Spin::integer(1).unwrap();
        let a1 = anticommutator(&build_tilde(j1).j_plus, &build_tilde(j1).j_minus);
        assert!(a1[(1, 1)].norm() < 1e-12);
    }

    #[test]
    fn hermiticity_fails_only_by_phase() {
        let r = verify_tilde(Spin::integer(4).unwrap(), 1e-12);
        assert!(r.hermiticity.phase_only(1e-12));
        assert!(r.hermiticity.total > 0.1);
    }

    #[test]
    fn tabulated_actions_pick_up_a_quarter_turn() {
        let j = Spin::integer(3).unwrap();
        let f = tabulated_anticommutator_factor(j).unwrap();
        assert!((f - Complex64::i()).norm() < 1e-12);
        let r = verify_tilde(j, 1e-10);
        assert!(r.tabulated_anticommutator_residual.value > 0.5);
        assert!(r.eigen_first_minus_residual.value > 0.5);
    }
}
