use num_complex::Complex64;
use serde::Serialize;

use super::rep::{diag_by_m, jz_matrix, ladder_pair, AngularRep, Variant};
use super::spin::{neg_one_pow, Spin};
use crate::golden::PHI;
use crate::matrix::{commutator, residual, EntryResidual};

/// [x]_{iφ, i/φ} = ((iφ)^x − (i/φ)^x) / (iφ − i/φ), with i^x = e^{iπx/2}.
pub fn symmetric_number(x: f64) -> Complex64 {
    let ix = neg_one_pow(x / 2.0);
    let num = ix * (PHI.powf(x) - PHI.powf(-x));
    num / Complex64::new(0.0, PHI - 1.0 / PHI)
}

/// The symmetric q-boson construction with base (iφ, i/φ):
/// J₊|j,m⟩ = √([j−m][j+m+1]) |j,m+1⟩, J₋|j,m⟩ = √([j+m][j−m+1]) |j,m−1⟩
/// on the principal square-root branch. The attached Casimir is
/// J₋J₊ + [J_z][J_z+1].
pub fn build_symmetric(j: Spin) -> AngularRep {
    let s = |n: i64| symmetric_number(n as f64);
    let (j_plus, j_minus) = ladder_pair(
        j,
        |n1, n2| (s(n2) * s(n1 + 1)).sqrt(),
        |n1, n2| (s(n1) * s(n2 + 1)).sqrt(),
    );
    let shift = diag_by_m(j, |m, _, _| symmetric_number(m) * symmetric_number(m + 1.0));
    let casimir = &j_minus * &j_plus + shift;
    AngularRep {
        j,
        variant: Variant::SymmetricIphi,
        j_plus,
        j_minus,
        j_z: jz_matrix(j),
        casimir,
    }
}

/// Residuals of the natural symmetric construction against the target
/// commutator relation. Nothing here is expected to vanish beyond the J_z
/// relation; the numbers are recorded, not asserted.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SymmetricReport {
    pub j: Spin,
    /// [2]_{iφ,i/φ} as (re, im).
    pub bracket_two: (f64, f64),
    /// [J₊, J₋] against [2J_z]_{iφ,i/φ} (−1)^{1/2 − J_z}.
    pub commutator_residual: EntryResidual,
    /// [J₊, J₋] against (φ^{2J_z} − φ^{−2J_z}) / (φ − φ^{−1}).
    pub real_form_residual: EntryResidual,
    /// The two targets against each other.
    pub target_consistency: EntryResidual,
    pub z_residual: EntryResidual,
}

pub fn symmetric_report(j: Spin) -> SymmetricReport {
    let rep = build_symmetric(j);
    let comm = commutator(&rep.j_plus, &rep.j_minus);
    let target = diag_by_m(j, |m, _, _| {
        symmetric_number(2.0 * m) * neg_one_pow(0.5 - m)
    });
    let real_form = diag_by_m(j, |m, _, _| {
        Complex64::new(
            (PHI.powf(2.0 * m) - PHI.powf(-2.0 * m)) / (PHI - 1.0 / PHI),
            0.0,
        )
    });
    let two = symmetric_number(2.0);
    SymmetricReport {
        j,
        bracket_two: (two.re, two.im),
        commutator_residual: residual(&comm, &target),
        real_form_residual: residual(&comm, &real_form),
        target_consistency: residual(&target, &real_form),
        z_residual: rep.z_commutator_residual(),
    }
}
