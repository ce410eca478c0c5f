//! Deformed angular momentum from two golden bosons: su_F(2), the symmetric
//! algebra with base (iφ, i/φ), and the tilde algebra with an
//! anticommutator bracket.
//!
//! Matrices act on |j, −j⟩ … |j, j⟩ in that order, so basis index k is
//! m + j, with occupations n1 = k and n2 = 2j − k. Non-integer powers of −1
//! are always e^{iπx}.

mod rep;
mod spin;
mod standard;
mod symmetric;
mod tilde;

pub use rep::{AngularRep, HermiticityDefect, Variant};
pub use spin::{fib_real, neg_one_pow, Spin, SPIN_TWICE_MAX};
pub use standard::{
    build_suf2, casimir_eigenvalue, casimir_ratio, casimir_suf2, commutator_identity_holds,
    commutator_identity_scan, double_boson_action, factorization_residual, verify_commutators,
    BosonAction, BosonOp, CasimirForms, CasimirRatio, CommutatorReport, DoubleBosonState,
    CASIMIR_RATIO_MAX,
};
pub use symmetric::{build_symmetric, symmetric_number, symmetric_report, SymmetricReport};
pub use tilde::{
    build_tilde, build_tilde_tabulated, tabulated_anticommutator_factor, verify_tilde, TildeReport,
};

use crate::error::Result;

/// Builds the representation of the requested variant.
pub fn build(variant: Variant, j: Spin) -> AngularRep {
    match variant {
        Variant::StandardF => build_suf2(j),
        Variant::SymmetricIphi => build_symmetric(j),
        Variant::TildeF => build_tilde(j),
    }
}

/// Same as [`build`] from a textual spin label.
pub fn build_from_label(variant: Variant, label: &str) -> Result<AngularRep> {
    Ok(build(variant, Spin::parse(label)?))
}
