use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::spin::Spin;
use crate::error::{GoldenError, Result};
use crate::matrix::{commutator, diag_real, residual, CMatrix, EntryResidual};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variant {
    #[serde(rename = "standard_F")]
    StandardF,
    #[serde(rename = "symmetric_iphi")]
    SymmetricIphi,
    #[serde(rename = "tilde_F")]
    TildeF,
}

impl Variant {
    pub fn all() -> [Variant; 3] {
        [Variant::StandardF, Variant::SymmetricIphi, Variant::TildeF]
    }

    pub fn name(self) -> &'static str {
        match self {
            Variant::StandardF => "standard_F",
            Variant::SymmetricIphi => "symmetric_iphi",
            Variant::TildeF => "tilde_F",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = GoldenError;

    /// Accepts the short names `standard`, `symmetric`, `tilde` as well as
    /// the full variant names.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "standard" | "standard_F" => Ok(Variant::StandardF),
            "symmetric" | "symmetric_iphi" => Ok(Variant::SymmetricIphi),
            "tilde" | "tilde_F" => Ok(Variant::TildeF),
            _ => Err(GoldenError::InvalidArgument(format!(
                "unknown angular momentum variant '{s}' (expected standard, symmetric or tilde)"
            ))),
        }
    }
}

/// Generators of one deformed angular-momentum algebra on the 2j+1 states
/// |j, −j⟩ … |j, j⟩, ordered by ascending m.
#[derive(Clone, Debug, PartialEq)]
pub struct AngularRep {
    pub j: Spin,
    pub variant: Variant,
    pub j_plus: CMatrix,
    pub j_minus: CMatrix,
    pub j_z: CMatrix,
    pub casimir: CMatrix,
}

/// Raising and lowering matrices from amplitude rules written in the
/// occupations (n1, n2) of the state being acted on.
pub(crate) fn ladder_pair(
    spin: Spin,
    plus: impl Fn(i64, i64) -> Complex64,
    minus: impl Fn(i64, i64) -> Complex64,
) -> (CMatrix, CMatrix) {
    let d = spin.dim();
    let mut j_plus = CMatrix::zeros(d, d);
    let mut j_minus = CMatrix::zeros(d, d);
    for k in 0..d {
        let (n1, n2) = spin.occupations(k);
        if k + 1 < d {
            j_plus[(k + 1, k)] = plus(n1, n2);
        }
        if k > 0 {
            j_minus[(k - 1, k)] = minus(n1, n2);
        }
    }
    (j_plus, j_minus)
}

pub(crate) fn jz_matrix(spin: Spin) -> CMatrix {
    diag_real((0..spin.dim()).map(|k| spin.m(k)))
}

/// Per-m diagonal matrix.
pub(crate) fn diag_by_m(spin: Spin, f: impl Fn(f64, i64, i64) -> Complex64) -> CMatrix {
    let entries: Vec<Complex64> = (0..spin.dim())
        .map(|k| {
            let (n1, n2) = spin.occupations(k);
            f(spin.m(k), n1, n2)
        })
        .collect();
    crate::matrix::diag(&entries)
}

/// How far J₋ is from J₊†: `magnitude` compares moduli entrywise,
/// `total` compares the entries themselves.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct HermiticityDefect {
    pub magnitude: f64,
    pub total: f64,
}

impl HermiticityDefect {
    /// True when any mismatch is a pure phase.
    pub fn phase_only(&self, tol: f64) -> bool {
        self.magnitude <= tol
    }
}

impl AngularRep {
    pub fn dim(&self) -> usize {
        self.j.dim()
    }

    /// Worst of [J_z, J₊] − J₊ and [J_z, J₋] + J₋.
    pub fn z_commutator_residual(&self) -> EntryResidual {
        let up = residual(&commutator(&self.j_z, &self.j_plus), &self.j_plus);
        let down = residual(&commutator(&self.j_z, &self.j_minus), &(-&self.j_minus));
        up.max(down)
    }

    pub fn hermiticity_defect(&self) -> HermiticityDefect {
        let adj = self.j_plus.adjoint();
        let mut out = HermiticityDefect {
            magnitude: 0.0,
            total: 0.0,
        };
        for (a, b) in adj.iter().zip(self.j_minus.iter()) {
            out.magnitude = out.magnitude.max((a.norm() - b.norm()).abs());
            out.total = out.total.max((a - b).norm());
        }
        out
    }

    /// J_z is diag(−j … j).
    pub fn jz_is_canonical(&self) -> bool {
        self.j_z == jz_matrix(self.j)
    }
}
