use num_complex::Complex64;
use serde::Serialize;

use crate::error::{GoldenError, Result};
use crate::golden::{fib_exact, fib_f64, phi_pow, ZPhi, PHI};
use crate::matrix::{c, commutator, diag_real, scaled_block_residual, CMatrix, EntryResidual};

pub const LADDER_DIM_MAX: usize = 200;

/// Golden ladder operators on the Fock states |0⟩ … |D−1⟩.
#[derive(Clone, Debug, PartialEq)]
pub struct LadderSet {
    pub dim: usize,
    pub b: CMatrix,
    pub b_dag: CMatrix,
    pub n_op: CMatrix,
}

pub(crate) fn sqrt_fib(n: usize) -> f64 {
    fib_f64(n as i64).sqrt()
}

/// b⁺|n⟩ = √F_{n+1} |n+1⟩ and b|n⟩ = √F_n |n−1⟩.
pub fn build_ladder(dim: usize) -> Result<LadderSet> {
    if dim < 2 {
        return Err(GoldenError::TooSmall {
            what: "ladder dimension",
            got: dim as i64,
            minimum: 2,
        });
    }
    if dim > LADDER_DIM_MAX {
        return Err(GoldenError::TooLarge {
            what: "ladder dimension",
            got: dim as i64,
            maximum: LADDER_DIM_MAX as i64,
        });
    }
    let mut b_dag = CMatrix::zeros(dim, dim);
    for n in 0..dim - 1 {
        b_dag[(n + 1, n)] = c(sqrt_fib(n + 1));
    }
    Ok(LadderSet {
        dim,
        b: b_dag.adjoint(),
        b_dag,
        n_op: diag_real((0..dim).map(|n| n as f64)),
    })
}

impl LadderSet {
    /// Copy with b(0, 1) shifted by `eps`, leaving b⁺ untouched.
    pub fn perturbed(&self, eps: f64) -> Self {
        let mut out = self.clone();
        out.b[(0, 1)] += c(eps);
        out
    }

    /// (−1)^N as diag((−1)^n).
    pub fn parity(&self) -> CMatrix {
        diag_real((0..self.dim).map(|n| if n % 2 == 0 { 1.0 } else { -1.0 }))
    }

    /// H = (b⁺b + bb⁺)/2 in units of ħω.
    pub fn hamiltonian(&self) -> CMatrix {
        (&self.b_dag * &self.b + &self.b * &self.b_dag) * c(0.5)
    }

    /// |n⟩ = (b⁺)^n |0⟩ / √(F_n!) for n = 0 … D−1, built one step at a time.
    pub fn fock_states(&self) -> Vec<nalgebra::DVector<Complex64>> {
        let mut v = nalgebra::DVector::zeros(self.dim);
        v[0] = c(1.0);
        let mut out = vec![v.clone()];
        for n in 1..self.dim {
            v = &self.b_dag * v / c(sqrt_fib(n));
            out.push(v.clone());
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityResidual {
    pub name: &'static str,
    pub residual: EntryResidual,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OscillatorReport {
    pub dim: usize,
    pub tol: f64,
    pub identities: Vec<IdentityResidual>,
}

impl OscillatorReport {
    pub fn pass(&self) -> bool {
        self.identities.iter().all(|r| r.pass)
    }

    pub fn max_residual(&self) -> f64 {
        self.identities
            .iter()
            .map(|r| r.residual.value)
            .fold(0.0, f64::max)
    }

    pub fn failures(&self) -> Vec<&IdentityResidual> {
        self.identities.iter().filter(|r| !r.pass).collect()
    }
}

/// Checks the oscillator relations on every state except the top one.
pub fn verify_oscillator_algebra(ladder: &LadderSet, tol: f64) -> Result<OscillatorReport> {
    let d = ladder.dim;
    if d < 3 {
        return Err(GoldenError::TooSmall {
            what: "ladder dimension",
            got: d as i64,
            minimum: 3,
        });
    }
    let interior = d - 1;
    let (b, bd, n) = (&ladder.b, &ladder.b_dag, &ladder.n_op);
    let bbd = b * bd;
    let bdb = bd * b;
    let inv_phi = 1.0 / PHI;
    let checks: [(&'static str, CMatrix, CMatrix); 5] = [
        (
            "bb+ - phi b+b = (-1/phi)^N",
            &bbd - &bdb * c(PHI),
            diag_real((0..d).map(|k| (-inv_phi).powi(k as i32))),
        ),
        (
            "bb+ + (1/phi) b+b = phi^N",
            &bbd + &bdb * c(inv_phi),
            diag_real((0..d).map(|k| PHI.powi(k as i32))),
        ),
        ("[N, b+] = b+", commutator(n, bd), bd.clone()),
        ("[N, b] = -b", commutator(n, b), -b.clone()),
        (
            "bb+ - b+b = F_{N-1}",
            &bbd - &bdb,
            diag_real((0..d).map(|k| fib_f64(k as i64 - 1))),
        ),
    ];
    Ok(OscillatorReport {
        dim: d,
        tol,
        identities: checks
            .into_iter()
            .map(|(name, actual, expected)| {
                let residual = scaled_block_residual(&actual, &expected, &bbd, interior);
                IdentityResidual {
                    name,
                    residual,
                    pass: residual.value <= tol,
                }
            })
            .collect(),
    })
}

/// First n ≤ n_max violating [n+1]_F − φ[n]_F = (−1/φ)^n or
/// [n+1]_F + φ^{−1}[n]_F = φ^n in exact Z[φ] arithmetic.
pub fn diagonal_identities_exact(n_max: i64) -> Result<Option<i64>> {
    let phi = ZPhi::phi();
    let inv_phi = phi_pow(-1);
    let conj = ZPhi::phi_conj();
    for n in 0..=n_max {
        let f1 = ZPhi::from_int(fib_exact(n + 1)?);
        let f0 = ZPhi::from_int(fib_exact(n)?);
        let minus = &f1 - &(&phi * &f0);
        let plus = &f1 + &(&inv_phi * &f0);
        if minus != conj.pow(n).expect("non-negative power") || plus != phi_pow(n) {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

/// Largest |n − F_n| over 3 ≤ n < dim: N and b⁺b differ.
pub fn number_operator_gap(ladder: &LadderSet) -> f64 {
    let bdb = &ladder.b_dag * &ladder.b;
    (3..ladder.dim)
        .map(|k| (bdb[(k, k)] - ladder.n_op[(k, k)]).norm())
        .fold(0.0, f64::max)
}

/// Diagonal scalings √(F_N/N) and √(F_{N+1}/(N+1)), with the N = 0 entry of
/// the first set to 1.
#[derive(Clone, Debug, PartialEq)]
pub struct NonlinearMap {
    pub dim: usize,
    pub scale_n: CMatrix,
    pub scale_n1: CMatrix,
    pub a: CMatrix,
    pub a_dag: CMatrix,
}

pub fn nonlinear_map(dim: usize) -> Result<NonlinearMap> {
    if dim < 2 {
        return Err(GoldenError::TooSmall {
            what: "ladder dimension",
            got: dim as i64,
            minimum: 2,
        });
    }
    let scale = |n: usize| {
        if n == 0 {
            1.0
        } else {
            (fib_f64(n as i64) / n as f64).sqrt()
        }
    };
    let mut a_dag = CMatrix::zeros(dim, dim);
    for n in 0..dim - 1 {
        a_dag[(n + 1, n)] = c(((n + 1) as f64).sqrt());
    }
    Ok(NonlinearMap {
        dim,
        scale_n: diag_real((0..dim).map(scale)),
        scale_n1: diag_real((0..dim).map(|n| scale(n + 1))),
        a: a_dag.adjoint(),
        a_dag,
    })
}

impl NonlinearMap {
    /// b⁺ as a⁺√(F_{N+1}/(N+1)) and as √(F_N/N) a⁺.
    pub fn b_dag_forms(&self) -> (CMatrix, CMatrix) {
        (&self.a_dag * &self.scale_n1, &self.scale_n * &self.a_dag)
    }

    /// b as √(F_{N+1}/(N+1)) a and as a √(F_N/N).
    pub fn b_forms(&self) -> (CMatrix, CMatrix) {
        (&self.scale_n1 * &self.a, &self.a * &self.scale_n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::residual;

    #[test]
    fn small_ladders() {
        let l = build_ladder(3).unwrap();
        assert_eq!(l.b_dag[(1, 0)], c(1.0));
        assert_eq!(l.b_dag[(2, 1)], c(1.0));
        for k in 0..3 {
            assert_eq!(l.b[(k, 0)], c(0.0));
        }
        let l2 = build_ladder(2).unwrap();
        let bbd = &l2.b * &l2.b_dag;
        assert_eq!(bbd[(0, 0)], c(1.0));
        assert!(build_ladder(1).is_err());
        assert!(build_ladder(201).is_err());
    }

    #[test]
    fn number_like_products() {
        let l = build_ladder(15).unwrap();
        let bdb = &l.b_dag * &l.b;
        for k in 0..15 {
            assert!((bdb[(k, k)].re - fib_f64(k as i64)).abs() < 1e-9);
        }
        assert_eq!(residual(&l.b_dag.adjoint(), &l.b).value, 0.0);
        assert!(number_operator_gap(&l) >= 1.0);
    }

    #[test]
    fn algebra_holds() {
        for dim in [3, 10, 12, 40] {
            let r = verify_oscillator_algebra(&build_ladder(dim).unwrap(), 1e-12).unwrap();
            assert!(r.pass(), "dim {dim}: {:?}", r.failures());
        }
        assert!(verify_oscillator_algebra(&build_ladder(2).unwrap(), 1e-12).is_err());
    }

    #[test]
    fn perturbation_is_detected() {
        let l = build_ladder(10).unwrap().perturbed(1e-6);
        let r = verify_oscillator_algebra(&l, 1e-12).unwrap();
        assert!(!r.pass());
        assert!(r.max_residual() >= 1e-7);
    }

    #[test]
    fn exact_diagonal_identities() {
        assert_eq!(diagonal_identities_exact(100).unwrap(), None);
    }

    #[test]
    fn fock_states_normalized() {
        let l = build_ladder(60).unwrap();
        for (n, v) in l.fock_states().iter().enumerate() {
            assert!((v.norm() - 1.0).abs() < 1e-12, "n = {n}");
            assert!((v[n].re - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn hamiltonian_is_fibonacci() {
        let l = build_ladder(12).unwrap();
        let h = l.hamiltonian();
        for k in 0..11 {
            assert!((h[(k, k)].re - fib_f64(k as i64 + 2) / 2.0).abs() < 1e-12);
        }
        assert_eq!(crate::matrix::off_diagonal_max(&h), 0.0);
        assert_eq!(l.parity()[(3, 3)], c(-1.0));
    }

    #[test]
    fn nonlinear_reconstruction() {
        let m = nonlinear_map(2).unwrap();
        assert_eq!(m.scale_n1[(0, 0)], c(1.0));
        let m = nonlinear_map(6).unwrap();
        let l = build_ladder(6).unwrap();
        let (left, right) = m.b_dag_forms();
        assert!(residual(&left, &l.b_dag).value < 1e-14);
        assert!(residual(&right, &l.b_dag).value < 1e-14);
        let (left, right) = m.b_forms();
        assert!(residual(&left, &l.b).value < 1e-14);
        assert!(residual(&right, &l.b).value < 1e-14);
    }
}
