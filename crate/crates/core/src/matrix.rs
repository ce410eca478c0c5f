//! Small dense complex-matrix helpers shared by the operator modules.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;

pub type CMatrix = DMatrix<Complex64>;

pub fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

pub fn diag(entries: &[Complex64]) -> CMatrix {
    CMatrix::from_diagonal(&nalgebra::DVector::from_column_slice(entries))
}

pub fn diag_real(entries: impl IntoIterator<Item = f64>) -> CMatrix {
    let v: Vec<Complex64> = entries.into_iter().map(c).collect();
    diag(&v)
}

pub fn commutator(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a * b - b * a
}

pub fn anticommutator(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a * b + b * a
}

/// Worst entry of `actual − expected` over the leading `block × block`
/// corner, each difference scaled by max(1, |expected|).
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct EntryResidual {
    pub value: f64,
    pub row: usize,
    pub col: usize,
}

impl EntryResidual {
    pub fn zero() -> Self {
        Self {
            value: 0.0,
            row: 0,
            col: 0,
        }
    }

    pub fn max(self, other: Self) -> Self {
        if other.value > self.value {
            other
        } else {
            self
        }
    }
}

pub fn block_residual(actual: &CMatrix, expected: &CMatrix, block: usize) -> EntryResidual {
    scaled_block_residual(actual, expected, expected, block)
}

/// Like [`block_residual`], with each difference scaled by
/// max(1, |expected|, |scale|).
pub fn scaled_block_residual(
    actual: &CMatrix,
    expected: &CMatrix,
    scale: &CMatrix,
    block: usize,
) -> EntryResidual {
    let mut worst = EntryResidual::zero();
    let n = block.min(actual.nrows()).min(expected.nrows());
    for i in 0..n {
        for j in 0..n {
            let e = expected[(i, j)];
            let size = e.norm().max(scale[(i, j)].norm()).max(1.0);
            let d = (actual[(i, j)] - e).norm() / size;
            if d > worst.value || d.is_nan() {
                worst = EntryResidual {
                    value: if d.is_nan() { f64::INFINITY } else { d },
                    row: i,
                    col: j,
                };
            }
        }
    }
    worst
}

pub fn residual(actual: &CMatrix, expected: &CMatrix) -> EntryResidual {
    block_residual(actual, expected, actual.nrows())
}

/// Largest off-diagonal magnitude.
pub fn off_diagonal_max(m: &CMatrix) -> f64 {
    let mut worst: f64 = 0.0;
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            if i != j {
                worst = worst.max(m[(i, j)].norm());
            }
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pauli_commutator() {
        let x = CMatrix::from_row_slice(2, 2, &[c(0.0), c(1.0), c(1.0), c(0.0)]);
        let z = diag_real([1.0, -1.0]);
        let comm = commutator(&x, &z);
        let expected = CMatrix::from_row_slice(2, 2, &[c(0.0), c(-2.0), c(2.0), c(0.0)]);
        assert_eq!(residual(&comm, &expected).value, 0.0);
        assert_eq!(off_diagonal_max(&anticommutator(&x, &z)), 0.0);
    }

    #[test]
    fn residual_locates_worst_entry() {
        let a = diag_real([1.0, 2.0, 3.0]);
        let mut b = a.clone();
        b[(1, 2)] = c(0.5);
        let r = residual(&a, &b);
        assert_eq!((r.row, r.col), (1, 2));
        assert_eq!(block_residual(&a, &b, 2).value, 0.0);
    }
}
