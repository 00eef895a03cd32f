//! Dense symmetric eigensolver: cyclic Jacobi rotations.
//!
//! Every matrix in this crate is small (a few dozen rows), dense, and
//! symmetric, which is exactly the regime where Jacobi is simple, robustly
//! accurate, and fast enough not to matter.

use alloc::vec::Vec;
use core::fmt;

use crate::matrix::SymMatrix;

const MAX_SWEEPS: usize = 100;
/// Converged when the off-diagonal Frobenius norm drops below
/// `RELATIVE_TARGET * (1 + ||M||_F)` of the input matrix.
const RELATIVE_TARGET: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EigenError {
    NoConvergence { sweeps: usize },
}

impl fmt::Display for EigenError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EigenError::NoConvergence { sweeps } => {
                write!(f, "Jacobi iteration failed to converge after {sweeps} sweeps")
            }
        }
    }
}

impl core::error::Error for EigenError {}

/// All eigenvalues of a symmetric matrix, descending.
pub fn sym_eigenvalues(m: &SymMatrix) -> Result<Vec<f64>, EigenError> {
    let mut a = m.to_f64();
    jacobi_eigenvalues(&mut a, m.order())
}

/// Jacobi on a row-major n×n symmetric matrix, destroying `a`.
pub fn jacobi_eigenvalues(a: &mut [f64], n: usize) -> Result<Vec<f64>, EigenError> {
    assert_eq!(a.len(), n * n, "matrix storage must be n*n");
    let target = RELATIVE_TARGET * (1.0 + frobenius(a));
    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(a, n) < target {
            return Ok(sorted_diagonal(a, n));
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(a, n, p, q);
            }
        }
    }
    if off_diagonal_norm(a, n) < target {
        return Ok(sorted_diagonal(a, n));
    }
    Err(EigenError::NoConvergence { sweeps: MAX_SWEEPS })
}

fn frobenius(a: &[f64]) -> f64 {
    libm::sqrt(a.iter().map(|v| v * v).sum())
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += a[i * n + j] * a[i * n + j];
            }
        }
    }
    libm::sqrt(sum)
}

fn sorted_diagonal(a: &[f64], n: usize) -> Vec<f64> {
    let mut diag: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    diag.sort_unstable_by(|x, y| y.total_cmp(x));
    diag
}

/// One Jacobi rotation annihilating a[p][q], keeping the full matrix
/// symmetric.
fn rotate(a: &mut [f64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    if apq == 0.0 {
        return;
    }
    let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
    // Smaller-angle root of t^2 + 2t*theta - 1 = 0; stable for huge theta.
    let t = if theta >= 0.0 {
        1.0 / (theta + libm::sqrt(theta * theta + 1.0))
    } else {
        1.0 / (theta - libm::sqrt(theta * theta + 1.0))
    };
    let c = 1.0 / libm::sqrt(t * t + 1.0);
    let s = t * c;
    let (app, aqq) = (a[p * n + p], a[q * n + q]);
    a[p * n + p] = app - t * apq;
    a[q * n + q] = aqq + t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
    for i in 0..n {
        if i == p || i == q {
            continue;
        }
        let aip = a[i * n + p];
        let aiq = a[i * n + q];
        a[i * n + p] = c * aip - s * aiq;
        a[i * n + q] = s * aip + c * aiq;
        a[p * n + i] = a[i * n + p];
        a[q * n + i] = a[i * n + q];
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{Label, SymMatrix};

    fn sym(entries: &[&[i64]]) -> SymMatrix {
        let n = entries.len();
        let mut m = SymMatrix::zero((0..n).map(Label::Vertex).collect());
        for i in 0..n {
            for j in i..n {
                m.set_sym(i, j, entries[i][j]);
            }
        }
        m
    }

    fn assert_close(got: &[f64], want: &[f64]) {
        assert_eq!(got.len(), want.len());
        for (g, w) in got.iter().zip(want) {
            assert!((g - w).abs() < 1e-9, "got {got:?}, want {want:?}");
        }
    }

    #[test]
    fn diagonal_input_is_immediate() {
        let m = sym(&[&[3, 0, 0], &[0, 3, 0], &[0, 0, 3]]);
        assert_close(&sym_eigenvalues(&m).unwrap(), &[3.0, 3.0, 3.0]);
    }

    #[test]
    fn two_by_two() {
        let m = sym(&[&[2, 1], &[1, 2]]);
        assert_close(&sym_eigenvalues(&m).unwrap(), &[3.0, 1.0]);
    }

    #[test]
    fn empty_matrix() {
        let m = SymMatrix::zero(alloc::vec::Vec::new());
        assert_eq!(sym_eigenvalues(&m).unwrap(), alloc::vec::Vec::<f64>::new());
    }

    #[test]
    fn known_integer_spectrum() {
        // Rank-one all-ones matrix: spectrum (3, 0, 0).
        let m = sym(&[&[1, 1, 1], &[1, 1, 1], &[1, 1, 1]]);
        assert_close(&sym_eigenvalues(&m).unwrap(), &[3.0, 0.0, 0.0]);
    }

    #[test]
    fn trace_and_frobenius_are_preserved() {
        // Deterministic pseudo-random symmetric matrices.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            ((state >> 8) % 17) as i64 - 8
        };
        for n in 1..=12 {
            let mut m = SymMatrix::zero((0..n).map(Label::Vertex).collect());
            for i in 0..n {
                for j in i..n {
                    m.set_sym(i, j, next());
                }
            }
            let eig = sym_eigenvalues(&m).unwrap();
            let trace: f64 = m.trace() as f64;
            let sum: f64 = eig.iter().sum();
            assert!((sum - trace).abs() <= 1e-9 * (1.0 + trace.abs()), "trace at n={n}");
            let frob2: f64 = m.to_f64().iter().map(|v| v * v).sum();
            let sq: f64 = eig.iter().map(|v| v * v).sum();
            assert!((sq - frob2).abs() <= 1e-9 * (1.0 + frob2.abs()), "frobenius at n={n}");
            assert!(eig.windows(2).all(|w| w[0] >= w[1]), "descending at n={n}");
        }
    }
}
