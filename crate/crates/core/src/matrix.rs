//! Small dense integer matrices with semantic row/column labels.
//!
//! Every matrix built from a graph is integer-valued; floating point enters
//! only at the eigensolver boundary, so construction identities can be
//! checked exactly.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// What a row or column of a matrix refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Label {
    Vertex(usize),
    /// A directed edge, written `tail>head`.
    Arc { tail: usize, head: usize },
    /// A triangle, written in traversal order starting at its least vertex.
    Triangle([usize; 3]),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Vertex(v) => write!(f, "v{v}"),
            Label::Arc { tail, head } => write!(f, "{tail}>{head}"),
            Label::Triangle([a, b, c]) => write!(f, "{a}-{b}-{c}"),
        }
    }
}

impl Label {
    pub fn to_string_label(&self) -> String {
        alloc::format!("{self}")
    }
}

/// Dense row-major rectangular matrix over `i64`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RectMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
    row_labels: Vec<Label>,
    col_labels: Vec<Label>,
}

impl RectMatrix {
    pub fn zero(row_labels: Vec<Label>, col_labels: Vec<Label>) -> RectMatrix {
        let (rows, cols) = (row_labels.len(), col_labels.len());
        RectMatrix { rows, cols, data: alloc::vec![0; rows * cols], row_labels, col_labels }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row_labels(&self) -> &[Label] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[Label] {
        &self.col_labels
    }

    pub fn transpose(&self) -> RectMatrix {
        let mut out = RectMatrix::zero(self.col_labels.clone(), self.row_labels.clone());
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    /// Matrix product `self * rhs`; panics on an inner-dimension mismatch.
    pub fn mul(&self, rhs: &RectMatrix) -> RectMatrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions must agree");
        let mut out = RectMatrix::zero(self.row_labels.clone(), rhs.col_labels.clone());
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = out.get(i, j) + a * rhs.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// The Gram matrix `self * self^T`, symmetric with this matrix's row labels.
    pub fn gram(&self) -> SymMatrix {
        let mut out = SymMatrix::zero(self.row_labels.clone());
        for i in 0..self.rows {
            for j in i..self.rows {
                let mut acc = 0;
                for k in 0..self.cols {
                    acc += self.get(i, k) * self.get(j, k);
                }
                out.set_sym(i, j, acc);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    /// Rows as plain integer vectors, for serialization.
    pub fn row_vectors(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.data[i * self.cols..(i + 1) * self.cols].to_vec()).collect()
    }
}

/// Dense symmetric matrix over `i64`; both mirror entries are always stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymMatrix {
    order: usize,
    data: Vec<i64>,
    labels: Vec<Label>,
}

impl SymMatrix {
    pub fn zero(labels: Vec<Label>) -> SymMatrix {
        let order = labels.len();
        SymMatrix { order, data: alloc::vec![0; order * order], labels }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.order + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    pub fn set_sym(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.order + j] = v;
        self.data[j * self.order + i] = v;
    }

    pub fn add_to_diagonal(&mut self, i: usize, v: i64) {
        self.data[i * self.order + i] += v;
    }

    pub fn add(&self, rhs: &SymMatrix) -> SymMatrix {
        assert_eq!(self.order, rhs.order, "orders must agree");
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&rhs.data) {
            *a += b;
        }
        out
    }

    pub fn trace(&self) -> i64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    pub fn min_entry(&self) -> Option<i64> {
        self.data.iter().copied().min()
    }

    /// `diag(signs) * self * diag(signs)` for `signs` in `{-1, +1}`.
    pub fn conjugate_signs(&self, signs: &[i8]) -> SymMatrix {
        assert_eq!(signs.len(), self.order);
        let mut out = self.clone();
        for i in 0..self.order {
            for j in 0..self.order {
                let s = (signs[i] as i64) * (signs[j] as i64);
                out.data[i * self.order + j] *= s;
            }
        }
        out
    }

    /// Block-diagonal sum; off-diagonal blocks are zero.
    pub fn block_diag(a: &SymMatrix, b: &SymMatrix) -> SymMatrix {
        let mut labels = a.labels.clone();
        labels.extend_from_slice(&b.labels);
        let mut out = SymMatrix::zero(labels);
        for i in 0..a.order {
            for j in 0..a.order {
                out.data[i * out.order + j] = a.get(i, j);
            }
        }
        for i in 0..b.order {
            for j in 0..b.order {
                out.data[(a.order + i) * out.order + (a.order + j)] = b.get(i, j);
            }
        }
        out
    }

    /// Entrywise equality ignoring labels; flipping an edge relabels a row
    /// even when the numbers match, so similarity tests compare entries.
    pub fn same_entries(&self, rhs: &SymMatrix) -> bool {
        self.order == rhs.order && self.data == rhs.data
    }

    /// Row-major copy as `f64`, the eigensolver input format.
    pub fn to_f64(&self) -> Vec<f64> {
        self.data.iter().map(|&v| v as f64).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<i64>> {
        (0..self.order).map(|i| self.data[i * self.order..(i + 1) * self.order].to_vec()).collect()
    }
}
