//! Exact integer matrices: products, Kronecker products, fraction-free rank.
//!
//! Entries are arbitrary-precision. Rank uses Bareiss elimination, first in
//! checked `i128` and, if any intermediate minor overflows, again in `BigInt`.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::graph::Graph;

/// Largest number of entries a Kronecker product may produce.
pub const MAX_ENTRIES: usize = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("{op}: dimension mismatch {left:?} vs {right:?}")]
    DimensionMismatch { op: &'static str, left: (usize, usize), right: (usize, usize) },
    #[error("matrix with {0} entries exceeds the cap of {MAX_ENTRIES}")]
    SizeOverflow(usize),
    #[error("matrix is {0}x{1}, expected square")]
    NotSquare(usize, usize),
    #[error("{rows}x{cols} matrix needs {expected} entries, got {found}")]
    BadShape { rows: usize, cols: usize, expected: usize, found: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self, LinalgError> {
        if rows * cols != entries.len() {
            return Err(LinalgError::BadShape { rows, cols, expected: rows * cols, found: entries.len() });
        }
        Ok(IntMatrix { rows, cols, entries })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        let entries = (0..rows * cols).map(|k| BigInt::from(f(k / cols, k % cols))).collect();
        IntMatrix { rows, cols, entries }
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self, LinalgError> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(LinalgError::BadShape {
                    rows: rows.len(),
                    cols,
                    expected: rows.len() * cols,
                    found: entries.len() + r.len(),
                });
            }
            entries.extend(r.iter().map(|&x| BigInt::from(x)));
        }
        Ok(IntMatrix { rows: rows.len(), cols, entries })
    }

    /// Adjacency matrix of `g`.
    pub fn adjacency(g: &Graph) -> Self {
        Self::from_fn(g.n(), g.n(), |i, j| g.has_edge(i, j) as i64)
    }

    pub fn identity(t: usize) -> Self {
        Self::from_fn(t, t, |i, j| (i == j) as i64)
    }

    pub fn zeros(t: usize) -> Self {
        Self::from_fn(t, t, |_, _| 0)
    }

    pub fn ones(t: usize) -> Self {
        Self::from_fn(t, t, |_, _| 1)
    }

    /// `diag(A_1, ..., A_m)`.
    pub fn block_diag(blocks: &[IntMatrix]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = IntMatrix { rows, cols, entries: vec![BigInt::zero(); rows * cols] };
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.entries[(r0 + i) * cols + c0 + j] = b.get(i, j).clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    /// Entry as `i64`, if it fits.
    pub fn get_i64(&self, i: usize, j: usize) -> Option<i64> {
        self.get(i, j).to_i64()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn transpose(&self) -> Self {
        let entries = (0..self.rows * self.cols).map(|k| self.get(k % self.rows, k / self.rows).clone()).collect();
        IntMatrix { rows: self.cols, cols: self.rows, entries }
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn row_sums(&self) -> Vec<BigInt> {
        self.entries.chunks(self.cols.max(1)).map(|r| r.iter().sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<BigInt> {
        (0..self.cols).map(|j| (0..self.rows).map(|i| self.get(i, j)).sum()).collect()
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).collect()
    }

    fn same_shape(&self, other: &Self, op: &'static str) -> Result<(), LinalgError> {
        if self.rows == other.rows && self.cols == other.cols {
            Ok(())
        } else {
            Err(LinalgError::DimensionMismatch { op, left: (self.rows, self.cols), right: (other.rows, other.cols) })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, LinalgError> {
        self.same_shape(other, "add")?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Ok(IntMatrix { rows: self.rows, cols: self.cols, entries })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, LinalgError> {
        self.same_shape(other, "sub")?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
        Ok(IntMatrix { rows: self.rows, cols: self.cols, entries })
    }

    pub fn scale(&self, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let entries = self.entries.iter().map(|a| a * &c).collect();
        IntMatrix { rows: self.rows, cols: self.cols, entries }
    }

    /// `self - theta * I`.
    pub fn shift_diagonal(&self, theta: &BigInt) -> Result<Self, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare(self.rows, self.cols));
        }
        let mut out = self.clone();
        for i in 0..self.rows {
            out.entries[i * self.cols + i] -= theta;
        }
        Ok(out)
    }

    pub fn mat_mul(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch {
                op: "mat_mul",
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let (n, m, p) = (self.rows, self.cols, other.cols);
        let mut entries = vec![BigInt::zero(); n * p];
        for i in 0..n {
            for k in 0..m {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..p {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        entries[i * p + j] += a * b;
                    }
                }
            }
        }
        Ok(IntMatrix { rows: n, cols: p, entries })
    }

    /// `self ⊗ other`: block `(i, j)` is `self[i][j] * other`.
    pub fn kronecker(&self, other: &Self) -> Result<Self, LinalgError> {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let size = rows.checked_mul(cols).ok_or(LinalgError::SizeOverflow(usize::MAX))?;
        if size > MAX_ENTRIES {
            return Err(LinalgError::SizeOverflow(size));
        }
        let mut entries = Vec::with_capacity(size);
        for r in 0..rows {
            let (i, k) = (r / other.rows, r % other.rows);
            for c in 0..cols {
                let (j, l) = (c / other.cols, c % other.cols);
                entries.push(self.get(i, j) * other.get(k, l));
            }
        }
        Ok(IntMatrix { rows, cols, entries })
    }

    /// Rank over the rationals.
    pub fn rank_exact(&self) -> usize {
        if let Some(rank) = self.rank_word() {
            return rank;
        }
        let rows = self.entries.chunks(self.cols.max(1)).map(<[BigInt]>::to_vec).collect();
        bareiss_rank_big(rows, self.cols)
    }

    fn rank_word(&self) -> Option<usize> {
        let mut rows = Vec::with_capacity(self.rows);
        for r in self.entries.chunks(self.cols.max(1)).take(self.rows) {
            rows.push(r.iter().map(|x| x.to_i128()).collect::<Option<Vec<i128>>>()?);
        }
        bareiss_rank_word(rows, self.cols)
    }

    pub fn to_graph(&self) -> Result<Graph, crate::graph::GraphError> {
        let rows: Vec<Vec<i64>> = self
            .entries
            .chunks(self.cols.max(1))
            .map(|r| r.iter().map(|x| x.to_i64().unwrap_or(i64::MAX)).collect())
            .collect();
        Graph::from_matrix(&rows)
    }
}

/// Multiplicity of the integer `theta` as an eigenvalue: `n - rank(a - theta I)`.
/// This is the geometric multiplicity, which equals the algebraic one for
/// symmetric input.
pub fn eigen_multiplicity(a: &IntMatrix, theta: &BigInt) -> Result<usize, LinalgError> {
    let shifted = a.shift_diagonal(theta)?;
    Ok(a.rows - shifted.rank_exact())
}

fn bareiss_rank_word(mut m: Vec<Vec<i128>>, cols: usize) -> Option<usize> {
    let rows = m.len();
    let mut prev: i128 = 1;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&p| m[p][c] != 0) else { continue };
        m.swap(r, p);
        let (top, rest) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = pivot_row[c];
        for row in rest.iter_mut() {
            let lead = row[c];
            for j in c + 1..cols {
                let x = pivot.checked_mul(row[j])?.checked_sub(lead.checked_mul(pivot_row[j])?)?;
                row[j] = x / prev;
            }
            row[c] = 0;
        }
        prev = pivot;
        r += 1;
    }
    Some(r)
}

fn bareiss_rank_big(mut m: Vec<Vec<BigInt>>, cols: usize) -> usize {
    let rows = m.len();
    let mut prev = BigInt::one();
    let mut r = 0;
    let mut scratch = BigInt::zero();
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&p| !m[p][c].is_zero()) else { continue };
        m.swap(r, p);
        let (top, rest) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = &pivot_row[c];
        let unit = prev.is_one() || (prev.is_negative() && prev.magnitude().is_one());
        for row in rest.iter_mut() {
            let lead = std::mem::take(&mut row[c]);
            for j in c + 1..cols {
                row[j] *= pivot;
                if !lead.is_zero() && !pivot_row[j].is_zero() {
                    scratch.clone_from(&lead);
                    scratch *= &pivot_row[j];
                    row[j] -= &scratch;
                }
                if !unit {
                    row[j] /= &prev;
                } else if prev.is_negative() {
                    row[j] = -std::mem::take(&mut row[j]);
                }
            }
        }
        prev = pivot.clone();
        r += 1;
    }
    r
}
