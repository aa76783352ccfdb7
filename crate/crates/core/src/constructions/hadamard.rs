use super::{BuiltDdg, ConstructionError};
use crate::analysis::DdgParams;
use crate::graph::{Graph, MAX_VERTICES};
use crate::linalg::{IntMatrix, MAX_ENTRIES};

/// A `±1` matrix with `HHᵀ = order · I`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HadamardMatrix {
    order: usize,
    signs: Vec<i8>,
}

fn not_hadamard(msg: impl Into<String>) -> ConstructionError {
    ConstructionError::NotHadamard(msg.into())
}

impl HadamardMatrix {
    pub fn new(m: &IntMatrix) -> Result<Self, ConstructionError> {
        if !m.is_square() {
            return Err(not_hadamard(format!("{}×{} is not square", m.rows(), m.cols())));
        }
        let order = m.rows();
        let mut signs = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                match m.get_i64(i, j) {
                    Some(1) => signs.push(1),
                    Some(-1) => signs.push(-1),
                    _ => return Err(not_hadamard(format!("entry ({i}, {j}) is {}", m.get(i, j)))),
                }
            }
        }
        Self::from_signs(order, signs)
    }

    pub fn from_signs(order: usize, signs: Vec<i8>) -> Result<Self, ConstructionError> {
        if order == 0 || signs.len() != order * order || signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(not_hadamard("entries must be ±1 in a nonempty square"));
        }
        if order * order > MAX_ENTRIES {
            return Err(ConstructionError::SizeOverflow(order));
        }
        let h = HadamardMatrix { order, signs };
        if let Some((i, j)) = h.orthogonality_violation() {
            return Err(not_hadamard(format!("rows {i} and {j} are not orthogonal")));
        }
        Ok(h)
    }

    /// First pair of distinct non-orthogonal rows, using bit-packed rows (`1` for `−1`).
    fn orthogonality_violation(&self) -> Option<(usize, usize)> {
        let n = self.order;
        let words = n.div_ceil(64);
        let mut packed = vec![0u64; n * words];
        for i in 0..n {
            for j in 0..n {
                if self.get(i, j) < 0 {
                    packed[i * words + j / 64] |= 1 << (j % 64);
                }
            }
        }
        for i in 0..n {
            let ri = &packed[i * words..(i + 1) * words];
            for j in i + 1..n {
                let rj = &packed[j * words..(j + 1) * words];
                let differ: u32 = ri.iter().zip(rj).map(|(a, b)| (a ^ b).count_ones()).sum();
                if 2 * differ as usize != n {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// `J − 2I` of order 4.
    pub fn base() -> Self {
        Self::from_signs(4, (0..16).map(|x| if x / 4 == x % 4 { -1 } else { 1 }).collect()).expect("order-4 Hadamard")
    }

    /// `J − 2R` of order 4, with `R` the back-diagonal permutation matrix.
    pub fn base_prime() -> Self {
        Self::from_signs(4, (0..16).map(|x| if x / 4 + x % 4 == 3 { -1 } else { 1 }).collect())
            .expect("order-4 Hadamard")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.signs[i * self.order + j]
    }

    pub fn matrix(&self) -> IntMatrix {
        IntMatrix::from_fn(self.order, self.order, |i, j| self.get(i, j) as i64)
    }

    /// Symmetric with constant diagonal.
    pub fn is_graphical(&self) -> bool {
        self.diagonal().is_some() && (0..self.order).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn diagonal(&self) -> Option<i8> {
        let d = self.get(0, 0);
        (0..self.order).all(|i| self.get(i, i) == d).then_some(d)
    }

    /// The common row and column sum, if there is one.
    pub fn row_sum(&self) -> Option<i64> {
        let n = self.order;
        let row = |i: usize| (0..n).map(|j| self.get(i, j) as i64).sum::<i64>();
        let col = |j: usize| (0..n).map(|i| self.get(i, j) as i64).sum::<i64>();
        let s = row(0);
        (0..n).all(|i| row(i) == s && col(i) == s).then_some(s)
    }

    pub fn kronecker(&self, other: &Self) -> Result<Self, ConstructionError> {
        let (a, b) = (self.order, other.order);
        let n = a.checked_mul(b).filter(|n| n.checked_mul(*n).is_some_and(|e| e <= MAX_ENTRIES));
        let n = n.ok_or(ConstructionError::SizeOverflow(a.saturating_mul(b)))?;
        let mut signs = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                signs.push(self.get(i / b, j / b) * other.get(i % b, j % b));
            }
        }
        // A Kronecker product of Hadamard matrices is Hadamard; skip re-validation.
        Ok(HadamardMatrix { order: n, signs })
    }
}

/// `H_1 = H`, `H_t = H_{t−1} ⊗ H′`: order `4^t`, graphical, row sum `2^t`, diagonal `−1`.
pub fn hadamard_tower(t: usize) -> Result<HadamardMatrix, ConstructionError> {
    if t == 0 {
        return Err(ConstructionError::Precondition("tower level must be at least 1".into()));
    }
    let prime = HadamardMatrix::base_prime();
    let mut h = HadamardMatrix::base();
    for _ in 1..t {
        h = h.kronecker(&prime)?;
    }
    debug_assert!(h.is_graphical());
    debug_assert_eq!(h.diagonal(), Some(-1));
    debug_assert_eq!(h.row_sum(), Some(1 << t));
    Ok(h)
}

/// Which of `M`, `N`, `O` sits at block `(X, Y)` of the `3 × 3` layout.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Block {
    M,
    N,
    O,
}

const LAYOUT: [[Block; 3]; 3] =
    [[Block::M, Block::N, Block::O], [Block::N, Block::O, Block::M], [Block::O, Block::M, Block::N]];

/// DDG `(6ℓ², 2ℓ² + ℓ, ℓ² + ℓ, (ℓ² + ℓ)/2, 3, 2ℓ²)` from a regular graphical
/// Hadamard matrix of order `ℓ²`, diagonal `−1`, row sum `ℓ > 0`, laid out as
/// `[[M, N, O], [N, O, M], [O, M, N]]` with `M = ½[J+H, J+H; J+H, J+H]` and
/// `N = ½[J+H, J−H; J−H, J+H]`.
pub fn construction6(h: &HadamardMatrix) -> Result<BuiltDdg, ConstructionError> {
    let bad = |m: String| ConstructionError::NotRegularGraphicalHadamard(m);
    if !h.is_graphical() {
        return Err(bad("not symmetric with constant diagonal".into()));
    }
    match h.diagonal() {
        Some(-1) => {}
        Some(d) => return Err(ConstructionError::WrongDiagonalSign(d as i64)),
        None => unreachable!("graphical implies constant diagonal"),
    }
    let l = h.row_sum().ok_or_else(|| bad("row and column sums are not constant".into()))?;
    let b = h.order();
    if l <= 0 || (l * l) as usize != b {
        return Err(bad(format!("row sum {l} with order {b}")));
    }
    let v = 6 * b;
    if v > MAX_VERTICES {
        return Err(ConstructionError::SizeOverflow(v));
    }
    let graph = Graph::from_fn(v, |x, y| {
        let (bx, sx, i) = (x / (2 * b), (x / b) % 2, x % b);
        let (by, sy, j) = (y / (2 * b), (y / b) % 2, y % b);
        let plus = h.get(i, j) > 0;
        match LAYOUT[bx][by] {
            Block::M => plus,
            Block::N => plus == (sx == sy),
            Block::O => false,
        }
    })?;
    let (l, b) = (l as usize, b);
    let params = DdgParams::new(v, 2 * b + l, b + l, (b + l) / 2, 3, 2 * b)?;
    Ok(BuiltDdg { graph, params })
}
