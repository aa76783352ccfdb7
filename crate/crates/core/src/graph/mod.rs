//! Dense simple undirected graphs with bit-packed adjacency rows.
//!
//! Every other module works on [`Graph`]. Rows are stored as `u64` words so
//! that common-neighbour counts reduce to `AND` + popcount over `n / 64` words.

mod graph6;
mod ops;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use graph6::{graph6_decode, graph6_encode, Graph6Error};
pub use ops::{lexicographic_product, Diameter};

/// Largest vertex count any [`Graph`] may have.
pub const MAX_VERTICES: usize = 8192;

const WORD: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("adjacency matrix is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("adjacency matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },
    #[error("nonzero diagonal entry at vertex {0}")]
    NonzeroDiagonal(usize),
    #[error("entry ({row}, {col}) is {value}, expected 0 or 1")]
    NonBinaryEntry { row: usize, col: usize, value: i64 },
    #[error("graph with {0} vertices exceeds the cap of {MAX_VERTICES}")]
    SizeOverflow(usize),
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex set must be nonempty")]
    EmptySet,
    #[error("vertex set has a repeated member {0}")]
    DuplicateVertex(usize),
    #[error("not a permutation of 0..{0}")]
    NotPermutation(usize),
}

/// Simple undirected graph on vertices `0..n`.
///
/// Equality and hashing look at the adjacency only, never at the label.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
    label: Option<String>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.bits == other.bits
    }
}

impl Eq for Graph {}

impl std::hash::Hash for Graph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.bits.hash(state);
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edge_count())
            .field("label", &self.label)
            .finish()
    }
}

fn check_order(n: usize) -> Result<(), GraphError> {
    if n == 0 {
        Err(GraphError::Empty)
    } else if n > MAX_VERTICES {
        Err(GraphError::SizeOverflow(n))
    } else {
        Ok(())
    }
}

impl Graph {
    /// Edgeless graph (coclique) on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        check_order(n)?;
        let words = n.div_ceil(WORD);
        Ok(Graph { n, words, bits: vec![0; n * words], label: None })
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        Self::from_fn(n, |_, _| true)
    }

    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        Self::from_fn(n, |i, j| j - i == 1 || (i == 0 && j == n - 1 && n > 2))
    }

    pub fn path(n: usize) -> Result<Self, GraphError> {
        Self::from_fn(n, |i, j| j - i == 1)
    }

    /// Builds a graph by asking `adjacent(i, j)` for every pair `i < j`.
    pub fn from_fn<F>(n: usize, mut adjacent: F) -> Result<Self, GraphError>
    where
        F: FnMut(usize, usize) -> bool,
    {
        let mut g = Self::empty(n)?;
        for i in 0..n {
            for j in i + 1..n {
                if adjacent(i, j) {
                    g.set_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n)?;
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::NonzeroDiagonal(u));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Reads a square 0/1 matrix, rejecting asymmetry, loops and other values.
    pub fn from_matrix<R, T>(rows: &[R]) -> Result<Self, GraphError>
    where
        R: AsRef<[T]>,
        T: Copy + Into<i64>,
    {
        let n = rows.len();
        for (i, row) in rows.iter().enumerate() {
            let len = row.as_ref().len();
            if len != n {
                return Err(GraphError::NotSquare { row: i, len, expected: n });
            }
        }
        let mut g = Self::empty(n)?;
        for i in 0..n {
            for j in 0..n {
                let value: i64 = rows[i].as_ref()[j].into();
                if value != 0 && value != 1 {
                    return Err(GraphError::NonBinaryEntry { row: i, col: j, value });
                }
                if i == j && value != 0 {
                    return Err(GraphError::NonzeroDiagonal(i));
                }
                let mirror: i64 = rows[j].as_ref()[i].into();
                if value != mirror {
                    let (row, col) = if i < j { (i, j) } else { (j, i) };
                    return Err(GraphError::NotSymmetric { row, col });
                }
                if i < j && value == 1 {
                    g.set_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / WORD] |= 1 << (v % WORD);
        self.bits[v * self.words + u / WORD] |= 1 << (u % WORD);
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / WORD] >> (v % WORD) & 1 == 1
    }

    /// Packed adjacency row of `u`.
    #[inline]
    pub fn row(&self, u: usize) -> &[u64] {
        &self.bits[u * self.words..(u + 1) * self.words]
    }

    pub fn neighbours(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.row(u))
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn common_neighbours(&self, u: usize, v: usize) -> usize {
        self.row(u).iter().zip(self.row(v)).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    /// Entries of `A²` in row-major order; computed with popcounts, so exact.
    pub fn square_counts(&self) -> Vec<u32> {
        let n = self.n;
        let mut c = vec![0u32; n * n];
        for u in 0..n {
            for v in u..n {
                let x = self.common_neighbours(u, v) as u32;
                c[u * n + v] = x;
                c[v * n + u] = x;
            }
        }
        c
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).sum::<usize>() / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbours(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Dense 0/1 rows, mostly for tests and debug output.
    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        (0..self.n).map(|u| (0..self.n).map(|v| self.has_edge(u, v) as u8).collect()).collect()
    }

    /// Relabels vertices: old vertex `i` becomes `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Self, GraphError> {
        check_permutation(perm, self.n)?;
        let mut g = Self::empty(self.n)?;
        for (u, v) in self.edges() {
            g.set_edge(perm[u], perm[v]);
        }
        g.label = self.label.clone();
        Ok(g)
    }

    pub fn adjacency_dump(&self) -> AdjacencyDump {
        AdjacencyDump { n: self.n, rows: (0..self.n).map(|u| self.neighbours(u).collect()).collect() }
    }
}

pub(crate) fn check_permutation(perm: &[usize], n: usize) -> Result<(), GraphError> {
    if perm.len() != n {
        return Err(GraphError::NotPermutation(n));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return Err(GraphError::NotPermutation(n));
        }
        seen[p] = true;
    }
    Ok(())
}

pub(crate) fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        let mut rest = w;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * WORD + b)
            }
        })
    })
}

/// Adjacency-list JSON dump `{"n": .., "rows": [[..], ..]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjacencyDump {
    pub n: usize,
    pub rows: Vec<Vec<usize>>,
}

impl AdjacencyDump {
    pub fn to_graph(&self) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(self.n)?;
        for (u, row) in self.rows.iter().enumerate() {
            g.check_vertex(u)?;
            for &v in row {
                g.check_vertex(v)?;
                if u == v {
                    return Err(GraphError::NonzeroDiagonal(u));
                }
                g.set_edge(u, v);
            }
        }
        for (u, row) in self.rows.iter().enumerate() {
            if g.degree(u) != row.len() {
                let v = g.neighbours(u).find(|v| !row.contains(v)).unwrap_or(u);
                return Err(GraphError::NotSymmetric { row: u.min(v), col: u.max(v) });
            }
        }
        Ok(g)
    }
}

/// Sorted, duplicate-free set of vertices of some host graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    /// Validates membership against a host of `host_n` vertices.
    pub fn new(mut members: Vec<usize>, host_n: usize) -> Result<Self, GraphError> {
        members.sort_unstable();
        for w in members.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateVertex(w[0]));
            }
        }
        if let Some(&last) = members.last() {
            if last >= host_n {
                return Err(GraphError::VertexOutOfRange { vertex: last, n: host_n });
            }
        }
        Ok(VertexSet(members))
    }

    /// Caller guarantees sorted, distinct members.
    pub(crate) fn from_sorted(members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        VertexSet(members)
    }

    pub fn range(range: std::ops::Range<usize>) -> Self {
        VertexSet(range.collect())
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn min(&self) -> Option<usize> {
        self.0.first().copied()
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, usize>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}
