//! Recognition and verification of divisible design graphs.
//!
//! A DDG with parameters `(v, k, λ1, λ2, m, n)` is a `k`-regular graph whose
//! vertices split into `m` classes of size `n`; distinct vertices share `λ1`
//! neighbours inside a class and `λ2` across classes. Equivalently
//! `A² = kI + λ1(K − I) + λ2(J − K)` with `K = I_m ⊗ J_n` in class order.

mod quotient;
mod spectrum;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Diameter, Graph, GraphError, VertexSet};
use crate::linalg::LinalgError;

pub use quotient::{canonical_quotient, checked_quotient, is_walk_regular_ddg, QuotientMatrix};
pub use spectrum::{ddg_spectrum, DdgSpectrum, Eigenvalue};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("graph is not regular")]
    NotRegular,
    #[error("common-neighbour counts take {0:?}, more than two values: not a Deza graph")]
    MoreThanTwoValues(Vec<usize>),
    #[error("partition does not match parameters: {0}")]
    PartitionMismatch(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("partition is not equitable: vertices {u} and {v} of class {class_i} have different neighbour counts in class {class_j}")]
    NotEquitable { class_i: usize, u: usize, v: usize, class_j: usize },
    #[error("quotient matrix violates R² = (k² − λ2 v)I + λ2 n J at ({row}, {col})")]
    QuotientIdentity { row: usize, col: usize },
    #[error("inconsistent eigenvalue multiplicities: {0}")]
    InconsistentMultiplicities(String),
    #[error("operation requires a proper DDG, got {0}")]
    ImproperInput(DdgParams),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// The six DDG parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DdgParams {
    pub v: usize,
    pub k: usize,
    pub lambda1: usize,
    pub lambda2: usize,
    pub m: usize,
    pub n: usize,
}

impl DdgParams {
    pub fn new(v: usize, k: usize, lambda1: usize, lambda2: usize, m: usize, n: usize) -> Result<Self, AnalysisError> {
        let p = DdgParams { v, k, lambda1, lambda2, m, n };
        if v == 0 || m * n != v {
            return Err(AnalysisError::InvalidParams(format!("{p}: v must equal m·n > 0")));
        }
        if k >= v || lambda1 > k || lambda2 > k {
            return Err(AnalysisError::InvalidParams(format!("{p}: need λ1, λ2 ≤ k ≤ v − 1")));
        }
        Ok(p)
    }

    pub fn is_proper(&self) -> bool {
        self.m > 1 && self.n > 1 && self.lambda1 != self.lambda2
    }

    /// `k − λ1`, the square of the class-level eigenvalue pair.
    pub fn d1(&self) -> i64 {
        self.k as i64 - self.lambda1 as i64
    }

    /// `k² − λ2 v`, the square of the quotient-level eigenvalue pair.
    pub fn d2(&self) -> i64 {
        (self.k * self.k) as i64 - (self.lambda2 * self.v) as i64
    }
}

impl fmt::Display for DdgParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {}, {}, {})", self.v, self.k, self.lambda1, self.lambda2, self.m, self.n)
    }
}

/// Ordered vertex partition into classes of equal size.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Partition {
    classes: Vec<VertexSet>,
    class_size: usize,
}

impl Partition {
    pub fn new(classes: Vec<VertexSet>, host_n: usize) -> Result<Self, AnalysisError> {
        let class_size = classes.first().map_or(0, VertexSet::len);
        if class_size == 0 {
            return Err(AnalysisError::PartitionMismatch("empty class".into()));
        }
        let mut seen = vec![false; host_n];
        for (i, c) in classes.iter().enumerate() {
            if c.len() != class_size {
                return Err(AnalysisError::PartitionMismatch(format!(
                    "class {i} has {} vertices, class 0 has {class_size}",
                    c.len()
                )));
            }
            for v in c {
                if v >= host_n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n: host_n }.into());
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(AnalysisError::PartitionMismatch(format!("vertex {v} in two classes")));
                }
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(AnalysisError::PartitionMismatch(format!("vertex {v} is in no class")));
        }
        Ok(Partition { classes, class_size })
    }

    /// Classes `{0..n}, {n..2n}, ...`.
    pub fn contiguous(m: usize, n: usize) -> Self {
        Partition { classes: (0..m).map(|i| VertexSet::range(i * n..(i + 1) * n)).collect(), class_size: n }
    }

    pub fn classes(&self) -> &[VertexSet] {
        &self.classes
    }

    pub fn class_size(&self) -> usize {
        self.class_size
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.classes.len() * self.class_size
    }

    /// Class index of every vertex.
    pub fn class_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.vertex_count()];
        for (i, c) in self.classes.iter().enumerate() {
            for v in c {
                out[v] = i;
            }
        }
        out
    }

    /// Vertices listed class by class: the ordering under which `K = I_m ⊗ J_n`.
    pub fn ordering(&self) -> Vec<usize> {
        self.classes.iter().flat_map(|c| c.iter()).collect()
    }

    pub fn to_lists(&self) -> Vec<Vec<usize>> {
        self.classes.iter().map(|c| c.members().to_vec()).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EntryKind {
    Diagonal,
    WithinClass,
    AcrossClasses,
}

/// First entry of `A²` that disagrees with the DDG identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub u: usize,
    pub v: usize,
    pub kind: EntryKind,
    pub expected: usize,
    pub found: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub holds: bool,
    pub violation: Option<Violation>,
}

/// Checks `A² = kI + λ1(K − I) + λ2(J − K)` entry by entry, scanning in the
/// order induced by the partition.
pub fn verify_ddg(g: &Graph, p: &DdgParams, partition: &Partition) -> Result<VerifyReport, AnalysisError> {
    if g.n() != p.v || partition.vertex_count() != p.v {
        return Err(AnalysisError::PartitionMismatch(format!(
            "graph has {} vertices, partition covers {}, v = {}",
            g.n(),
            partition.vertex_count(),
            p.v
        )));
    }
    if partition.num_classes() != p.m || partition.class_size() != p.n {
        return Err(AnalysisError::PartitionMismatch(format!(
            "partition is {}x{}, parameters need {}x{}",
            partition.num_classes(),
            partition.class_size(),
            p.m,
            p.n
        )));
    }
    let class = partition.class_of();
    let order = partition.ordering();
    for &u in &order {
        for &v in &order {
            let (kind, expected) = if u == v {
                (EntryKind::Diagonal, p.k)
            } else if class[u] == class[v] {
                (EntryKind::WithinClass, p.lambda1)
            } else {
                (EntryKind::AcrossClasses, p.lambda2)
            };
            let found = g.common_neighbours(u, v);
            if found != expected {
                return Ok(VerifyReport { holds: false, violation: Some(Violation { u, v, kind, expected, found }) });
            }
        }
    }
    Ok(VerifyReport { holds: true, violation: None })
}

/// One way of reading a graph as a proper DDG.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reading {
    pub params: DdgParams,
    pub partition: Partition,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Recognition {
    /// Every valid `(λ1, λ2)` assignment, with its canonical partition.
    Proper { readings: Vec<Reading> },
    /// A `(v, k, λ)`-graph: a clique, a coclique or an SRG with `λ = μ`.
    Improper { v: usize, k: usize, lambda: usize },
    /// A Deza graph with common-neighbour counts `{a, b}` that admits no DDG
    /// partition other than the trivial one into singletons.
    NotDdg { b: usize, a: usize },
}

impl Recognition {
    pub fn readings(&self) -> &[Reading] {
        match self {
            Recognition::Proper { readings } => readings,
            _ => &[],
        }
    }
}

pub fn recognize_ddg(g: &Graph) -> Result<Recognition, AnalysisError> {
    let v = g.n();
    let k = g.regularity().ok_or(AnalysisError::NotRegular)?;
    let counts = g.square_counts();
    if (0..v).any(|u| counts[u * v + u] as usize != k) {
        return Err(AnalysisError::NotRegular);
    }
    let values: BTreeSet<usize> = (0..v)
        .flat_map(|u| (0..v).filter(move |&w| w != u).map(move |w| (u, w)))
        .map(|(u, w)| counts[u * v + w] as usize)
        .collect();
    let values: Vec<usize> = values.into_iter().collect();
    match values.as_slice() {
        [] => Ok(Recognition::Improper { v, k, lambda: 0 }),
        [lambda] => Ok(Recognition::Improper { v, k, lambda: *lambda }),
        [a, b] => {
            let mut readings = Vec::new();
            for (l1, l2) in [(*a, *b), (*b, *a)] {
                if let Some(partition) = partition_by_value(&counts, v, l1) {
                    let params = DdgParams::new(v, k, l1, l2, partition.num_classes(), partition.class_size())?;
                    if verify_ddg(g, &params, &partition)?.holds {
                        readings.push(Reading { params, partition });
                    }
                }
            }
            if readings.is_empty() {
                Ok(Recognition::NotDdg { b: *b, a: *a })
            } else {
                Ok(Recognition::Proper { readings })
            }
        }
        _ => Err(AnalysisError::MoreThanTwoValues(values)),
    }
}

/// Classes of the relation `u ≡ w iff A²[u][w] = value` (plus reflexivity),
/// if that relation is an equivalence with classes of one size.
fn partition_by_value(counts: &[u32], v: usize, value: usize) -> Option<Partition> {
    let mut class_id = vec![usize::MAX; v];
    let mut classes = Vec::new();
    for u in 0..v {
        if class_id[u] != usize::MAX {
            continue;
        }
        let members: Vec<usize> = (0..v).filter(|&w| w == u || counts[u * v + w] as usize == value).collect();
        for &w in &members {
            if class_id[w] != usize::MAX {
                return None;
            }
            class_id[w] = classes.len();
        }
        classes.push(members);
    }
    // Each class must be a clique of the relation.
    for members in &classes {
        for &x in members {
            for &y in members {
                if x != y && counts[x * v + y] as usize != value {
                    return None;
                }
            }
        }
    }
    let size = classes[0].len();
    if classes.iter().any(|c| c.len() != size) {
        return None;
    }
    // Classes are discovered in order of their smallest member.
    Partition::new(classes.into_iter().map(VertexSet::from_sorted).collect(), v).ok()
}

/// Everything the `verify` report carries for one reading.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DdgReport {
    pub params: DdgParams,
    pub partition: Vec<Vec<usize>>,
    pub spectrum: DdgSpectrum,
    pub quotient: Vec<Vec<usize>>,
    pub walk_regular: bool,
    pub diameter: Diameter,
}

/// Full analysis of one reading: identity, quotient identity, spectrum,
/// walk-regularity and diameter.
pub fn analyze_reading(g: &Graph, reading: &Reading) -> Result<DdgReport, AnalysisError> {
    let report = verify_ddg(g, &reading.params, &reading.partition)?;
    if let Some(bad) = report.violation {
        return Err(AnalysisError::PartitionMismatch(format!("A² identity fails at {bad:?}")));
    }
    let quotient = checked_quotient(g, &reading.params, &reading.partition)?;
    let spectrum = ddg_spectrum(g, &reading.params, &reading.partition)?;
    Ok(DdgReport {
        params: reading.params,
        partition: reading.partition.to_lists(),
        spectrum,
        walk_regular: quotient.has_constant_diagonal(),
        quotient: quotient.into_rows(),
        diameter: g.diameter(),
    })
}
