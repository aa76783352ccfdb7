use serde::{Deserialize, Serialize};

use super::{AnalysisError, DdgParams, Partition};
use crate::graph::Graph;
use crate::linalg::IntMatrix;

/// Quotient matrix of an equitable partition: every vertex of class `i` has
/// exactly `r[i][j]` neighbours in class `j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientMatrix {
    entries: Vec<Vec<usize>>,
}

impl QuotientMatrix {
    pub fn order(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.entries
    }

    pub fn into_rows(self) -> Vec<Vec<usize>> {
        self.entries
    }

    pub fn diagonal(&self) -> Vec<usize> {
        (0..self.order()).map(|i| self.entries[i][i]).collect()
    }

    pub fn has_constant_diagonal(&self) -> bool {
        let d = self.diagonal();
        d.iter().all(|&x| x == d[0])
    }

    pub fn to_int_matrix(&self) -> IntMatrix {
        IntMatrix::from_fn(self.order(), self.order(), |i, j| self.entries[i][j] as i64)
    }

    /// First entry where `R² ≠ (k² − λ2 v)I + λ2 n J`, if any.
    pub fn ddg_identity_violation(&self, p: &DdgParams) -> Option<(usize, usize)> {
        let m = self.order();
        let d2 = p.d2();
        let off = (p.lambda2 * p.n) as i64;
        for i in 0..m {
            for j in 0..m {
                let sq: i64 = (0..m).map(|l| (self.entries[i][l] * self.entries[l][j]) as i64).sum();
                let expected = if i == j { d2 + off } else { off };
                if sq != expected {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

pub fn canonical_quotient(g: &Graph, partition: &Partition) -> Result<QuotientMatrix, AnalysisError> {
    if partition.vertex_count() != g.n() {
        return Err(AnalysisError::PartitionMismatch(format!(
            "partition covers {} vertices, graph has {}",
            partition.vertex_count(),
            g.n()
        )));
    }
    let class = partition.class_of();
    let m = partition.num_classes();
    let mut entries = vec![vec![0; m]; m];
    for (i, c) in partition.classes().iter().enumerate() {
        let first = c.min().expect("classes are nonempty");
        let mut reference = vec![0; m];
        for w in g.neighbours(first) {
            reference[class[w]] += 1;
        }
        for u in c.iter().skip(1) {
            let mut counts = vec![0; m];
            for w in g.neighbours(u) {
                counts[class[w]] += 1;
            }
            if let Some(j) = (0..m).find(|&j| counts[j] != reference[j]) {
                return Err(AnalysisError::NotEquitable { class_i: i, u: first, v: u, class_j: j });
            }
        }
        entries[i] = reference;
    }
    Ok(QuotientMatrix { entries })
}

/// Quotient of a DDG's canonical partition, with the `R²` identity asserted.
pub fn checked_quotient(g: &Graph, p: &DdgParams, partition: &Partition) -> Result<QuotientMatrix, AnalysisError> {
    let q = canonical_quotient(g, partition)?;
    if let Some((row, col)) = q.ddg_identity_violation(p) {
        return Err(AnalysisError::QuotientIdentity { row, col });
    }
    Ok(q)
}

/// A proper DDG is walk-regular iff its canonical quotient has constant diagonal.
pub fn is_walk_regular_ddg(g: &Graph, p: &DdgParams, partition: &Partition) -> Result<bool, AnalysisError> {
    if !p.is_proper() {
        return Err(AnalysisError::ImproperInput(*p));
    }
    Ok(checked_quotient(g, p, partition)?.has_constant_diagonal())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexSet;

    #[test]
    fn bipartite_incidence_partition_is_equitable() {
        // C8 is bipartite and 2-regular: each side sees 2 neighbours on the other.
        let c8 = Graph::cycle(8).unwrap();
        let sides = Partition::new(
            vec![VertexSet::new(vec![0, 2, 4, 6], 8).unwrap(), VertexSet::new(vec![1, 3, 5, 7], 8).unwrap()],
            8,
        )
        .unwrap();
        let q = canonical_quotient(&c8, &sides).unwrap();
        assert_eq!(q.rows(), &[vec![0, 2], vec![2, 0]]);
    }

    #[test]
    fn unbalanced_partition_is_not_equitable() {
        let p4 = Graph::path(4).unwrap();
        let err = canonical_quotient(&p4, &Partition::contiguous(2, 2)).unwrap_err();
        assert_eq!(err, AnalysisError::NotEquitable { class_i: 0, u: 0, v: 1, class_j: 1 });
    }

    #[test]
    fn walk_regularity_requires_proper_input() {
        let k4 = Graph::complete(4).unwrap();
        let p = DdgParams::new(4, 3, 2, 2, 1, 4).unwrap();
        assert_eq!(is_walk_regular_ddg(&k4, &p, &Partition::contiguous(1, 4)), Err(AnalysisError::ImproperInput(p)));
    }
}
