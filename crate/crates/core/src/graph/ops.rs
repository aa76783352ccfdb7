use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::{check_order, Graph, GraphError, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl Graph {
    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n).expect("same order as a valid graph");
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.set_edge(u, v);
                }
            }
        }
        g
    }

    /// Subgraph induced on `s`; vertex `s[i]` becomes `i`.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph, GraphError> {
        if s.is_empty() {
            return Err(GraphError::EmptySet);
        }
        for v in s {
            self.check_vertex(v)?;
        }
        let members = s.members();
        Graph::from_fn(members.len(), |i, j| self.has_edge(members[i], members[j]))
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.degree(u)).collect()
    }

    /// `Some(k)` when every vertex has degree `k`.
    pub fn regularity(&self) -> Option<usize> {
        let k = self.degree(0);
        (1..self.n).all(|u| self.degree(u) == k).then_some(k)
    }

    pub fn is_k_regular(&self, k: usize) -> bool {
        self.regularity() == Some(k)
    }

    /// Breadth-first distances from `source`, skipping vertices with `blocked[v]`.
    pub(crate) fn bfs_distances(&self, source: usize, blocked: Option<&[bool]>) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or(0);
            for w in self.neighbours(u) {
                if dist[w].is_none() && blocked.is_none_or(|b| !b[w]) {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Components of the graph with `removed` vertices deleted, each sorted,
    /// listed by smallest member.
    pub(crate) fn components_avoiding(&self, removed: &[bool]) -> Vec<VertexSet> {
        let mut seen = removed.to_vec();
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let dist = self.bfs_distances(s, Some(removed));
            let mut members: Vec<usize> = (0..self.n).filter(|&v| dist[v].is_some()).collect();
            for &v in &members {
                seen[v] = true;
            }
            members.sort_unstable();
            out.push(VertexSet::from_sorted(members));
        }
        out
    }

    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_avoiding(&vec![false; self.n])
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_distances(0, None).iter().all(Option::is_some)
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n - 1) / 2
    }

    pub fn diameter(&self) -> Diameter {
        let mut best = 0;
        for s in 0..self.n {
            for d in self.bfs_distances(s, None) {
                match d {
                    Some(d) => best = best.max(d),
                    None => return Diameter::Infinite,
                }
            }
        }
        Diameter::Finite(best)
    }
}

/// `G[H]`: `(u1, v1) ~ (u2, v2)` iff `u1 ~ u2`, or `u1 = u2` and `v1 ~ v2`.
/// Vertex `(i, j)` is numbered `i * |V(H)| + j`.
pub fn lexicographic_product(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    let (gn, hn) = (g.n(), h.n());
    let n = gn.checked_mul(hn).ok_or(GraphError::SizeOverflow(usize::MAX))?;
    check_order(n)?;
    Graph::from_fn(n, |a, b| {
        let (u1, v1) = (a / hn, a % hn);
        let (u2, v2) = (b / hn, b % hn);
        g.has_edge(u1, u2) || (u1 == u2 && h.has_edge(v1, v2))
    })
}
