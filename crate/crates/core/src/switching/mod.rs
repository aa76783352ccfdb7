//! Automorphisms at desk scale, Seidel automorphisms and dual Seidel switching.
//!
//! A Seidel automorphism is an automorphism of order 2 that only interchanges
//! non-adjacent vertices. Dual Seidel switching replaces the adjacency matrix
//! `A` by `PA`, permuting rows but not columns by such an automorphism.

mod search;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::analysis::DdgParams;
use crate::constructions::{construction4, ConstructionError};
use crate::graph::{Graph, GraphError, VertexSet};
use search::{refine, MapSearch, SeidelSearch};

/// Largest order accepted by the automorphism and isomorphism searches.
pub const SEARCH_MAX: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SwitchingError {
    #[error("{0} vertices exceed the search cap of {SEARCH_MAX}")]
    TooLarge(usize),
    #[error("not an involution: {0}")]
    NotInvolution(String),
    #[error("not a Seidel automorphism: {0}")]
    NotSeidel(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
}

fn check_size(g: &Graph) -> Result<(), SwitchingError> {
    if g.n() > SEARCH_MAX {
        return Err(SwitchingError::TooLarge(g.n()));
    }
    Ok(())
}

/// Automorphisms of `g` as image lists, at most `limit` of them.
pub fn automorphisms(g: &Graph, limit: usize) -> Result<Vec<Vec<usize>>, SwitchingError> {
    check_size(g)?;
    let colour = refine(g);
    let mut out = Vec::new();
    if limit == 0 {
        return Ok(out);
    }
    MapSearch::new(g, g, colour.clone(), colour).run(|p| {
        out.push(p.to_vec());
        out.len() < limit
    });
    Ok(out)
}

/// An isomorphism `a → b` as an image list, if one exists.
pub fn find_isomorphism(a: &Graph, b: &Graph) -> Result<Option<Vec<usize>>, SwitchingError> {
    check_size(a)?;
    check_size(b)?;
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return Ok(None);
    }
    let n = a.n();
    // Refine the disjoint union so colours are comparable across the two graphs.
    let union = Graph::from_fn(2 * n, |x, y| {
        if x < n && y < n {
            a.has_edge(x, y)
        } else if x >= n && y >= n {
            b.has_edge(x - n, y - n)
        } else {
            false
        }
    })?;
    let colour = refine(&union);
    let (ca, cb) = colour.split_at(n);
    let mut sorted_a = ca.to_vec();
    let mut sorted_b = cb.to_vec();
    sorted_a.sort_unstable();
    sorted_b.sort_unstable();
    if sorted_a != sorted_b {
        return Ok(None);
    }
    let mut found = None;
    MapSearch::new(a, b, ca.to_vec(), cb.to_vec()).run(|p| {
        found = Some(p.to_vec());
        false
    });
    Ok(found)
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool, SwitchingError> {
    Ok(find_isomorphism(a, b)?.is_some())
}

/// A permutation of order exactly 2.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Involution {
    perm: Vec<usize>,
}

impl Involution {
    pub fn new(perm: Vec<usize>) -> Result<Self, SwitchingError> {
        crate::graph::check_permutation(&perm, perm.len())?;
        if (0..perm.len()).any(|i| perm[perm[i]] != i) {
            return Err(SwitchingError::NotInvolution("σ² ≠ id".into()));
        }
        if (0..perm.len()).all(|i| perm[i] == i) {
            return Err(SwitchingError::NotInvolution("identity".into()));
        }
        Ok(Involution { perm })
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn image(&self, v: usize) -> usize {
        self.perm[v]
    }

    pub fn fixed(&self) -> VertexSet {
        VertexSet::new((0..self.perm.len()).filter(|&i| self.perm[i] == i).collect(), self.perm.len())
            .expect("indices are in range")
    }

    /// Swapped pairs `(u, σ(u))` with `u < σ(u)`.
    pub fn moved_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.perm.len()).filter(|&i| self.perm[i] > i).map(|i| (i, self.perm[i])).collect()
    }

    pub fn is_automorphism_of(&self, g: &Graph) -> bool {
        self.perm.len() == g.n() && g.edges().all(|(u, w)| g.has_edge(self.perm[u], self.perm[w]))
    }

    /// Automorphism whose moved pairs are all non-edges.
    pub fn is_seidel_for(&self, g: &Graph) -> bool {
        self.is_automorphism_of(g) && self.moved_pairs().iter().all(|&(u, w)| !g.has_edge(u, w))
    }
}

pub fn seidel_automorphisms(g: &Graph) -> Result<Vec<Involution>, SwitchingError> {
    check_size(g)?;
    let mut out = Vec::new();
    SeidelSearch::new(g).run(|p| {
        if p.iter().enumerate().any(|(i, &x)| i != x) {
            out.push(Involution { perm: p.to_vec() });
        }
    });
    Ok(out)
}

/// The graph with adjacency matrix `PA`: row `i` of the result is row `σ(i)` of `A`.
pub fn dual_seidel_switch(g: &Graph, sigma: &Involution) -> Result<Graph, SwitchingError> {
    if sigma.perm.len() != g.n() {
        return Err(SwitchingError::NotSeidel(format!(
            "permutation of {} points on a graph of order {}",
            sigma.perm.len(),
            g.n()
        )));
    }
    if !sigma.is_automorphism_of(g) {
        return Err(SwitchingError::NotSeidel("not an automorphism".into()));
    }
    if let Some((u, w)) = sigma.moved_pairs().into_iter().find(|&(u, w)| g.has_edge(u, w)) {
        return Err(SwitchingError::NotSeidel(format!("swaps adjacent vertices {u} and {w}")));
    }
    let rows: Vec<Vec<u8>> =
        (0..g.n()).map(|i| (0..g.n()).map(|j| g.has_edge(sigma.image(i), j) as u8).collect()).collect();
    Ok(Graph::from_matrix(&rows)?)
}

/// One dual-Seidel-switched DDG from a `G[K₂]` source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwitchedDdg {
    pub graph: Graph,
    pub params: DdgParams,
    pub sigma: Involution,
    pub isomorphic_to_source: bool,
}

/// The source `Γ = G[K₂]` and its dual-Seidel-switched graphs up to isomorphism.
#[derive(Debug, Clone)]
pub struct Construction5 {
    pub source: Graph,
    pub params: DdgParams,
    pub seidel_count: usize,
    pub outputs: Vec<SwitchedDdg>,
}

/// Applies every Seidel automorphism of `srg[K₂]` and keeps one graph per isomorphism class.
pub fn construction5(srg: &Graph) -> Result<Construction5, SwitchingError> {
    let built = construction4(srg)?;
    let sigmas = seidel_automorphisms(&built.graph)?;
    let mut outputs: Vec<SwitchedDdg> = Vec::new();
    for sigma in &sigmas {
        let switched = dual_seidel_switch(&built.graph, sigma)?;
        let mut duplicate = false;
        for seen in &outputs {
            if is_isomorphic(&seen.graph, &switched)? {
                duplicate = true;
                break;
            }
        }
        if !duplicate {
            let isomorphic_to_source = is_isomorphic(&built.graph, &switched)?;
            outputs.push(SwitchedDdg {
                graph: switched,
                params: built.params,
                sigma: sigma.clone(),
                isomorphic_to_source,
            });
        }
    }
    Ok(Construction5 { source: built.graph, params: built.params, seidel_count: sigmas.len(), outputs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{lattice, petersen};

    #[test]
    fn small_groups() {
        assert_eq!(automorphisms(&Graph::complete(4).unwrap(), usize::MAX).unwrap().len(), 24);
        assert_eq!(automorphisms(&Graph::cycle(5).unwrap(), usize::MAX).unwrap().len(), 10);
        assert_eq!(automorphisms(&petersen(), usize::MAX).unwrap().len(), 120);
        assert_eq!(automorphisms(&petersen(), 7).unwrap().len(), 7);
        assert_eq!(automorphisms(&Graph::empty(65).unwrap(), 1).unwrap_err(), SwitchingError::TooLarge(65));
    }

    #[test]
    fn involution_validation() {
        assert!(matches!(Involution::new(vec![0, 1, 2]), Err(SwitchingError::NotInvolution(_))));
        assert!(matches!(Involution::new(vec![1, 2, 0]), Err(SwitchingError::NotInvolution(_))));
        let s = Involution::new(vec![2, 1, 0]).unwrap();
        assert_eq!(s.moved_pairs(), vec![(0, 2)]);
        assert_eq!(s.fixed().members(), &[1]);
    }

    #[test]
    fn switching_rejects_non_seidel() {
        // Reflection of P3 swaps the non-adjacent ends: Seidel.
        let p3 = Graph::path(3).unwrap();
        let s = Involution::new(vec![2, 1, 0]).unwrap();
        assert!(s.is_seidel_for(&p3));
        let switched = dual_seidel_switch(&p3, &s).unwrap();
        assert_eq!(switched, p3);
        // Swapping adjacent vertices of K2 is an automorphism but not Seidel.
        let k2 = Graph::complete(2).unwrap();
        let swap = Involution::new(vec![1, 0]).unwrap();
        assert!(matches!(dual_seidel_switch(&k2, &swap), Err(SwitchingError::NotSeidel(_))));
        // Not an automorphism of P4.
        let p4 = Graph::path(4).unwrap();
        let bad = Involution::new(vec![2, 1, 0, 3]).unwrap();
        assert!(matches!(dual_seidel_switch(&p4, &bad), Err(SwitchingError::NotSeidel(_))));
    }

    #[test]
    fn isomorphism_of_relabelled_graphs() {
        let g = lattice(3).unwrap();
        let perm = vec![4, 2, 7, 0, 8, 1, 3, 6, 5];
        let h = g.permute(&perm).unwrap();
        let iso = find_isomorphism(&g, &h).unwrap().unwrap();
        assert!(g.edges().all(|(u, w)| h.has_edge(iso[u], iso[w])));
        assert!(!is_isomorphic(
            &Graph::cycle(6).unwrap(),
            &Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap()
        )
        .unwrap());
    }
}
