//! Exact vertex connectivity with checkable certificates.
//!
//! Every reported cut is re-verified by a reachability check on the graph with
//! the cut removed, and every `s`–`t` flow is decoded into internally disjoint
//! paths whose number must equal the cut size.

mod flow;
mod spectral;

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexSet};
use flow::{SplitNetwork, StFlow};

pub use spectral::{gamma_connectivity_bound_check, neighbourhood_certificate, GammaBoundReport, NeighbourhoodOutcome};

/// Largest order accepted by the exhaustive oracle.
pub const BRUTE_FORCE_MAX: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConnectivityError {
    #[error("vertices {0} and {1} are adjacent; no vertex cut separates them")]
    AdjacentEndpoints(usize, usize),
    #[error("endpoints must be distinct, got {0} twice")]
    SameEndpoints(usize),
    #[error("{0} vertices exceed the brute-force cap of {BRUTE_FORCE_MAX}")]
    TooLarge(usize),
    #[error("graph is not regular")]
    NotRegular,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is complete")]
    Complete,
    #[error("base graph of the lexicographic product is complete")]
    CompleteBase,
    #[error("base graph of the lexicographic product is disconnected")]
    DisconnectedBase,
    #[error("b = {given} is below the largest common-neighbour count {actual}")]
    BoundBelowActual { given: usize, actual: usize },
    #[error("certificate failed verification: {0}")]
    BadCertificate(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A vertex cut with the two vertex sets it separates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutCertificate {
    pub cut: VertexSet,
    pub side_a: VertexSet,
    pub side_b: VertexSet,
}

impl CutCertificate {
    pub fn kappa(&self) -> usize {
        self.cut.len()
    }

    /// Builds the certificate for `cut`, taking `side_a` to be the component of `anchor`.
    fn from_cut(g: &Graph, cut: Vec<usize>, anchor: usize) -> Result<Self, ConnectivityError> {
        let cut = VertexSet::new(cut, g.n())?;
        let mut removed = vec![false; g.n()];
        for v in &cut {
            removed[v] = true;
        }
        let dist = g.bfs_distances(anchor, Some(&removed));
        let side_a: Vec<usize> = (0..g.n()).filter(|&v| dist[v].is_some()).collect();
        let side_b: Vec<usize> = (0..g.n()).filter(|&v| !removed[v] && dist[v].is_none()).collect();
        let cert =
            CutCertificate { cut, side_a: VertexSet::new(side_a, g.n())?, side_b: VertexSet::new(side_b, g.n())? };
        cert.verify(g)?;
        Ok(cert)
    }

    /// Checks the partition of `V` and that no edge joins the two sides.
    pub fn verify(&self, g: &Graph) -> Result<(), ConnectivityError> {
        let bad = |m: String| Err(ConnectivityError::BadCertificate(m));
        if self.side_a.is_empty() || self.side_b.is_empty() {
            return bad("a side is empty".into());
        }
        let mut owner = vec![0u8; g.n()];
        for (tag, set) in [(1, &self.cut), (2, &self.side_a), (3, &self.side_b)] {
            for v in set {
                if v >= g.n() || owner[v] != 0 {
                    return bad(format!("vertex {v} is listed twice or out of range"));
                }
                owner[v] = tag;
            }
        }
        if let Some(v) = owner.iter().position(|&o| o == 0) {
            return bad(format!("vertex {v} is in no part"));
        }
        for a in &self.side_a {
            if let Some(b) = g.neighbours(a).find(|&b| owner[b] == 3) {
                return bad(format!("edge {a}–{b} crosses the cut"));
            }
        }
        Ok(())
    }
}

/// Internally disjoint paths between two vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathSystem {
    pub source: usize,
    pub target: usize,
    pub paths: Vec<Vec<usize>>,
}

impl PathSystem {
    pub fn verify(&self, g: &Graph) -> Result<(), ConnectivityError> {
        let bad = |m: String| Err(ConnectivityError::BadCertificate(m));
        let mut used = vec![false; g.n()];
        for p in &self.paths {
            if p.first() != Some(&self.source) || p.last() != Some(&self.target) {
                return bad(format!("path {p:?} has wrong endpoints"));
            }
            if let Some(w) = p.windows(2).find(|w| !g.has_edge(w[0], w[1])) {
                return bad(format!("path {p:?} uses non-edge {}–{}", w[0], w[1]));
            }
            for &v in &p[1..p.len() - 1] {
                if std::mem::replace(&mut used[v], true) || v == self.source || v == self.target {
                    return bad(format!("internal vertex {v} is reused"));
                }
            }
        }
        Ok(())
    }
}

/// A minimum `s`–`t` vertex cut together with a maximum path system.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StCut {
    pub size: usize,
    pub certificate: CutCertificate,
    pub paths: PathSystem,
}

fn st_cut_on(g: &Graph, net: &SplitNetwork, s: usize, t: usize) -> Result<StCut, ConnectivityError> {
    let mut flow = StFlow::new(net, s, t);
    let size = flow.run(usize::MAX);
    let certificate = CutCertificate::from_cut(g, flow.min_cut(), s)?;
    let paths = PathSystem { source: s, target: t, paths: flow.paths() };
    paths.verify(g)?;
    if certificate.kappa() != size || paths.paths.len() != size || !certificate.side_b.contains(t) {
        return Err(ConnectivityError::BadCertificate(format!(
            "flow {size}, cut {}, paths {}",
            certificate.kappa(),
            paths.paths.len()
        )));
    }
    Ok(StCut { size, certificate, paths })
}

/// Minimum vertex cut between non-adjacent `s` and `t` (Menger: equals the
/// maximum number of internally disjoint `s`–`t` paths).
pub fn min_vertex_cut_st(g: &Graph, s: usize, t: usize) -> Result<StCut, ConnectivityError> {
    g.check_vertex(s)?;
    g.check_vertex(t)?;
    if s == t {
        return Err(ConnectivityError::SameEndpoints(s));
    }
    if g.has_edge(s, t) {
        return Err(ConnectivityError::AdjacentEndpoints(s, t));
    }
    st_cut_on(g, &SplitNetwork::new(g), s, t)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    MaxFlow,
    BruteForce,
    Certificate,
    Lexicographic,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Witness {
    /// `K_n`: no vertex cut exists and `κ = n − 1` by convention.
    Complete,
    Cut(CutCertificate),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Connectivity {
    pub kappa: usize,
    pub witness: Witness,
    /// The `s`–`t` pair whose flow realised the minimum, with its paths.
    pub paths: Option<PathSystem>,
}

/// Flat JSON form `{kappa, cut, sides, method}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KappaReport {
    pub kappa: usize,
    pub cut: Vec<usize>,
    pub sides: Vec<Vec<usize>>,
    pub method: Method,
}

impl Connectivity {
    pub fn certificate(&self) -> Option<&CutCertificate> {
        match &self.witness {
            Witness::Cut(c) => Some(c),
            Witness::Complete => None,
        }
    }

    pub fn report(&self, method: Method) -> KappaReport {
        match &self.witness {
            Witness::Complete => KappaReport { kappa: self.kappa, cut: vec![], sides: vec![], method },
            Witness::Cut(c) => KappaReport {
                kappa: self.kappa,
                cut: c.cut.members().to_vec(),
                sides: vec![c.side_a.members().to_vec(), c.side_b.members().to_vec()],
                method,
            },
        }
    }
}

/// Pairs whose flows determine `κ`: with `s` of minimum degree, every `t` not
/// adjacent to `s`, and every non-adjacent pair of neighbours of `s`.
fn reduction_pairs(g: &Graph) -> Vec<(usize, usize)> {
    let s = (0..g.n()).min_by_key(|&v| g.degree(v)).expect("nonempty graph");
    let mut pairs: Vec<(usize, usize)> = (0..g.n()).filter(|&t| t != s && !g.has_edge(s, t)).map(|t| (s, t)).collect();
    let nbrs: Vec<usize> = g.neighbours(s).collect();
    for (i, &x) in nbrs.iter().enumerate() {
        pairs.extend(nbrs[i + 1..].iter().filter(|&&y| !g.has_edge(x, y)).map(|&y| (x, y)));
    }
    pairs
}

/// Vertex connectivity by max-flow over the classical pair reduction.
pub fn vertex_connectivity(g: &Graph) -> Result<Connectivity, ConnectivityError> {
    let n = g.n();
    if g.is_complete() {
        return Ok(Connectivity { kappa: n - 1, witness: Witness::Complete, paths: None });
    }
    if !g.is_connected() {
        let comps = g.connected_components();
        let certificate = CutCertificate {
            cut: VertexSet::default(),
            side_a: comps[0].clone(),
            side_b: VertexSet::new(comps[1..].iter().flat_map(|c| c.iter()).collect(), n)?,
        };
        certificate.verify(g)?;
        return Ok(Connectivity { kappa: 0, witness: Witness::Cut(certificate), paths: None });
    }
    let net = SplitNetwork::new(g);
    let pairs = reduction_pairs(g);
    let min_degree = (0..n).map(|v| g.degree(v)).min().unwrap_or(0);
    let best = AtomicUsize::new(min_degree);
    // Flows stop once they exceed the best value so far; every pair whose value
    // ties the final minimum is still computed exactly, so the choice below
    // does not depend on scheduling.
    let (value, index) = pairs
        .par_iter()
        .enumerate()
        .filter_map(|(i, &(s, t))| {
            let limit = best.load(Ordering::Relaxed) + 1;
            let value = StFlow::new(&net, s, t).run(limit);
            (value < limit).then(|| {
                best.fetch_min(value, Ordering::Relaxed);
                (value, i)
            })
        })
        .min()
        .expect("some pair attains the connectivity");
    let (s, t) = pairs[index];
    let st = st_cut_on(g, &net, s, t)?;
    debug_assert_eq!(st.size, value);
    Ok(Connectivity { kappa: value, witness: Witness::Cut(st.certificate), paths: Some(st.paths) })
}

/// Smallest vertex set whose removal leaves a disconnected graph, by exhaustive search.
pub fn vertex_connectivity_bruteforce(g: &Graph) -> Result<usize, ConnectivityError> {
    let n = g.n();
    if n > BRUTE_FORCE_MAX {
        return Err(ConnectivityError::TooLarge(n));
    }
    let mut best = n - 1;
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size >= best || size + 2 > n {
            continue;
        }
        let removed: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 1).collect();
        if g.components_avoiding(&removed).len() > 1 {
            best = size;
        }
    }
    Ok(best)
}

/// `κ(G1[G2]) = κ(G1)·|V(G2)|` for connected, non-complete `G1`.
pub fn connectivity_via_lexicographic(g1: &Graph, g2: &Graph) -> Result<usize, ConnectivityError> {
    if g1.is_complete() {
        return Err(ConnectivityError::CompleteBase);
    }
    if !g1.is_connected() {
        return Err(ConnectivityError::DisconnectedBase);
    }
    Ok(vertex_connectivity(g1)?.kappa * g2.n())
}
