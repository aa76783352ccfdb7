use serde::{Deserialize, Serialize};

use super::{vertex_connectivity, ConnectivityError, CutCertificate};
use crate::analysis::Eigenvalue;
use crate::constructions::{gamma_family, ConstructionError};
use crate::graph::Graph;

/// Result of the neighbourhood test for a connected `k`-regular graph whose
/// pairs share at most `b` neighbours and whose second eigenvalue is `q`.
///
/// If a minimum vertex cut is not a vertex neighbourhood, some pair on one side
/// shares at least `2(k − q) − |S|` neighbours inside the cut `S`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NeighbourhoodOutcome {
    /// `k − 2q > b`: every minimum cut is a neighbourhood, so `κ = k`.
    Certified,
    /// `k − 2q ≤ b < k − 2q + 1`: a cut with `|S| ≤ k − 1` would force
    /// `b ≥ k − 2q + 1`, so again `κ = k`.
    CertifiedIntegral,
    /// No conclusion.
    Inconclusive,
}

impl NeighbourhoodOutcome {
    pub fn certifies_kappa_equals_k(self) -> bool {
        self != NeighbourhoodOutcome::Inconclusive
    }
}

/// Exact test of `x > 2q` with `q = sign·√square`.
fn exceeds_twice(x: i64, q: Eigenvalue) -> bool {
    let x = x as i128;
    let four_q2 = 4 * q.square as i128;
    match q.sign {
        s if s > 0 => x > 0 && x * x > four_q2,
        0 => x > 0,
        _ => x >= 0 || x * x < four_q2,
    }
}

pub fn neighbourhood_certificate(
    g: &Graph,
    b: usize,
    q: Eigenvalue,
) -> Result<NeighbourhoodOutcome, ConnectivityError> {
    let k = g.regularity().ok_or(ConnectivityError::NotRegular)?;
    if !g.is_connected() {
        return Err(ConnectivityError::Disconnected);
    }
    if g.is_complete() {
        return Err(ConnectivityError::Complete);
    }
    let actual = (0..g.n())
        .flat_map(|u| (u + 1..g.n()).map(move |w| (u, w)))
        .map(|(u, w)| g.common_neighbours(u, w))
        .max()
        .unwrap_or(0);
    if b < actual {
        return Err(ConnectivityError::BoundBelowActual { given: b, actual });
    }
    let x = k as i64 - b as i64;
    Ok(if exceeds_twice(x, q) {
        NeighbourhoodOutcome::Certified
    } else if exceeds_twice(x + 1, q) {
        NeighbourhoodOutcome::CertifiedIntegral
    } else {
        NeighbourhoodOutcome::Inconclusive
    })
}

/// The ingredients of `κ(Γ^t) = 2·4^t`: the connectivities of the two halves,
/// the three sufficient conditions on them with `ℓ = 2^t`, and the cut formed
/// by the middle `2·4^t` vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaBoundReport {
    pub t: usize,
    pub l: usize,
    pub kappa_gamma1: usize,
    pub kappa_gamma2: usize,
    /// `κ(Γ₁) ≥ ℓ²`
    pub gamma1_at_least_l2: bool,
    /// `κ(Γ₂) ≥ ℓ² − ℓ`
    pub gamma2_at_least_l2_minus_l: bool,
    /// `κ(Γ₁) + κ(Γ₂) ≥ 2ℓ²`
    pub sum_at_least_2l2: bool,
    pub middle_cut: CutCertificate,
    pub components_after_middle_removal: usize,
    /// `κ(Γ^t)` computed directly, when requested.
    pub kappa_direct: Option<usize>,
}

impl GammaBoundReport {
    pub fn hypotheses_hold(&self) -> bool {
        self.gamma1_at_least_l2 && self.gamma2_at_least_l2_minus_l && self.sum_at_least_2l2
    }

    pub fn expected_kappa(&self) -> usize {
        2 * self.l * self.l
    }

    pub fn consistent(&self) -> bool {
        self.hypotheses_hold()
            && self.middle_cut.kappa() == self.expected_kappa()
            && self.components_after_middle_removal == 2
            && self.kappa_direct.is_none_or(|k| k == self.expected_kappa())
    }
}

#[derive(Debug, thiserror::Error)]
pub enum GammaCheckError {
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Connectivity(#[from] ConnectivityError),
}

pub fn gamma_connectivity_bound_check(t: usize, direct: bool) -> Result<GammaBoundReport, GammaCheckError> {
    if !(1..=3).contains(&t) {
        return Err(ConstructionError::Precondition(format!("bound check covers 1 ≤ t ≤ 3, got {t}")).into());
    }
    let fam = gamma_family(t)?;
    let l = 1usize << t;
    let l2 = l * l;
    let kappa_gamma1 = vertex_connectivity(&fam.gamma1.graph)?.kappa;
    let kappa_gamma2 = vertex_connectivity(&fam.gamma2.graph)?.kappa;
    let g = &fam.gamma.graph;
    let middle: Vec<usize> = (2 * l2..4 * l2).collect();
    let mut removed = vec![false; g.n()];
    for &v in &middle {
        removed[v] = true;
    }
    let components_after_middle_removal = g.components_avoiding(&removed).len();
    let middle_cut = CutCertificate::from_cut(g, middle, 0)?;
    let kappa_direct = if direct { Some(vertex_connectivity(g)?.kappa) } else { None };
    Ok(GammaBoundReport {
        t,
        l,
        kappa_gamma1,
        kappa_gamma2,
        gamma1_at_least_l2: kappa_gamma1 >= l2,
        gamma2_at_least_l2_minus_l: kappa_gamma2 + l >= l2,
        sum_at_least_2l2: kappa_gamma1 + kappa_gamma2 >= 2 * l2,
        middle_cut,
        components_after_middle_removal,
        kappa_direct,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_comparison() {
        // 3 > 2·√2 but 2 < 2·√2.
        assert!(exceeds_twice(3, Eigenvalue::sqrt(2, false)));
        assert!(!exceeds_twice(2, Eigenvalue::sqrt(2, false)));
        assert!(!exceeds_twice(4, Eigenvalue::int(2)));
        assert!(exceeds_twice(0, Eigenvalue::int(-1)));
        assert!(!exceeds_twice(0, Eigenvalue::int(0)));
        assert!(exceeds_twice(-1, Eigenvalue::int(-1)));
        assert!(!exceeds_twice(-3, Eigenvalue::int(-1)));
    }

    #[test]
    fn petersen_is_certified() {
        // k = 3, b = 1, q = 1: 3 − 2 > 1 fails, 3 − 2 + 1 > 1 holds.
        let g = crate::constructions::petersen();
        assert_eq!(
            neighbourhood_certificate(&g, 1, Eigenvalue::int(1)).unwrap(),
            NeighbourhoodOutcome::CertifiedIntegral
        );
        assert_eq!(
            neighbourhood_certificate(&g, 0, Eigenvalue::int(1)).unwrap_err(),
            ConnectivityError::BoundBelowActual { given: 0, actual: 1 }
        );
    }

    #[test]
    fn large_q_is_inconclusive() {
        let c6 = Graph::cycle(6).unwrap();
        assert_eq!(neighbourhood_certificate(&c6, 2, Eigenvalue::int(1)).unwrap(), NeighbourhoodOutcome::Inconclusive);
        assert_eq!(
            neighbourhood_certificate(&Graph::path(3).unwrap(), 1, Eigenvalue::int(1)).unwrap_err(),
            ConnectivityError::NotRegular
        );
    }

    #[test]
    fn gamma_one_bounds() {
        let r = gamma_connectivity_bound_check(1, true).unwrap();
        assert_eq!((r.kappa_gamma1, r.kappa_gamma2, r.kappa_direct), (6, 4, Some(8)));
        assert!(r.consistent());
        assert_eq!(r.middle_cut.side_a.len(), 8);
    }
}
