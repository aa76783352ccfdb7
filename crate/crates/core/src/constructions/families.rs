use super::srg::{srg_parameters, vkl_parameters};
use super::{BuiltDdg, ConstructionError};
use crate::analysis::DdgParams;
use crate::graph::{lexicographic_product, Graph};

/// `A′ ⊗ J_n` for a connected `(m, k′, λ′)`-graph: DDG `(mn, nk′, nk′, nλ′, m, n)`.
/// Vertex `(i, a)` is numbered `i·n + a`.
pub fn construction2(gp: &Graph, n: usize) -> Result<BuiltDdg, ConstructionError> {
    let (m, k, lambda) = vkl_parameters(gp).ok_or(ConstructionError::NotVklGraph)?;
    if !gp.is_connected() {
        return Err(ConstructionError::Disconnected);
    }
    if k <= 1 || k >= m {
        return Err(ConstructionError::Precondition(format!("need 1 < k′ < m, got k′ = {k}, m = {m}")));
    }
    if n <= 1 {
        return Err(ConstructionError::Precondition(format!("need n > 1, got {n}")));
    }
    let graph = Graph::from_fn(m.checked_mul(n).ok_or(ConstructionError::SizeOverflow(usize::MAX))?, |a, b| {
        gp.has_edge(a / n, b / n)
    })?;
    let params = DdgParams::new(m * n, n * k, n * k, n * lambda, m, n)?;
    Ok(BuiltDdg { graph, params })
}

/// `J − K + diag(A_1, …, A_m)` for `m ≥ 2` equal-parameter `(n, k′, λ′)`-graphs:
/// DDG `(mn, k′ + n(m−1), λ′ + n(m−1), 2k − v, m, n)`.
pub fn construction3(ingredients: &[Graph]) -> Result<BuiltDdg, ConstructionError> {
    let m = ingredients.len();
    if m < 2 {
        return Err(ConstructionError::Precondition(format!("need at least two ingredients, got {m}")));
    }
    let first = vkl_parameters(&ingredients[0]).ok_or(ConstructionError::NotVklGraph)?;
    for g in &ingredients[1..] {
        let p = vkl_parameters(g).ok_or(ConstructionError::NotVklGraph)?;
        if p != first {
            return Err(ConstructionError::ParameterMismatch(first, p));
        }
    }
    let (n, k1, lambda1) = first;
    if k1 + 2 > n {
        return Err(ConstructionError::Precondition(format!("need k′ ≤ n − 2, got k′ = {k1}, n = {n}")));
    }
    let v = m.checked_mul(n).ok_or(ConstructionError::SizeOverflow(usize::MAX))?;
    let graph = Graph::from_fn(v, |a, b| a / n != b / n || ingredients[a / n].has_edge(a % n, b % n))?;
    let k = k1 + n * (m - 1);
    let params = DdgParams::new(v, k, lambda1 + n * (m - 1), 2 * k - v, m, n)?;
    Ok(BuiltDdg { graph, params })
}

/// `G[K₂]` for an SRG `(v′, k′, λ, λ + 1)`: DDG `(2v′, 2k′ + 1, 2k′, 2λ + 2, v′, 2)`.
pub fn construction4(srg: &Graph) -> Result<BuiltDdg, ConstructionError> {
    let p = srg_parameters(srg).ok_or(ConstructionError::NotSrgMuLambdaPlusOne)?;
    if p.mu != p.lambda + 1 {
        return Err(ConstructionError::NotSrgMuLambdaPlusOne);
    }
    let graph = lexicographic_product(srg, &Graph::complete(2)?)?;
    let params = DdgParams::new(2 * p.v, 2 * p.k + 1, 2 * p.k, 2 * p.lambda + 2, p.v, 2)?;
    Ok(BuiltDdg { graph, params })
}
