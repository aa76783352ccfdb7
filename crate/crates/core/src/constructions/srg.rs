use serde::{Deserialize, Serialize};

use super::ConstructionError;
use crate::graph::Graph;

/// Parameters `(v, k, λ, μ)` of a strongly regular graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SrgParams {
    pub v: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

/// SRG parameters read off the common-neighbour counts. Complete and empty
/// graphs are excluded, since one of `λ`, `μ` is then undefined.
pub fn srg_parameters(g: &Graph) -> Option<SrgParams> {
    let k = g.regularity()?;
    let (mut lambda, mut mu) = (None, None);
    let n = g.n();
    for u in 0..n {
        for w in u + 1..n {
            let c = g.common_neighbours(u, w);
            let slot = if g.has_edge(u, w) { &mut lambda } else { &mut mu };
            match *slot {
                None => *slot = Some(c),
                Some(x) if x != c => return None,
                _ => {}
            }
        }
    }
    Some(SrgParams { v: n, k, lambda: lambda?, mu: mu? })
}

/// `(v, k, λ)` when every pair of distinct vertices has exactly `λ` common neighbours.
pub fn vkl_parameters(g: &Graph) -> Option<(usize, usize, usize)> {
    let k = g.regularity()?;
    let n = g.n();
    let lambda = if n > 1 { g.common_neighbours(0, 1) } else { 0 };
    for u in 0..n {
        for w in u + 1..n {
            if g.common_neighbours(u, w) != lambda {
                return None;
            }
        }
    }
    Some((n, k, lambda))
}

fn is_prime(q: usize) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

/// Paley graph on `Z_q`, `q` prime with `q ≡ 1 (mod 4)`: `x ~ y` iff `x − y` is a nonzero square.
pub fn paley(q: usize) -> Result<Graph, ConstructionError> {
    if !is_prime(q) || q % 4 != 1 {
        return Err(ConstructionError::BadOrder { family: "paley", reason: format!("{q} is not a prime ≡ 1 mod 4") });
    }
    let mut square = vec![false; q];
    for x in 1..q {
        square[x * x % q] = true;
    }
    Ok(Graph::from_fn(q, |i, j| square[(j + q - i) % q])?.with_label(format!("paley({q})")))
}

fn need_at_least_two(family: &'static str, n: usize) -> Result<(), ConstructionError> {
    if n < 2 {
        return Err(ConstructionError::BadOrder { family, reason: format!("n = {n} < 2") });
    }
    Ok(())
}

/// `n × n` rook's graph `K_n □ K_n`: SRG `(n², 2(n − 1), n − 2, 2)`.
pub fn lattice(n: usize) -> Result<Graph, ConstructionError> {
    need_at_least_two("lattice", n)?;
    let g = Graph::from_fn(n * n, |a, b| a / n == b / n || a % n == b % n)?;
    Ok(g.with_label(format!("lattice({n})")))
}

pub fn lattice_complement(n: usize) -> Result<Graph, ConstructionError> {
    Ok(lattice(n)?.complement().with_label(format!("lattice_complement({n})")))
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
}

/// Line graph of `K_n` on lexicographically ordered pairs: SRG `(n(n−1)/2, 2(n − 2), n − 2, 4)`.
pub fn triangular(n: usize) -> Result<Graph, ConstructionError> {
    need_at_least_two("triangular", n)?;
    let p = pairs(n);
    let meet = |x: (usize, usize), y: (usize, usize)| x.0 == y.0 || x.0 == y.1 || x.1 == y.0 || x.1 == y.1;
    Ok(Graph::from_fn(p.len(), |i, j| meet(p[i], p[j]))?.with_label(format!("triangular({n})")))
}

/// Kneser graph `K(5, 2)`: SRG `(10, 3, 0, 1)`.
pub fn petersen() -> Graph {
    let p = pairs(5);
    let disjoint = |x: (usize, usize), y: (usize, usize)| x.0 != y.0 && x.0 != y.1 && x.1 != y.0 && x.1 != y.1;
    Graph::from_fn(10, |i, j| disjoint(p[i], p[j])).expect("10 vertices").with_label("petersen")
}

pub const SRG_NAMES: &[&str] = &["paley(q)", "lattice(n)", "lattice_complement(n)", "triangular(n)", "petersen"];

/// Looks up a corpus graph by a name such as `paley(13)` or `petersen`.
pub fn srg_by_name(name: &str) -> Result<Graph, ConstructionError> {
    let unknown = || ConstructionError::UnknownName(name.to_string());
    let name = name.trim();
    if name == "petersen" || name == "petersen()" {
        return Ok(petersen());
    }
    let (family, rest) = name.split_once('(').ok_or_else(unknown)?;
    let arg: usize = rest.strip_suffix(')').and_then(|s| s.trim().parse().ok()).ok_or_else(unknown)?;
    match family.trim() {
        "paley" => paley(arg),
        "lattice" => lattice(arg),
        "lattice_complement" => lattice_complement(arg),
        "triangular" => triangular(arg),
        _ => Err(unknown()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn srg(v: usize, k: usize, lambda: usize, mu: usize) -> Option<SrgParams> {
        Some(SrgParams { v, k, lambda, mu })
    }

    #[test]
    fn corpus_parameters() {
        assert_eq!(srg_parameters(&paley(13).unwrap()), srg(13, 6, 2, 3));
        assert_eq!(srg_parameters(&paley(17).unwrap()), srg(17, 8, 3, 4));
        assert_eq!(srg_parameters(&lattice(3).unwrap()), srg(9, 4, 1, 2));
        assert_eq!(srg_parameters(&lattice(4).unwrap()), srg(16, 6, 2, 2));
        assert_eq!(srg_parameters(&lattice_complement(4).unwrap()), srg(16, 9, 4, 6));
        assert_eq!(srg_parameters(&triangular(5).unwrap()), srg(10, 6, 3, 4));
        assert_eq!(srg_parameters(&petersen()), srg(10, 3, 0, 1));
        assert_eq!(srg_parameters(&Graph::cycle(5).unwrap()), srg(5, 2, 0, 1));
        assert_eq!(srg_parameters(&Graph::complete(5).unwrap()), None);
        assert_eq!(srg_parameters(&Graph::cycle(6).unwrap()), None);
    }

    #[test]
    fn bad_orders() {
        for q in [4, 7, 9, 15, 1] {
            assert!(matches!(paley(q), Err(ConstructionError::BadOrder { .. })), "q = {q}");
        }
        assert!(matches!(lattice(1), Err(ConstructionError::BadOrder { .. })));
        assert!(matches!(triangular(0), Err(ConstructionError::BadOrder { .. })));
    }

    #[test]
    fn vkl_graphs() {
        assert_eq!(vkl_parameters(&Graph::complete(4).unwrap()), Some((4, 3, 2)));
        assert_eq!(vkl_parameters(&Graph::empty(3).unwrap()), Some((3, 0, 0)));
        assert_eq!(vkl_parameters(&Graph::cycle(5).unwrap()), None);
        assert_eq!(vkl_parameters(&petersen()), None);
    }

    #[test]
    fn names() {
        assert_eq!(srg_by_name("paley(13)").unwrap(), paley(13).unwrap());
        assert_eq!(srg_by_name("petersen").unwrap(), petersen());
        assert_eq!(srg_by_name("lattice_complement(3)").unwrap(), lattice_complement(3).unwrap());
        assert!(matches!(srg_by_name("clebsch"), Err(ConstructionError::UnknownName(_))));
    }
}
