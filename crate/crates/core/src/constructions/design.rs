use serde::{Deserialize, Serialize};

use super::{BuiltDdg, ConstructionError};
use crate::analysis::DdgParams;
use crate::graph::Graph;
use crate::linalg::IntMatrix;

/// A symmetric 2-`(v, k, λ)` design given by its `v × v` point–block incidence matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Design {
    incidence: Vec<Vec<u8>>,
    block_size: usize,
    lambda: usize,
}

fn bad(msg: impl Into<String>) -> ConstructionError {
    ConstructionError::NotSymmetricDesign(msg.into())
}

fn meet(a: &[u8], b: &[u8]) -> usize {
    a.iter().zip(b).filter(|(x, y)| **x == 1 && **y == 1).count()
}

impl Design {
    pub fn new(incidence: Vec<Vec<u8>>) -> Result<Self, ConstructionError> {
        let v = incidence.len();
        if v < 2 {
            return Err(bad("need at least two points"));
        }
        if let Some(i) = incidence.iter().position(|r| r.len() != v) {
            return Err(bad(format!("row {i} has {} entries, expected {v}", incidence[i].len())));
        }
        if incidence.iter().flatten().any(|&x| x > 1) {
            return Err(bad("entries must be 0 or 1"));
        }
        let columns: Vec<Vec<u8>> = (0..v).map(|j| incidence.iter().map(|r| r[j]).collect()).collect();
        let k = incidence[0].iter().filter(|&&x| x == 1).count();
        for (what, lines) in [("row", &incidence), ("column", &columns)] {
            if let Some(i) = lines.iter().position(|r| r.iter().filter(|&&x| x == 1).count() != k) {
                return Err(bad(format!("{what} {i} does not have sum {k}")));
            }
        }
        let lambda = meet(&columns[0], &columns[1]);
        for (what, lines) in [("blocks", &columns), ("points", &incidence)] {
            for i in 0..v {
                for j in i + 1..v {
                    let c = meet(&lines[i], &lines[j]);
                    if c != lambda {
                        return Err(bad(format!("{what} {i} and {j} meet in {c}, expected {lambda}")));
                    }
                }
            }
        }
        Ok(Design { incidence, block_size: k, lambda })
    }

    /// Parses `v k lambda` followed by `v` rows of 0/1 (separated by spaces or not).
    pub fn parse(text: &str) -> Result<Self, ConstructionError> {
        let parse_err = |m: String| ConstructionError::DesignParse(m);
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| parse_err("empty input".into()))?;
        let nums: Vec<usize> = header
            .split_whitespace()
            .map(|s| s.parse().map_err(|_| parse_err(format!("bad header field {s:?}"))))
            .collect::<Result<_, _>>()?;
        let [v, k, lambda] = nums[..] else {
            return Err(parse_err(format!("header must be `v k lambda`, got {header:?}")));
        };
        let mut rows = Vec::with_capacity(v);
        for (i, line) in lines.enumerate() {
            let row: Vec<u8> = line
                .chars()
                .filter(|c| !c.is_whitespace())
                .map(|c| match c {
                    '0' => Ok(0),
                    '1' => Ok(1),
                    other => Err(parse_err(format!("row {i}: unexpected character {other:?}"))),
                })
                .collect::<Result<_, _>>()?;
            rows.push(row);
        }
        if rows.len() != v {
            return Err(parse_err(format!("header declares {v} rows, found {}", rows.len())));
        }
        let d = Design::new(rows)?;
        if (d.block_size, d.lambda) != (k, lambda) {
            return Err(parse_err(format!(
                "header declares k = {k}, λ = {lambda}, incidence has k = {}, λ = {}",
                d.block_size, d.lambda
            )));
        }
        Ok(d)
    }

    /// The Fano plane 2-(7, 3, 1).
    pub fn fano() -> Self {
        const LINES: [[usize; 3]; 7] = [[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 5], [1, 4, 6], [2, 3, 6], [2, 4, 5]];
        let mut inc = vec![vec![0u8; 7]; 7];
        for (b, line) in LINES.iter().enumerate() {
            for &p in line {
                inc[p][b] = 1;
            }
        }
        Design::new(inc).expect("Fano plane is a symmetric design")
    }

    /// Blocks are the complements of single points: 2-(n, n − 1, n − 2).
    pub fn point_complements(n: usize) -> Result<Self, ConstructionError> {
        Design::new((0..n).map(|i| (0..n).map(|j| (i != j) as u8).collect()).collect())
    }

    /// Every block is the whole point set: 2-(n, n, n).
    pub fn complete(n: usize) -> Result<Self, ConstructionError> {
        Design::new(vec![vec![1; n]; n])
    }

    pub fn points(&self) -> usize {
        self.incidence.len()
    }

    pub fn blocks(&self) -> usize {
        self.incidence.len()
    }

    pub fn block_size(&self) -> usize {
        self.block_size
    }

    pub fn lambda(&self) -> usize {
        self.lambda
    }

    pub fn incidence(&self) -> IntMatrix {
        let v = self.points();
        IntMatrix::from_fn(v, v, |i, j| self.incidence[i][j] as i64)
    }

    pub fn is_incident(&self, point: usize, block: usize) -> bool {
        self.incidence[point][block] == 1
    }
}

/// Point–block incidence graph `[[O, N], [Nᵀ, O]]`: a DDG `(2v, k, λ, 0, 2, v)`.
pub fn construction1(d: &Design) -> Result<BuiltDdg, ConstructionError> {
    let (v, k) = (d.points(), d.block_size());
    if k <= 1 {
        return Err(ConstructionError::Precondition(format!("block size k = {k} must exceed 1")));
    }
    let graph = Graph::from_fn(2 * v, |i, j| i < v && j >= v && d.is_incident(i, j - v))?;
    let params = DdgParams::new(2 * v, k, d.lambda(), 0, 2, v)?;
    Ok(BuiltDdg { graph, params })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn built_in_designs() {
        let f = Design::fano();
        assert_eq!((f.points(), f.block_size(), f.lambda()), (7, 3, 1));
        let d = Design::point_complements(4).unwrap();
        assert_eq!((d.block_size(), d.lambda()), (3, 2));
        let c = Design::complete(5).unwrap();
        assert_eq!((c.block_size(), c.lambda()), (5, 5));
    }

    #[test]
    fn rejects_non_designs() {
        // Two blocks through points 0,1 but one through 0,2.
        let inc = vec![vec![1, 1, 0], vec![1, 1, 1], vec![0, 1, 1]];
        assert!(matches!(Design::new(inc), Err(ConstructionError::NotSymmetricDesign(_))));
        assert!(Design::new(vec![vec![1, 0], vec![0, 2]]).is_err());
    }

    #[test]
    fn parses_both_row_styles() {
        let text = "4 3 2\n0111\n1 0 1 1\n1101\n1110\n";
        assert_eq!(Design::parse(text).unwrap(), Design::point_complements(4).unwrap());
        assert!(matches!(Design::parse("4 3 1\n0111\n1011\n1101\n1110"), Err(ConstructionError::DesignParse(_))));
        assert!(matches!(Design::parse("4 3 2\n0111\n1011"), Err(ConstructionError::DesignParse(_))));
    }

    #[test]
    fn incidence_graph_is_bipartite_and_regular() {
        let built = construction1(&Design::fano()).unwrap();
        assert_eq!(built.graph.n(), 14);
        assert_eq!(built.graph.regularity(), Some(3));
        assert!(!built.graph.has_edge(0, 1) && !built.graph.has_edge(7, 8));
        assert!(matches!(
            construction1(&Design::point_complements(2).unwrap()),
            Err(ConstructionError::Precondition(_))
        ));
    }
}
