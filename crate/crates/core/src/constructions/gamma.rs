//! The recursive family `Γ^t` on `6·4^t` vertices, built from symbolic block
//! matrices over `{D, I, O}` with `D = J₄ − I₄`, `I = I₄`, `O = O₄`.
//!
//! One expansion step replaces every `D` by the `4 × 4` block pattern that has
//! `D` everywhere except `I` on the back-diagonal, every `I` by the opposite
//! pattern, and `O` by zeros.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::hadamard::{construction6, hadamard_tower};
use super::{BuiltDdg, ConstructionError};
use crate::analysis::DdgParams;
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Symbol {
    D,
    I,
    O,
}

impl Symbol {
    /// Entry `(a, b)` of the 4 × 4 atom this symbol stands for.
    fn atom(self, a: usize, b: usize) -> bool {
        match self {
            Symbol::D => a != b,
            Symbol::I => a == b,
            Symbol::O => false,
        }
    }

    fn opposite(self) -> Symbol {
        match self {
            Symbol::D => Symbol::I,
            Symbol::I => Symbol::D,
            Symbol::O => Symbol::O,
        }
    }
}

/// A square block matrix over `{D, I, O}`; each row is a block-row word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SymbolMatrix {
    order: usize,
    cells: Vec<Symbol>,
}

impl SymbolMatrix {
    pub fn from_rows(rows: &[&[Symbol]]) -> Self {
        let order = rows.len();
        assert!(rows.iter().all(|r| r.len() == order), "symbol matrix must be square");
        SymbolMatrix { order, cells: rows.concat() }
    }

    /// The `6 × 6` block matrix of `Γ^1`.
    pub fn gamma_seed() -> Self {
        use Symbol::{D, I, O};
        SymbolMatrix::from_rows(&[
            &[D, D, D, I, O, O],
            &[D, D, I, D, O, O],
            &[D, I, O, O, D, D],
            &[I, D, O, O, D, D],
            &[O, O, D, D, D, I],
            &[O, O, D, D, I, D],
        ])
    }

    /// `[[D, D], [D, D]]`, the block matrix of `Γ₁^1`.
    pub fn gamma1_seed() -> Self {
        SymbolMatrix::from_rows(&[&[Symbol::D, Symbol::D], &[Symbol::D, Symbol::D]])
    }

    /// `[[D, I], [I, D]]`, the block matrix of `Γ₂^1`.
    pub fn gamma2_seed() -> Self {
        SymbolMatrix::from_rows(&[&[Symbol::D, Symbol::I], &[Symbol::I, Symbol::D]])
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> Symbol {
        self.cells[i * self.order + j]
    }

    pub fn row(&self, i: usize) -> &[Symbol] {
        &self.cells[i * self.order..(i + 1) * self.order]
    }

    /// One replacement step: block `(P, Q)` becomes blocks `(4P + a, 4Q + b)`.
    pub fn expand(&self) -> Self {
        let order = 4 * self.order;
        let mut cells = Vec::with_capacity(order * order);
        for r in 0..order {
            for c in 0..order {
                let s = self.get(r / 4, c / 4);
                let on_back_diagonal = r % 4 + c % 4 == 3;
                cells.push(if on_back_diagonal { s.opposite() } else { s });
            }
        }
        SymbolMatrix { order, cells }
    }

    pub fn expand_times(&self, times: usize) -> Self {
        (0..times).fold(self.clone(), |m, _| m.expand())
    }

    /// Leading principal block submatrix of the given order.
    pub fn leading(&self, order: usize) -> Self {
        let cells = (0..order).flat_map(|i| self.row(i)[..order].iter().copied()).collect();
        SymbolMatrix { order, cells }
    }

    /// Trailing principal block submatrix of the given order.
    pub fn trailing(&self, order: usize) -> Self {
        let start = self.order - order;
        let cells = (start..self.order).flat_map(|i| self.row(i)[start..].iter().copied()).collect();
        SymbolMatrix { order, cells }
    }

    /// The graph with vertex `4P + a` for atom index `a` of block-row `P`.
    pub fn to_graph(&self) -> Result<Graph, ConstructionError> {
        Ok(Graph::from_fn(4 * self.order, |x, y| self.get(x / 4, y / 4).atom(x % 4, y % 4))?)
    }
}

fn pow4(e: usize) -> usize {
    1 << (2 * e)
}

/// `Γ^t` and its two halves.
#[derive(Debug, Clone)]
pub struct GammaFamily {
    pub t: usize,
    pub gamma: BuiltDdg,
    /// First `2·4^t` vertices.
    pub gamma1: BuiltDdg,
    /// Last `2·4^t` vertices.
    pub gamma2: BuiltDdg,
}

/// Relabelling that carries `construction6(H_t)` onto the block-expansion order.
///
/// Inside each `4^t` block, the tower index reads base-4 digits as
/// (`H` digit, `H′` digits…), while expansion places the `H` digit last.
fn expansion_order(t: usize) -> Vec<usize> {
    let b = pow4(t);
    let rest = pow4(t - 1);
    (0..6 * b)
        .map(|v| {
            let (block, x) = (v / b, v % b);
            block * b + (x % rest) * 4 + x / rest
        })
        .collect()
}

/// Builds `Γ^t` by block expansion and by `construction6(hadamard_tower(t))`,
/// and fails unless the two agree exactly after relabelling.
pub fn gamma_family(t: usize) -> Result<GammaFamily, ConstructionError> {
    if !(1..=5).contains(&t) {
        return Err(ConstructionError::Precondition(format!("Γ^t needs 1 ≤ t ≤ 5, got {t}")));
    }
    let symbolic = SymbolMatrix::gamma_seed().expand_times(t - 1);
    let expanded = symbolic.to_graph()?;
    let via_hadamard = construction6(&hadamard_tower(t)?)?;
    if via_hadamard.graph.permute(&expansion_order(t))? != expanded {
        return Err(ConstructionError::CrossCheckMismatch(t));
    }
    let half = 2 * pow4(t);
    let (l, l2) = (1 << t, pow4(t));
    let gamma1 = BuiltDdg {
        graph: expanded.induced_subgraph(&VertexSet::range(0..half))?,
        params: DdgParams::new(half, l2 + l, l2 + l, 2 * (pow4(t - 1) + (l >> 1)), l2, 2)?,
    };
    let gamma2 = BuiltDdg {
        graph: expanded.induced_subgraph(&VertexSet::range(expanded.n() - half..expanded.n()))?,
        params: DdgParams::new(half, l2, 0, 2 * pow4(t - 1), l2, 2)?,
    };
    let gamma = BuiltDdg { graph: expanded.with_label(format!("gamma({t})")), params: via_hadamard.params };
    Ok(GammaFamily { t, gamma, gamma1, gamma2 })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RowRelation {
    /// Identical block-rows.
    Equal,
    /// Block-rows related by `D ↔ I`.
    Opposite,
    Other,
}

/// Counts of aligned block pairs `(row x, row y)` by symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PairCounts {
    pub dd: usize,
    pub ii: usize,
    pub di: usize,
    pub id: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowCountClass {
    pub d: usize,
    pub i: usize,
    pub rows: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairCountClass {
    pub relation: RowRelation,
    pub counts: PairCounts,
    pub pairs: usize,
}

/// Distinct per-row and per-row-pair counts of one `{D, I}` block matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixCensus {
    pub block_rows: usize,
    pub row_counts: Vec<RowCountClass>,
    pub pair_counts: Vec<PairCountClass>,
}

impl MatrixCensus {
    fn of(m: &SymbolMatrix) -> Self {
        assert!(!m.cells.contains(&Symbol::O), "census expects a {{D, I}} matrix");
        let n = m.order();
        let words = n.div_ceil(64);
        let rows: Vec<Vec<u64>> = (0..n)
            .map(|i| {
                let mut w = vec![0u64; words];
                for (j, s) in m.row(i).iter().enumerate() {
                    if *s == Symbol::D {
                        w[j / 64] |= 1 << (j % 64);
                    }
                }
                w
            })
            .collect();
        let ones = |w: &[u64]| w.iter().map(|x| x.count_ones() as usize).sum::<usize>();

        let mut row_counts: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for r in &rows {
            let d = ones(r);
            *row_counts.entry((d, n - d)).or_default() += 1;
        }

        let weight: Vec<usize> = rows.iter().map(|r| ones(r)).collect();
        // Only a handful of distinct keys occur, so a linear list beats a map.
        type Tally = Vec<((RowRelation, PairCounts), usize)>;
        fn bump(acc: &mut Tally, key: (RowRelation, PairCounts), by: usize) {
            match acc.iter_mut().find(|(k, _)| *k == key) {
                Some((_, c)) => *c += by,
                None => acc.push((key, by)),
            }
        }
        let tally: Tally = (0..n)
            .into_par_iter()
            .fold(Vec::new, |mut acc: Tally, x| {
                for y in x + 1..n {
                    let dd: usize = rows[x].iter().zip(&rows[y]).map(|(a, b)| (a & b).count_ones() as usize).sum();
                    let c =
                        PairCounts { dd, ii: n + dd - weight[x] - weight[y], di: weight[x] - dd, id: weight[y] - dd };
                    let relation = if c.di + c.id == 0 {
                        RowRelation::Equal
                    } else if c.dd + c.ii == 0 {
                        RowRelation::Opposite
                    } else {
                        RowRelation::Other
                    };
                    bump(&mut acc, (relation, c), 1);
                }
                acc
            })
            .reduce(Vec::new, |mut a, b| {
                for (key, count) in b {
                    bump(&mut a, key, count);
                }
                a
            });
        let pair_counts: BTreeMap<(RowRelation, PairCounts), usize> = tally.into_iter().collect();

        MatrixCensus {
            block_rows: n,
            row_counts: row_counts.into_iter().map(|((d, i), rows)| RowCountClass { d, i, rows }).collect(),
            pair_counts: pair_counts
                .into_iter()
                .map(|((relation, counts), pairs)| PairCountClass { relation, counts, pairs })
                .collect(),
        }
    }

    /// Pair-count classes for the given relation.
    pub fn pairs_with(&self, relation: RowRelation) -> impl Iterator<Item = &PairCountClass> {
        self.pair_counts.iter().filter(move |c| c.relation == relation)
    }

    pub fn pair_total(&self, relation: RowRelation) -> usize {
        self.pairs_with(relation).map(|c| c.pairs).sum()
    }
}

/// Block counts of the block matrices `A₁^t` (of `Γ₁^t`) and `A₂^t` (of `Γ₂^t`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Census {
    pub t: usize,
    pub a1: MatrixCensus,
    pub a2: MatrixCensus,
}

/// Closed-form counts for level `t`: `(D, I)` per block-row and
/// `(DD, II, DI, ID)` per pair of block-rows. The pair counts cover pairs of
/// block-rows that are neither equal nor opposite; at `t = 1` they describe the
/// single pair of block-rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedForms {
    pub a1_row: (usize, usize),
    pub a1_pair: PairCounts,
    pub a2_row: (usize, usize),
    pub a2_pair: PairCounts,
}

impl ClosedForms {
    pub fn at(t: usize) -> Self {
        assert!(t >= 1);
        let (p, h) = (pow4(t - 1), 1 << (t - 1));
        let a1_row = (p + h, p - h);
        let a2_row = (p, p);
        if t == 1 {
            return ClosedForms {
                a1_row,
                a1_pair: PairCounts { dd: 2, ii: 0, di: 0, id: 0 },
                a2_row,
                a2_pair: PairCounts { dd: 0, ii: 0, di: 1, id: 1 },
            };
        }
        let (p2, h2) = (pow4(t - 2), 1 << (t - 2));
        ClosedForms {
            a1_row,
            a1_pair: PairCounts { dd: 2 * (p2 + h2), ii: 2 * (p2 - h2), di: 2 * p2, id: 2 * p2 },
            a2_row,
            a2_pair: PairCounts { dd: 2 * p2, ii: 2 * p2, di: 2 * p2, id: 2 * p2 },
        }
    }
}

impl Census {
    /// Differences between the census and [`ClosedForms::at`]; empty when they agree.
    pub fn closed_form_deviations(&self) -> Vec<String> {
        let f = ClosedForms::at(self.t);
        let mut out = Vec::new();
        for (name, census, row, pair, twin) in [
            ("A1", &self.a1, f.a1_row, f.a1_pair, RowRelation::Equal),
            ("A2", &self.a2, f.a2_row, f.a2_pair, RowRelation::Opposite),
        ] {
            for rc in &census.row_counts {
                if (rc.d, rc.i) != row {
                    out.push(format!(
                        "{name}: {} block-rows have (D, I) = ({}, {}), expected {row:?}",
                        rc.rows, rc.d, rc.i
                    ));
                }
            }
            // Each block-row has exactly one twin (equal in A1, opposite in A2).
            let twins = census.pair_total(twin);
            if twins != census.block_rows / 2 {
                out.push(format!("{name}: {twins} {twin:?} pairs, expected {}", census.block_rows / 2));
            }
            let compared = if self.t == 1 {
                census.pairs_with(twin).collect::<Vec<_>>()
            } else {
                census.pairs_with(RowRelation::Other).collect()
            };
            for c in compared {
                if c.counts != pair {
                    out.push(format!("{name}: {} pairs have {:?}, expected {pair:?}", c.pairs, c.counts));
                }
            }
            let accounted = census.pair_total(twin) + census.pair_total(RowRelation::Other);
            let all = census.block_rows * (census.block_rows - 1) / 2;
            if accounted != all {
                out.push(format!("{name}: {} pairs fall outside the twin/other classes", all - accounted));
            }
        }
        out
    }
}

pub fn block_census(t: usize) -> Census {
    assert!(t >= 1, "census level must be at least 1");
    Census {
        t,
        a1: MatrixCensus::of(&SymbolMatrix::gamma1_seed().expand_times(t - 1)),
        a2: MatrixCensus::of(&SymbolMatrix::gamma2_seed().expand_times(t - 1)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn halves_of_the_expansion_match_the_seeds() {
        for t in 1..=3 {
            let full = SymbolMatrix::gamma_seed().expand_times(t - 1);
            let half = 2 * pow4(t - 1);
            assert_eq!(full.leading(half), SymbolMatrix::gamma1_seed().expand_times(t - 1));
            assert_eq!(full.trailing(half), SymbolMatrix::gamma2_seed().expand_times(t - 1));
        }
    }

    #[test]
    fn first_expansion_of_d_is_the_displayed_pattern() {
        use Symbol::{D, I};
        let e = SymbolMatrix::from_rows(&[&[D]]).expand();
        let want = SymbolMatrix::from_rows(&[&[D, D, D, I], &[D, D, I, D], &[D, I, D, D], &[I, D, D, D]]);
        assert_eq!(e, want);
        let e = SymbolMatrix::from_rows(&[&[I]]).expand();
        let want = SymbolMatrix::from_rows(&[&[I, I, I, D], &[I, I, D, I], &[I, D, I, I], &[D, I, I, I]]);
        assert_eq!(e, want);
        assert_eq!(SymbolMatrix::from_rows(&[&[Symbol::O]]).expand().cells, vec![Symbol::O; 16]);
    }

    #[test]
    fn expansion_order_is_identity_at_level_one() {
        assert_eq!(expansion_order(1), (0..24).collect::<Vec<_>>());
        let p = expansion_order(2);
        // Tower index 4·c + a (c the H digit) lands at 4·a + c.
        assert_eq!(p[1], 4);
        assert_eq!(p[4], 1);
        assert_eq!(p[16 + 7], 16 + 13);
    }

    #[test]
    fn small_gamma_family() {
        let fam = gamma_family(1).unwrap();
        assert_eq!(fam.gamma.params, DdgParams::new(24, 10, 6, 3, 3, 8).unwrap());
        assert_eq!(fam.gamma1.graph.regularity(), Some(6));
        assert_eq!(fam.gamma2.graph.regularity(), Some(4));
        assert!(matches!(gamma_family(0), Err(ConstructionError::Precondition(_))));
        assert!(matches!(gamma_family(6), Err(ConstructionError::Precondition(_))));
    }

    #[test]
    fn census_at_level_one() {
        let c = block_census(1);
        assert_eq!(c.a1.row_counts, vec![RowCountClass { d: 2, i: 0, rows: 2 }]);
        assert_eq!(c.a2.row_counts, vec![RowCountClass { d: 1, i: 1, rows: 2 }]);
        assert!(c.closed_form_deviations().is_empty(), "{:?}", c.closed_form_deviations());
    }
}
