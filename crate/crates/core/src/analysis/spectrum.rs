//! Parameter-level spectrum of a proper DDG.
//!
//! The eigenvalues are `k`, `±√(k − λ1)` and `±√(k² − λ2 v)` with
//! multiplicities `1, f1, f2, g1, g2`, where `f1 + f2 = m(n − 1)` and
//! `g1 + g2 = m − 1`. Irrational values are never evaluated: a non-square
//! `d` forces equal multiplicities, and square ones are counted exactly by
//! rank. The `g` split is read off the quotient matrix, whose eigenvalues are
//! `k, ±√(k² − λ2 v)` with multiplicities `1, g1, g2`; this keeps the count
//! unambiguous when `k − λ1 = k² − λ2 v`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Roots;
use serde::{Deserialize, Serialize};

use super::{checked_quotient, verify_ddg, AnalysisError, DdgParams, Partition};
use crate::graph::Graph;
use crate::linalg::{eigen_multiplicity, IntMatrix};

/// A real number of the form `±√square`, compared exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Eigenvalue {
    pub sign: i8,
    pub square: u64,
}

impl Eigenvalue {
    pub fn int(x: i64) -> Self {
        Eigenvalue { sign: x.signum() as i8, square: x.unsigned_abs() * x.unsigned_abs() }
    }

    pub fn sqrt(d: u64, negative: bool) -> Self {
        let sign = if d == 0 {
            0
        } else if negative {
            -1
        } else {
            1
        };
        Eigenvalue { sign, square: d }
    }

    pub fn as_integer(&self) -> Option<i64> {
        let r = self.square.sqrt();
        (r * r == self.square).then_some(self.sign as i64 * r as i64)
    }
}

impl Ord for Eigenvalue {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.sign.cmp(&other.sign) {
            Ordering::Equal if self.sign >= 0 => self.square.cmp(&other.square),
            Ordering::Equal => other.square.cmp(&self.square),
            unequal => unequal,
        }
    }
}

impl PartialOrd for Eigenvalue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Eigenvalue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_integer() {
            Some(x) => write!(f, "{x}"),
            None if self.sign < 0 => write!(f, "-√{}", self.square),
            None => write!(f, "√{}", self.square),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DdgSpectrum {
    pub k: usize,
    /// `k − λ1`
    pub d1: u64,
    pub f1: usize,
    pub f2: usize,
    pub d1_square: bool,
    /// `k² − λ2 v`
    pub d2: u64,
    pub g1: usize,
    pub g2: usize,
    pub d2_square: bool,
}

impl DdgSpectrum {
    /// Distinct eigenvalues with positive multiplicity, largest first.
    pub fn eigenvalues(&self) -> Vec<(Eigenvalue, usize)> {
        let mut acc: BTreeMap<Eigenvalue, usize> = BTreeMap::new();
        let terms = [
            (Eigenvalue::int(self.k as i64), 1),
            (Eigenvalue::sqrt(self.d1, false), self.f1),
            (Eigenvalue::sqrt(self.d1, true), self.f2),
            (Eigenvalue::sqrt(self.d2, false), self.g1),
            (Eigenvalue::sqrt(self.d2, true), self.g2),
        ];
        for (e, mult) in terms {
            if mult > 0 {
                *acc.entry(e).or_default() += mult;
            }
        }
        acc.into_iter().rev().collect()
    }

    /// Second largest eigenvalue (counting `k` once).
    pub fn second_largest(&self) -> Option<Eigenvalue> {
        let mut it = self.eigenvalues().into_iter();
        let (top, mult) = it.next()?;
        if mult > 1 {
            Some(top)
        } else {
            it.next().map(|(e, _)| e)
        }
    }

    pub fn total_multiplicity(&self) -> usize {
        1 + self.f1 + self.f2 + self.g1 + self.g2
    }
}

fn exact_sqrt(d: u64) -> Option<u64> {
    let r = d.sqrt();
    (r * r == d).then_some(r)
}

fn inconsistent(msg: String) -> AnalysisError {
    AnalysisError::InconsistentMultiplicities(msg)
}

/// Rank-based multiplicities, cached per eigenvalue.
struct Multiplicities<'a> {
    matrix: &'a IntMatrix,
    cache: BTreeMap<i64, usize>,
}

impl<'a> Multiplicities<'a> {
    fn new(matrix: &'a IntMatrix) -> Self {
        Multiplicities { matrix, cache: BTreeMap::new() }
    }

    fn of(&mut self, theta: i64) -> Result<usize, AnalysisError> {
        if let Some(&m) = self.cache.get(&theta) {
            return Ok(m);
        }
        let m = eigen_multiplicity(self.matrix, &BigInt::from(theta))?;
        self.cache.insert(theta, m);
        Ok(m)
    }
}

pub fn ddg_spectrum(g: &Graph, p: &DdgParams, partition: &Partition) -> Result<DdgSpectrum, AnalysisError> {
    if !p.is_proper() {
        return Err(AnalysisError::ImproperInput(*p));
    }
    if let Some(bad) = verify_ddg(g, p, partition)?.violation {
        return Err(AnalysisError::PartitionMismatch(format!("A² identity fails at {bad:?}")));
    }
    let (d1, d2) = (p.d1(), p.d2());
    if d1 < 0 || d2 < 0 {
        return Err(inconsistent(format!("negative eigenvalue square: d1 = {d1}, d2 = {d2}")));
    }
    let (d1, d2) = (d1 as u64, d2 as u64);
    let k = p.k as i64;
    let f_total = p.m * (p.n - 1);
    let g_total = p.m - 1;

    let (g1, g2, s2) = match exact_sqrt(d2) {
        Some(s) => {
            let r = checked_quotient(g, p, partition)?.to_int_matrix();
            let mut mr = Multiplicities::new(&r);
            let s = s as i64;
            if s == 0 {
                (sub(mr.of(0)?, (k == 0) as usize, "g at 0")?, 0, Some(0))
            } else {
                (sub(mr.of(s)?, (s == k) as usize, "g1")?, mr.of(-s)?, Some(s))
            }
        }
        None if g_total.is_multiple_of(2) => (g_total / 2, g_total / 2, None),
        None => return Err(inconsistent(format!("k² − λ2 v = {d2} is not a square but m − 1 = {g_total} is odd"))),
    };

    // Multiplicity already accounted for at `theta` by `k` and the g-pair.
    let claimed = |theta: i64| -> usize {
        let mut c = (theta == k) as usize;
        if let Some(s) = s2 {
            if theta == s {
                c += g1;
            }
            if s != 0 && theta == -s {
                c += g2;
            }
        }
        c
    };

    let adjacency = IntMatrix::adjacency(g);
    let mut ma = Multiplicities::new(&adjacency);
    let (f1, f2, s1) = match exact_sqrt(d1) {
        Some(0) => (sub(ma.of(0)?, claimed(0), "f at 0")?, 0, Some(0)),
        Some(s) => {
            let s = s as i64;
            (sub(ma.of(s)?, claimed(s), "f1")?, sub(ma.of(-s)?, claimed(-s), "f2")?, Some(s))
        }
        None if f_total.is_multiple_of(2) => (f_total / 2, f_total / 2, None),
        None => return Err(inconsistent(format!("k − λ1 = {d1} is not a square but m(n − 1) = {f_total} is odd"))),
    };

    if f1 + f2 != f_total {
        return Err(inconsistent(format!("f1 + f2 = {} ≠ m(n − 1) = {f_total}", f1 + f2)));
    }
    if g1 + g2 != g_total {
        return Err(inconsistent(format!("g1 + g2 = {} ≠ m − 1 = {g_total}", g1 + g2)));
    }

    // Every integer eigenvalue found by rank, plus the irrational pairs, must fill v.
    let mut integer_values = vec![k];
    integer_values.extend(s1.into_iter().flat_map(|s| [s, -s]));
    integer_values.extend(s2.into_iter().flat_map(|s| [s, -s]));
    integer_values.sort_unstable();
    integer_values.dedup();
    let mut found = 0;
    for theta in integer_values {
        found += ma.of(theta)?;
    }
    if s1.is_none() {
        found += f_total;
    }
    if s2.is_none() {
        found += g_total;
    }
    if found != p.v {
        return Err(inconsistent(format!("multiplicities sum to {found}, expected v = {}", p.v)));
    }

    // trace(A) = 0; irrational parts vanish because their multiplicities are equal.
    let trace = k + s1.map_or(0, |s| (f1 as i64 - f2 as i64) * s) + s2.map_or(0, |s| (g1 as i64 - g2 as i64) * s);
    if trace != 0 {
        return Err(inconsistent(format!("trace condition gives {trace}, expected 0")));
    }
    // trace(A²) = vk.
    let trace_sq = (p.k * p.k) as u64 + f_total as u64 * d1 + g_total as u64 * d2;
    if trace_sq != (p.v * p.k) as u64 {
        return Err(inconsistent(format!("trace(A²) gives {trace_sq}, expected {}", p.v * p.k)));
    }

    Ok(DdgSpectrum { k: p.k, d1, f1, f2, d1_square: s1.is_some(), d2, g1, g2, d2_square: s2.is_some() })
}

fn sub(total: usize, claimed: usize, what: &str) -> Result<usize, AnalysisError> {
    total
        .checked_sub(claimed)
        .ok_or_else(|| inconsistent(format!("{what}: rank gives {total}, but {claimed} already claimed")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eigenvalue_ordering_is_exact() {
        let mut v = [
            Eigenvalue::int(2),
            Eigenvalue::sqrt(5, false),
            Eigenvalue::sqrt(5, true),
            Eigenvalue::int(0),
            Eigenvalue::int(-3),
            Eigenvalue::sqrt(4, false),
        ];
        v.sort();
        let shown: Vec<String> = v.iter().map(ToString::to_string).collect();
        assert_eq!(shown, ["-3", "-√5", "0", "2", "2", "√5"]);
        assert_eq!(Eigenvalue::sqrt(4, false), Eigenvalue::int(2));
    }

    #[test]
    fn gamma2_1_spectrum() {
        let g = Graph::from_fn(8, |a, b| if a / 4 == b / 4 { a % 4 != b % 4 } else { a % 4 == b % 4 }).unwrap();
        let rec = super::super::recognize_ddg(&g).unwrap();
        let r = &rec.readings()[0];
        let s = ddg_spectrum(&g, &r.params, &r.partition).unwrap();
        assert_eq!((s.d1, s.f1, s.f2), (4, 1, 3));
        assert_eq!((s.d2, s.g1, s.g2), (0, 3, 0));
        let ev: Vec<(i64, usize)> = s.eigenvalues().iter().map(|(e, m)| (e.as_integer().unwrap(), *m)).collect();
        assert_eq!(ev, vec![(4, 1), (2, 1), (0, 3), (-2, 3)]);
        assert_eq!(s.second_largest(), Some(Eigenvalue::int(2)));
        assert_eq!(s.total_multiplicity(), 8);
    }
}
