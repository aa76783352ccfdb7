//! Independent oracles shared by the integration tests. Nothing here calls the
//! library's own verification code.

#![allow(dead_code, clippy::needless_range_loop)]

use ddglab::Graph;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn dense(g: &Graph) -> Vec<Vec<i64>> {
    (0..g.n()).map(|i| (0..g.n()).map(|j| g.has_edge(i, j) as i64).collect()).collect()
}

pub fn square(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut out = vec![vec![0; n]; n];
    for i in 0..n {
        for l in 0..n {
            if a[i][l] != 0 {
                for j in 0..n {
                    out[i][j] += a[i][l] * a[l][j];
                }
            }
        }
    }
    out
}

/// `A² = kI + λ1(K − I) + λ2(J − K)` where `class[v]` gives the class of `v`.
pub fn a2_identity(g: &Graph, k: i64, l1: i64, l2: i64, class: &[usize]) -> bool {
    let a2 = square(&dense(g));
    (0..g.n()).all(|i| {
        (0..g.n()).all(|j| {
            let want = if i == j {
                k
            } else if class[i] == class[j] {
                l1
            } else {
                l2
            };
            a2[i][j] == want
        })
    })
}

/// Quotient by neighbour counting; `None` if the partition is not equitable.
pub fn quotient(g: &Graph, classes: &[Vec<usize>]) -> Option<Vec<Vec<i64>>> {
    let m = classes.len();
    let mut class = vec![0; g.n()];
    for (c, members) in classes.iter().enumerate() {
        for &v in members {
            class[v] = c;
        }
    }
    let mut r = vec![vec![0i64; m]; m];
    for (i, members) in classes.iter().enumerate() {
        for (idx, &u) in members.iter().enumerate() {
            let mut counts = vec![0i64; m];
            for w in 0..g.n() {
                if g.has_edge(u, w) {
                    counts[class[w]] += 1;
                }
            }
            if idx == 0 {
                r[i] = counts;
            } else if counts != r[i] {
                return None;
            }
        }
    }
    Some(r)
}

/// `R² = (k² − λ2 v)I + λ2 n J`.
pub fn quotient_identity(r: &[Vec<i64>], k: i64, l2: i64, v: i64, n: i64) -> bool {
    let r2 = square(r);
    (0..r.len()).all(|i| (0..r.len()).all(|j| r2[i][j] == if i == j { k * k - l2 * v } else { 0 } + l2 * n))
}

pub fn rational(a: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    a.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect()).collect()
}

/// Rank by Gaussian elimination over the rationals.
pub fn rational_rank(a: &[Vec<i64>]) -> usize {
    let mut m = rational(a);
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(rank, p);
        for r in 0..rows {
            if r != rank && !m[r][c].is_zero() {
                let f = &m[r][c] / &m[rank][c];
                for cc in c..cols {
                    let delta = &f * &m[rank][cc];
                    m[r][cc] -= delta;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Characteristic polynomial `det(xI − A)` by Faddeev–LeVerrier; coefficient
/// `i` multiplies `x^i`.
pub fn charpoly(a: &[Vec<i64>]) -> Vec<BigRational> {
    let n = a.len();
    let a = rational(a);
    let mul = |x: &Vec<Vec<BigRational>>, y: &Vec<Vec<BigRational>>| -> Vec<Vec<BigRational>> {
        (0..n)
            .map(|i| (0..n).map(|j| (0..n).fold(BigRational::zero(), |s, l| s + &x[i][l] * &y[l][j])).collect())
            .collect()
    };
    let mut coeffs = vec![BigRational::zero(); n + 1];
    coeffs[n] = BigRational::one();
    let mut m = vec![vec![BigRational::zero(); n]; n];
    for k in 1..=n {
        // M_k = A·M_{k−1} + c_{n−k+1} I,  c_{n−k} = −tr(A·M_k)/k
        let mut next = mul(&a, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        m = next;
        let am = mul(&a, &m);
        let trace = (0..n).fold(BigRational::zero(), |s, i| s + &am[i][i]);
        coeffs[n - k] = -trace / BigRational::from_integer(BigInt::from(k));
    }
    coeffs
}

/// Multiplicity of `theta` as a root of `p`.
pub fn root_multiplicity(p: &[BigRational], theta: i64) -> usize {
    let theta = BigRational::from_integer(BigInt::from(theta));
    let mut p = p.to_vec();
    let mut mult = 0;
    while p.len() > 1 {
        // Synthetic division by (x − θ).
        let deg = p.len() - 1;
        let mut q = vec![BigRational::zero(); deg];
        let mut acc = BigRational::zero();
        for i in (0..=deg).rev() {
            acc = &acc * &theta + &p[i];
            if i > 0 {
                q[i - 1] = acc.clone();
            }
        }
        if !acc.abs().is_zero() {
            break;
        }
        mult += 1;
        p = q;
    }
    mult
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for w in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, w));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Exhaustive check that removing `cut` separates `s` from `t`.
pub fn separates(g: &Graph, cut: &[usize], s: usize, t: usize) -> bool {
    let mut seen = vec![false; g.n()];
    for &c in cut {
        seen[c] = true;
    }
    let mut stack = vec![s];
    seen[s] = true;
    while let Some(u) = stack.pop() {
        for w in 0..g.n() {
            if g.has_edge(u, w) && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    !seen[t] || cut.contains(&t)
}
