//! Backtracking search for structure-preserving vertex maps, pruned by an
//! isomorphism-invariant colour refinement.

use std::collections::BTreeMap;

use crate::graph::Graph;

/// Stable colouring: start from degrees and split by neighbour-colour multisets.
pub(crate) fn refine(g: &Graph) -> Vec<u32> {
    let n = g.n();
    let mut colour: Vec<u32> = (0..n).map(|v| g.degree(v) as u32).collect();
    let mut classes = usize::MAX;
    loop {
        let signatures: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut nbr: Vec<u32> = g.neighbours(v).map(|w| colour[w]).collect();
                nbr.sort_unstable();
                (colour[v], nbr)
            })
            .collect();
        let ids: BTreeMap<&(u32, Vec<u32>), u32> = {
            let mut sorted: Vec<&(u32, Vec<u32>)> = signatures.iter().collect();
            sorted.sort();
            sorted.dedup();
            sorted.into_iter().enumerate().map(|(i, s)| (s, i as u32)).collect()
        };
        let next: Vec<u32> = signatures.iter().map(|s| ids[s]).collect();
        if ids.len() == classes {
            return next;
        }
        classes = ids.len();
        colour = next;
    }
}

/// Vertices ordered so each one has many already-placed neighbours.
fn search_order(g: &Graph, colour: &[u32]) -> Vec<usize> {
    let n = g.n();
    let mut class_size: BTreeMap<u32, usize> = BTreeMap::new();
    for &c in colour {
        *class_size.entry(c).or_default() += 1;
    }
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (links[v], std::cmp::Reverse(class_size[&colour[v]]), std::cmp::Reverse(v)))
            .expect("unplaced vertex");
        placed[v] = true;
        order.push(v);
        for w in g.neighbours(v) {
            links[w] += 1;
        }
    }
    order
}

/// Enumerates bijections `V(a) → V(b)` preserving adjacency and colour.
pub(crate) struct MapSearch<'a> {
    a: &'a Graph,
    b: &'a Graph,
    colour_a: Vec<u32>,
    colour_b: Vec<u32>,
    order: Vec<usize>,
}

impl<'a> MapSearch<'a> {
    pub(crate) fn new(a: &'a Graph, b: &'a Graph, colour_a: Vec<u32>, colour_b: Vec<u32>) -> Self {
        let order = search_order(a, &colour_a);
        MapSearch { a, b, colour_a, colour_b, order }
    }

    /// Calls `found` for each map until it returns `false`.
    pub(crate) fn run(&self, mut found: impl FnMut(&[usize]) -> bool) {
        let n = self.a.n();
        if n != self.b.n() {
            return;
        }
        let mut image = vec![usize::MAX; n];
        let mut used = vec![false; n];
        self.extend(0, &mut image, &mut used, &mut found);
    }

    fn extend(
        &self,
        depth: usize,
        image: &mut [usize],
        used: &mut [bool],
        found: &mut impl FnMut(&[usize]) -> bool,
    ) -> bool {
        if depth == self.order.len() {
            return found(image);
        }
        let v = self.order[depth];
        for w in 0..self.b.n() {
            if used[w] || self.colour_a[v] != self.colour_b[w] {
                continue;
            }
            let consistent = self.order[..depth].iter().all(|&x| self.a.has_edge(v, x) == self.b.has_edge(w, image[x]));
            if !consistent {
                continue;
            }
            image[v] = w;
            used[w] = true;
            let go_on = self.extend(depth + 1, image, used, found);
            used[w] = false;
            image[v] = usize::MAX;
            if !go_on {
                return false;
            }
        }
        true
    }
}

/// Enumerates involutive automorphisms whose moved pairs are non-edges.
pub(crate) struct SeidelSearch<'a> {
    g: &'a Graph,
    colour: Vec<u32>,
    order: Vec<usize>,
}

impl<'a> SeidelSearch<'a> {
    pub(crate) fn new(g: &'a Graph) -> Self {
        let colour = refine(g);
        let order = search_order(g, &colour);
        SeidelSearch { g, colour, order }
    }

    pub(crate) fn run(&self, mut found: impl FnMut(&[usize])) {
        let n = self.g.n();
        let mut image = vec![usize::MAX; n];
        let mut assigned = Vec::with_capacity(n);
        self.extend(0, &mut image, &mut assigned, &mut found);
    }

    fn consistent(&self, v: usize, w: usize, image: &[usize], assigned: &[usize]) -> bool {
        let g = self.g;
        assigned
            .iter()
            .all(|&x| g.has_edge(v, x) == g.has_edge(w, image[x]) && g.has_edge(w, x) == g.has_edge(v, image[x]))
    }

    fn extend(&self, depth: usize, image: &mut [usize], assigned: &mut Vec<usize>, found: &mut impl FnMut(&[usize])) {
        let Some(&v) = self.order[depth..].iter().find(|&&v| image[v] == usize::MAX) else {
            found(image);
            return;
        };
        let depth = depth + self.order[depth..].iter().position(|&x| x == v).expect("present");
        for w in 0..self.g.n() {
            let admissible =
                w == v || (image[w] == usize::MAX && self.colour[w] == self.colour[v] && !self.g.has_edge(v, w));
            if !admissible || !self.consistent(v, w, image, assigned) {
                continue;
            }
            image[v] = w;
            image[w] = v;
            assigned.push(v);
            if w != v {
                assigned.push(w);
            }
            self.extend(depth + 1, image, assigned, found);
            assigned.truncate(assigned.len() - if w != v { 2 } else { 1 });
            image[v] = usize::MAX;
            image[w] = usize::MAX;
        }
    }
}
