//! Unit-capacity Dinic on the vertex-split network: vertex `v` becomes
//! `in(v) = 2v → out(v) = 2v + 1` with capacity 1, and each edge `u ~ w`
//! becomes `out(u) → in(w)` and `out(w) → in(u)` with capacity `n`.

use std::collections::VecDeque;

use crate::graph::Graph;

/// Arc arrays shared by every flow on one graph; arc `e ^ 1` reverses arc `e`.
pub(crate) struct SplitNetwork {
    n: usize,
    first: Vec<usize>,
    arcs: Vec<usize>,
    to: Vec<u32>,
    cap: Vec<u32>,
}

fn node_in(v: usize) -> usize {
    2 * v
}

fn node_out(v: usize) -> usize {
    2 * v + 1
}

impl SplitNetwork {
    pub(crate) fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut to = Vec::new();
        let mut cap = Vec::new();
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); 2 * n];
        let mut add = |a: usize, b: usize, c: u32, to: &mut Vec<u32>, cap: &mut Vec<u32>| {
            let e = to.len();
            to.extend([b as u32, a as u32]);
            cap.extend([c, 0]);
            incident[a].push(e);
            incident[b].push(e + 1);
        };
        // Split arcs first, so the split arc of `v` is arc `2v`.
        for v in 0..n {
            add(node_in(v), node_out(v), 1, &mut to, &mut cap);
        }
        for (u, w) in g.edges() {
            add(node_out(u), node_in(w), n as u32, &mut to, &mut cap);
            add(node_out(w), node_in(u), n as u32, &mut to, &mut cap);
        }
        let mut first = Vec::with_capacity(2 * n + 1);
        let mut arcs = Vec::with_capacity(to.len());
        for list in incident {
            first.push(arcs.len());
            arcs.extend(list);
        }
        first.push(arcs.len());
        SplitNetwork { n, first, arcs, to, cap }
    }

    fn arcs_of(&self, node: usize) -> &[usize] {
        &self.arcs[self.first[node]..self.first[node + 1]]
    }
}

/// Residual state of one `s`–`t` flow.
pub(crate) struct StFlow<'a> {
    net: &'a SplitNetwork,
    residual: Vec<u32>,
    level: Vec<u32>,
    cursor: Vec<usize>,
    source: usize,
    sink: usize,
    pub(crate) value: usize,
}

const UNSEEN: u32 = u32::MAX;

impl<'a> StFlow<'a> {
    pub(crate) fn new(net: &'a SplitNetwork, s: usize, t: usize) -> Self {
        let mut residual = net.cap.clone();
        // The endpoints are not capacity-limited and must not relay flow.
        residual[2 * s] = 0;
        residual[2 * t] = 0;
        StFlow {
            net,
            residual,
            level: vec![UNSEEN; 2 * net.n],
            cursor: vec![0; 2 * net.n],
            source: node_out(s),
            sink: node_in(t),
            value: 0,
        }
    }

    fn build_levels(&mut self) -> bool {
        self.level.fill(UNSEEN);
        self.level[self.source] = 0;
        let mut queue = VecDeque::from([self.source]);
        while let Some(x) = queue.pop_front() {
            for &e in self.net.arcs_of(x) {
                let y = self.net.to[e] as usize;
                if self.residual[e] > 0 && self.level[y] == UNSEEN {
                    self.level[y] = self.level[x] + 1;
                    if y == self.sink {
                        return true;
                    }
                    queue.push_back(y);
                }
            }
        }
        false
    }

    /// Pushes one unit along a level-increasing path, if one remains.
    fn augment(&mut self) -> bool {
        let mut stack: Vec<usize> = Vec::new();
        let mut x = self.source;
        loop {
            if x == self.sink {
                for &e in &stack {
                    self.residual[e] -= 1;
                    self.residual[e ^ 1] += 1;
                }
                return true;
            }
            let arcs = self.net.arcs_of(x);
            let mut advanced = false;
            while self.cursor[x] < arcs.len() {
                let e = arcs[self.cursor[x]];
                let y = self.net.to[e] as usize;
                if self.residual[e] > 0 && self.level[y] == self.level[x] + 1 {
                    stack.push(e);
                    x = y;
                    advanced = true;
                    break;
                }
                self.cursor[x] += 1;
            }
            if !advanced {
                // Dead end: prune it from this phase and retreat.
                self.level[x] = UNSEEN;
                match stack.pop() {
                    Some(e) => {
                        x = self.net.to[e ^ 1] as usize;
                        self.cursor[x] += 1;
                    }
                    None => return false,
                }
            }
        }
    }

    /// Runs until the flow is maximum or reaches `limit`.
    pub(crate) fn run(&mut self, limit: usize) -> usize {
        while self.value < limit && self.build_levels() {
            self.cursor.fill(0);
            while self.value < limit && self.augment() {
                self.value += 1;
            }
        }
        self.value
    }

    /// Vertices whose split arc is saturated on the source side of a minimum cut.
    pub(crate) fn min_cut(&self) -> Vec<usize> {
        let mut seen = vec![false; 2 * self.net.n];
        seen[self.source] = true;
        let mut queue = VecDeque::from([self.source]);
        while let Some(x) = queue.pop_front() {
            for &e in self.net.arcs_of(x) {
                let y = self.net.to[e] as usize;
                if self.residual[e] > 0 && !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..self.net.n).filter(|&v| seen[node_in(v)] && !seen[node_out(v)]).collect()
    }

    /// Decomposes the flow into `value` vertex sequences from `s` to `t`.
    pub(crate) fn paths(&self) -> Vec<Vec<usize>> {
        let net = self.net;
        // Reverse arcs start empty, so their residual is the forward flow.
        let mut flow: Vec<u32> = (0..net.to.len()).map(|e| if e % 2 == 0 { self.residual[e ^ 1] } else { 0 }).collect();
        let mut out = Vec::with_capacity(self.value);
        for _ in 0..self.value {
            let mut path = vec![self.source / 2];
            let mut x = self.source;
            while x != self.sink {
                let e = *net.arcs_of(x).iter().find(|&&e| e % 2 == 0 && flow[e] > 0).expect("flow conservation");
                flow[e] -= 1;
                x = net.to[e] as usize;
                if x.is_multiple_of(2) {
                    path.push(x / 2);
                }
            }
            out.push(path);
        }
        out
    }
}
