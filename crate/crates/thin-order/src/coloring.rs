//! Exact clique and coloring on graphs of at most 128 vertices, given as
//! `u128` adjacency masks.

use thin_graph::Graph;

pub const MAX_COLOR_N: usize = 128;

pub fn masks(g: &Graph) -> Vec<u128> {
    assert!(g.n() <= MAX_COLOR_N, "exact coloring supports at most {MAX_COLOR_N} vertices");
    (0..g.n())
        .map(|v| {
            let row = g.row(v);
            row[0] as u128 | (row.get(1).copied().unwrap_or(0) as u128) << 64
        })
        .collect()
}

#[inline]
fn bit(v: usize) -> u128 {
    1u128 << v
}

/// Greedy sequential coloring of `cand`; returns (vertex, color) in
/// nondecreasing color order, colors starting at 1.
fn greedy_bounds(adj: &[u128], cand: u128, out: &mut Vec<(usize, usize)>) {
    out.clear();
    let mut rest = cand;
    let mut color = 0;
    while rest != 0 {
        color += 1;
        let mut q = rest;
        while q != 0 {
            let v = q.trailing_zeros() as usize;
            q &= !adj[v] & !bit(v);
            rest &= !bit(v);
            out.push((v, color));
        }
    }
}

fn expand(adj: &[u128], cur: u128, size: usize, mut cand: u128, best: &mut (usize, u128)) {
    let mut order = Vec::new();
    greedy_bounds(adj, cand, &mut order);
    for &(v, c) in order.iter().rev() {
        if size + c <= best.0 {
            return;
        }
        let next = cand & adj[v];
        let with = cur | bit(v);
        if next == 0 {
            if size + 1 > best.0 {
                *best = (size + 1, with);
            }
        } else {
            expand(adj, with, size + 1, next, best);
        }
        cand &= !bit(v);
    }
}

/// A maximum clique as a vertex mask.
pub fn max_clique(adj: &[u128]) -> u128 {
    let all = if adj.len() == 128 { u128::MAX } else { bit(adj.len()) - 1 };
    let mut best = (0, 0);
    if !adj.is_empty() {
        expand(adj, 0, 0, all, &mut best);
    }
    best.1
}

pub fn clique_number(adj: &[u128]) -> usize {
    max_clique(adj).count_ones() as usize
}

struct Search<'a> {
    adj: &'a [u128],
    color: Vec<usize>,
    bound: usize,
    best: Option<Vec<usize>>,
    floor: usize,
}

impl Search<'_> {
    fn pick(&self) -> Option<usize> {
        let n = self.adj.len();
        let mut best: Option<(usize, usize, usize)> = None;
        for v in 0..n {
            if self.color[v] != usize::MAX {
                continue;
            }
            let mut sat = 0u128;
            let mut free_deg = 0;
            let mut nb = self.adj[v];
            while nb != 0 {
                let u = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                match self.color[u] {
                    usize::MAX => free_deg += 1,
                    c => sat |= bit(c),
                }
            }
            let key = (sat.count_ones() as usize, free_deg);
            if best.is_none_or(|(s, d, _)| key > (s, d)) {
                best = Some((key.0, key.1, v));
            }
        }
        best.map(|b| b.2)
    }

    /// Looks for colorings with fewer than `self.bound` colors.
    fn run(&mut self, used: usize) {
        if used >= self.bound {
            return;
        }
        let Some(v) = self.pick() else {
            self.bound = used;
            self.best = Some(self.color.clone());
            return;
        };
        let mut forbidden = 0u128;
        let mut nb = self.adj[v];
        while nb != 0 {
            let u = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            if self.color[u] != usize::MAX {
                forbidden |= bit(self.color[u]);
            }
        }
        for c in 0..=used {
            if c + 1 >= self.bound || self.bound <= self.floor {
                break;
            }
            if forbidden & bit(c) != 0 {
                continue;
            }
            self.color[v] = c;
            self.run(used.max(c + 1));
            self.color[v] = usize::MAX;
        }
    }
}

/// Minimum proper coloring; colors are `0..k` and all used. Deterministic:
/// saturation-first vertex choice, lowest available color first.
pub fn min_coloring(adj: &[u128]) -> Vec<usize> {
    let n = adj.len();
    if n == 0 {
        return Vec::new();
    }
    let floor = clique_number(adj);
    let mut s = Search { adj, color: vec![usize::MAX; n], bound: n + 1, best: None, floor };
    s.run(0);
    s.best.expect("some coloring exists")
}

pub fn chromatic_number(adj: &[u128]) -> usize {
    min_coloring(adj).iter().map(|&c| c + 1).max().unwrap_or(0)
}

/// Whether a proper coloring with at most `k` colors exists.
pub fn is_colorable(adj: &[u128], k: usize) -> bool {
    let n = adj.len();
    if n == 0 {
        return true;
    }
    match k {
        0 => false,
        1 => adj.iter().all(|&m| m == 0),
        2 => is_bipartite(adj),
        _ => {
            let mut s = Search { adj, color: vec![usize::MAX; n], bound: k + 1, best: None, floor: 0 };
            s.run(0);
            s.best.is_some()
        }
    }
}

fn is_bipartite(adj: &[u128]) -> bool {
    let n = adj.len();
    let mut side = vec![u8::MAX; n];
    let mut stack = Vec::new();
    for s in 0..n {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        stack.push(s);
        while let Some(u) = stack.pop() {
            let mut nb = adj[u];
            while nb != 0 {
                let v = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                if side[v] == u8::MAX {
                    side[v] = 1 - side[u];
                    stack.push(v);
                } else if side[v] == side[u] {
                    return false;
                }
            }
        }
    }
    true
}
