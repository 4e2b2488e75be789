use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use thin_graph::{Graph, VertexOrder};

use crate::BoundsError;

pub const MAX_BANDWIDTH_N: usize = 12;

/// An injective labeling `f: V -> Z`; JSON `{"f": [..]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Labeling {
    pub f: Vec<i64>,
}

impl Labeling {
    pub fn new(f: Vec<i64>) -> Result<Self, BoundsError> {
        let mut seen = std::collections::HashMap::new();
        for (v, &x) in f.iter().enumerate() {
            if let Some(u) = seen.insert(x, v) {
                return Err(BoundsError::NotInjective(u, v));
            }
        }
        Ok(Labeling { f })
    }

    /// Labels by position in `order`.
    pub fn from_order(order: &VertexOrder) -> Self {
        let mut f = vec![0; order.len()];
        for (i, &v) in order.seq().iter().enumerate() {
            f[v] = i as i64;
        }
        Labeling { f }
    }

    /// Vertices by increasing label.
    pub fn order(&self) -> VertexOrder {
        let mut seq: Vec<usize> = (0..self.f.len()).collect();
        seq.sort_by_key(|&v| self.f[v]);
        VertexOrder::new(seq).expect("permutation")
    }

    /// Largest label gap over the edges of `g`.
    pub fn bandwidth_of(&self, g: &Graph) -> Result<u64, BoundsError> {
        if self.f.len() != g.n() {
            return Err(BoundsError::SizeMismatch { expected: g.n(), got: self.f.len() });
        }
        Ok(g.edges().iter().map(|&(u, v)| self.f[u].abs_diff(self.f[v])).max().unwrap_or(0))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self, BoundsError> {
        let raw: Labeling = serde_json::from_str(s)?;
        Labeling::new(raw.f)
    }
}

/// Breadth-first layout per component, starting each from a vertex of
/// least degree and visiting neighbors by increasing degree.
fn bfs_layout(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut out = Vec::with_capacity(n);
    let mut starts: Vec<usize> = (0..n).collect();
    starts.sort_by_key(|&v| (g.degree(v), v));
    for s in starts {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            out.push(u);
            let mut next: Vec<usize> = g.neighbors(u).filter(|&w| !seen[w]).collect();
            next.sort_by_key(|&w| (g.degree(w), w));
            for w in next {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    out
}

struct Layout {
    n: usize,
    nb: Vec<u32>,
    k: usize,
    seq: Vec<usize>,
    pos: Vec<usize>,
    dead: HashSet<(u32, Vec<usize>)>,
}

impl Layout {
    fn place(&mut self, placed: u32) -> bool {
        let p = self.seq.len();
        if p == self.n {
            return true;
        }
        let key = (placed, self.seq[p.saturating_sub(self.k)..].to_vec());
        if self.dead.contains(&key) {
            return false;
        }
        // the vertex leaving the window must have at most this one neighbor left
        let must = (p >= self.k).then(|| self.nb[self.seq[p - self.k]] & !placed);
        for v in 0..self.n {
            if placed >> v & 1 == 1 {
                continue;
            }
            if let Some(rest) = must {
                if rest != 0 && rest != 1 << v {
                    continue;
                }
            }
            let back = self.nb[v] & placed;
            if (0..self.n).any(|u| back >> u & 1 == 1 && p - self.pos[u] > self.k) {
                continue;
            }
            let now = placed | 1 << v;
            self.pos[v] = p;
            self.seq.push(v);
            let open_ok = self.seq[p.saturating_sub(self.k)..].iter().all(|&u| {
                let left = (self.nb[u] & !now).count_ones() as usize;
                left <= self.pos[u] + self.k - p
            });
            if open_ok && self.place(now) {
                return true;
            }
            self.seq.pop();
        }
        self.dead.insert(key);
        false
    }
}

/// Exact bandwidth with an optimal labeling (positions `0..n`).
pub fn bandwidth(g: &Graph) -> Result<(u64, Labeling), BoundsError> {
    let n = g.n();
    if n > MAX_BANDWIDTH_N {
        return Err(BoundsError::TooLarge { n, limit: MAX_BANDWIDTH_N });
    }
    let upper = Labeling::from_order(&VertexOrder::new(bfs_layout(g)).expect("permutation"));
    let ub = upper.bandwidth_of(g)?;
    let lower = if g.edge_count() == 0 { 0 } else { (g.max_degree() as u64).div_ceil(2).max(1) };
    let nb: Vec<u32> = (0..n).map(|v| g.mask(v) as u32).collect();
    for k in lower..ub {
        let mut s = Layout { n, nb: nb.clone(), k: k as usize, seq: vec![], pos: vec![0; n], dead: HashSet::new() };
        if s.place(0) {
            return Ok((k, Labeling::from_order(&VertexOrder::new(s.seq).expect("permutation"))));
        }
    }
    Ok((ub, upper))
}
