use crate::{Graph, GraphError};

pub const MAX_ENUM_N: usize = 8;

/// Lazily yields every connected labeled graph on `n` vertices, ordered by
/// edge mask over the lexicographic pair list.
pub struct ConnectedGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next_mask: u64,
    end: u64,
}

pub fn connected_graphs(n: usize) -> Result<ConnectedGraphs, GraphError> {
    if n > MAX_ENUM_N {
        return Err(GraphError::TooLarge { n, limit: MAX_ENUM_N });
    }
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let end = if n == 0 { 0 } else { 1u64 << pairs.len() };
    Ok(ConnectedGraphs { n, pairs, next_mask: 0, end })
}

impl Iterator for ConnectedGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next_mask < self.end {
            let mask = self.next_mask;
            self.next_mask += 1;
            // a connected graph needs at least n-1 edges
            if (mask.count_ones() as usize) + 1 < self.n {
                continue;
            }
            let mut g = Graph::new(self.n);
            for (i, &(u, v)) in self.pairs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    g.add_edge(u, v);
                }
            }
            if g.is_connected() {
                return Some(g);
            }
        }
        None
    }
}

/// Isomorphism-invariant vertex key used to restrict relabelings.
fn vertex_keys(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    (0..g.n())
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).map(|u| g.degree(u)).collect();
            nd.sort_unstable();
            (g.degree(v), nd)
        })
        .collect()
}

struct Canon<'a> {
    g: &'a Graph,
    /// key required at each label position
    slot_key: Vec<(usize, Vec<usize>)>,
    key: Vec<(usize, Vec<usize>)>,
    used: Vec<bool>,
    vertex_at: Vec<usize>,
    total: usize,
    best: Option<u64>,
}

impl Canon<'_> {
    /// `prefix` holds one bit per pair `(i, j)`, `i < j < pos`, appended
    /// column by column, so codes of equal length compare numerically.
    fn search(&mut self, pos: usize, prefix: u64, len: usize) {
        if let Some(best) = self.best {
            if prefix < best >> (self.total - len) {
                return;
            }
        }
        if pos == self.g.n() {
            if self.best.is_none_or(|b| prefix > b) {
                self.best = Some(prefix);
            }
            return;
        }
        for v in 0..self.g.n() {
            if self.used[v] || self.key[v] != self.slot_key[pos] {
                continue;
            }
            let mut code = prefix;
            for i in 0..pos {
                code = code << 1 | u64::from(self.g.has_edge(self.vertex_at[i], v));
            }
            self.used[v] = true;
            self.vertex_at[pos] = v;
            self.search(pos + 1, code, len + pos);
            self.used[v] = false;
        }
    }
}

/// Canonical code of a graph on at most 8 vertices: equal codes iff
/// isomorphic. Decode with [`from_canonical_code`].
pub fn canonical_code(g: &Graph) -> Result<u64, GraphError> {
    let n = g.n();
    if n > MAX_ENUM_N {
        return Err(GraphError::TooLarge { n, limit: MAX_ENUM_N });
    }
    let key = vertex_keys(g);
    let mut slot_key = key.clone();
    slot_key.sort();
    let mut c = Canon {
        g,
        slot_key,
        key,
        used: vec![false; n],
        vertex_at: vec![0; n],
        total: n * n.saturating_sub(1) / 2,
        best: None,
    };
    c.search(0, 0, 0);
    Ok(c.best.unwrap_or(0))
}

/// Inverse of [`canonical_code`] for a known vertex count.
pub fn from_canonical_code(n: usize, code: u64) -> Graph {
    let total = n * n.saturating_sub(1) / 2;
    let mut g = Graph::new(n);
    let mut bit = total;
    for j in 1..n {
        for i in 0..j {
            bit -= 1;
            if code >> bit & 1 == 1 {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// One representative per isomorphism class of graphs on `n <= 8`
/// vertices, in increasing canonical-code order.
pub fn nonisomorphic_graphs(n: usize) -> Result<Vec<Graph>, GraphError> {
    if n > MAX_ENUM_N {
        return Err(GraphError::TooLarge { n, limit: MAX_ENUM_N });
    }
    let mut level: Vec<Graph> = vec![Graph::new(0)];
    for m in 1..=n {
        let mut codes = std::collections::BTreeSet::new();
        for h in &level {
            for nb in 0u32..1 << (m - 1) {
                let mut g = Graph::new(m);
                for (u, v) in h.edges() {
                    g.add_edge(u, v);
                }
                for u in 0..m - 1 {
                    if nb >> u & 1 == 1 {
                        g.add_edge(u, m - 1);
                    }
                }
                codes.insert(canonical_code(&g)?);
            }
        }
        level = codes.into_iter().map(|c| from_canonical_code(m, c)).collect();
    }
    Ok(level)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labeled_counts_match_known_sequence() {
        // connected labeled graphs: 1, 1, 4, 38, 728
        let counts: Vec<usize> =
            (1..=5).map(|n| connected_graphs(n).unwrap().count()).collect();
        assert_eq!(counts, vec![1, 1, 4, 38, 728]);
    }

    #[test]
    fn n_three_has_paths_and_triangle() {
        let gs: Vec<Graph> = connected_graphs(3).unwrap().collect();
        assert_eq!(gs.iter().filter(|g| g.edge_count() == 2).count(), 3);
        assert_eq!(gs.iter().filter(|g| g.edge_count() == 3).count(), 1);
    }

    #[test]
    fn class_counts_match_known_sequence() {
        // all graphs: 1, 1, 2, 4, 11, 34, 156, 1044; connected: 1, 1, 1, 2, 6, 21, 112, 853
        let all: Vec<usize> = (0..=7).map(|n| nonisomorphic_graphs(n).unwrap().len()).collect();
        assert_eq!(all, vec![1, 1, 2, 4, 11, 34, 156, 1044]);
        let connected: Vec<usize> =
            (1..=7).map(|n| nonisomorphic_graphs(n).unwrap().iter().filter(|g| g.is_connected()).count()).collect();
        assert_eq!(connected, vec![1, 1, 2, 6, 21, 112, 853]);
    }

    #[test]
    fn canonical_code_is_invariant_under_relabeling() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (1, 4)]).unwrap();
        let h = Graph::from_edges(5, &[(4, 3), (3, 2), (2, 1), (3, 0)]).unwrap();
        let code = canonical_code(&g).unwrap();
        assert_eq!(code, canonical_code(&h).unwrap());
        assert!(from_canonical_code(5, code).edge_count() == 4);
        assert_eq!(canonical_code(&from_canonical_code(5, code)).unwrap(), code);
        assert_ne!(code, canonical_code(&Graph::path(5)).unwrap());
    }

    #[test]
    fn too_large_is_rejected() {
        assert!(connected_graphs(9).is_err());
    }
}
