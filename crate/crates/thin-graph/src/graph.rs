use crate::GraphError;
use std::collections::VecDeque;

/// Simple undirected graph on vertices `0..n` with bitset adjacency rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Graph { n, words, rows: vec![0; n * words] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for x in [u, v] {
            if x >= self.n {
                return Err(GraphError::VertexOutOfRange { v: x, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.add_edge(u, v);
        Ok(())
    }

    /// Panics on out-of-range or equal endpoints.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v, "bad edge {u}-{v}");
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u * self.words + v / 64] &= !(1 << (v % 64));
        self.rows[v * self.words + u / 64] &= !(1 << (u % 64));
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Raw bitset row of `v`.
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    /// Neighborhood of `v` as a single word. Only valid when `n <= 64`.
    #[inline]
    pub fn mask(&self, v: usize) -> u64 {
        debug_assert!(self.n <= 64);
        self.rows[v * self.words]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(w, &bits)| BitIter(bits).map(move |b| w * 64 + b))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let mut h = Graph::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    h.add_edge(u, v);
                }
            }
        }
        h
    }

    /// Subgraph induced by `vertices`, relabeled `0..len` in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph, GraphError> {
        let mut seen = vec![false; self.n];
        for &v in vertices {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange { v, n: self.n });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(GraphError::Overlap(v));
            }
        }
        let mut h = Graph::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    h.add_edge(i, j);
                }
            }
        }
        Ok(h)
    }

    /// The graph `G[A, B]` on `a ++ b` keeping only edges between the two sides.
    pub fn bipartite_half(&self, a: &[usize], b: &[usize]) -> Result<Graph, GraphError> {
        let all: Vec<usize> = a.iter().chain(b).copied().collect();
        let mut h = self.induced_subgraph(&all)?;
        let na = a.len();
        for i in 0..all.len() {
            for j in i + 1..all.len() {
                if (i < na) == (j < na) {
                    h.remove_edge(i, j);
                }
            }
        }
        Ok(h)
    }

    /// BFS distances from `s`; `usize::MAX` marks unreachable vertices.
    pub fn bfs(&self, s: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        let mut queue = VecDeque::from([s]);
        dist[s] = 0;
        while let Some(u) = queue.pop_front() {
            for v in self.neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = Vec::new();
            let mut stack = vec![s];
            comp[s] = id;
            while let Some(u) = stack.pop() {
                members.push(u);
                for v in self.neighbors(u) {
                    if comp[v] == usize::MAX {
                        comp[v] = id;
                        stack.push(v);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.bfs(0).iter().all(|&d| d != usize::MAX)
    }

    /// A proper 2-coloring (`false`/`true` sides), smallest vertex of each
    /// component on side `false`; `None` if the graph has an odd cycle.
    pub fn two_coloring(&self) -> Option<Vec<bool>> {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                let su = side[u].unwrap();
                for v in self.neighbors(u) {
                    match side[v] {
                        None => {
                            side[v] = Some(!su);
                            stack.push(v);
                        }
                        Some(sv) if sv == su => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(|s| s.unwrap()).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// True if `self` and `other` have the same vertex count and edge set.
    pub fn same_edges(&self, other: &Graph) -> bool {
        self.n == other.n && self.rows == other.rows
    }
}

/// Iterator over set bit positions of a word.
pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;
    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn induced_subgraph_of_c4_is_p3() {
        let h = c4().induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(h.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn induced_subgraph_relabels_in_input_order() {
        let h = c4().induced_subgraph(&[2, 0, 1]).unwrap();
        assert_eq!(h.edges(), vec![(0, 2), (1, 2)]);
    }

    #[test]
    fn induced_subgraph_rejects_out_of_range() {
        assert_eq!(
            c4().induced_subgraph(&[0, 9]),
            Err(GraphError::VertexOutOfRange { v: 9, n: 4 })
        );
    }

    #[test]
    fn bipartite_half_drops_same_side_edges() {
        let k3 = Graph::complete(3);
        let h = k3.bipartite_half(&[0], &[1, 2]).unwrap();
        assert_eq!(h.edges(), vec![(0, 1), (0, 2)]);
        assert!(k3.bipartite_half(&[0, 1], &[1]).is_err());
        let e = k3.bipartite_half(&[], &[0, 1, 2]).unwrap();
        assert_eq!(e.edge_count(), 0);
    }

    #[test]
    fn wide_graphs_use_several_words() {
        let mut g = Graph::new(130);
        g.add_edge(3, 129);
        g.add_edge(64, 65);
        assert!(g.has_edge(129, 3));
        assert_eq!(g.neighbors(3).collect::<Vec<_>>(), vec![129]);
        assert_eq!(g.edges(), vec![(3, 129), (64, 65)]);
        assert_eq!(g.components().len(), 128);
    }

    #[test]
    fn two_coloring_detects_odd_cycles() {
        assert!(c4().is_bipartite());
        assert!(!Graph::complete(3).is_bipartite());
        assert_eq!(c4().two_coloring().unwrap(), vec![false, true, false, true]);
    }

    #[test]
    fn rejects_loops() {
        assert_eq!(Graph::from_edges(2, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
    }
}
