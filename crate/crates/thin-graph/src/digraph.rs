use crate::{GraphError, VertexOrder};
use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap, VecDeque};

/// Directed graph on `0..n` without self-arcs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    out: Vec<BTreeSet<usize>>,
}

/// Result of a topological sort: an order, or a closed directed cycle
/// `[v0, v1, ..., v0]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TopoOutcome {
    Order(VertexOrder),
    Cycle(Vec<usize>),
}

impl Digraph {
    pub fn new(n: usize) -> Self {
        Digraph { n, out: vec![BTreeSet::new(); n] }
    }

    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut d = Digraph::new(n);
        for &(u, v) in arcs {
            d.try_add_arc(u, v)?;
        }
        Ok(d)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn try_add_arc(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for x in [u, v] {
            if x >= self.n {
                return Err(GraphError::VertexOutOfRange { v: x, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.out[u].insert(v);
        Ok(())
    }

    pub fn add_arc(&mut self, u: usize, v: usize) {
        self.try_add_arc(u, v).expect("invalid arc");
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u].contains(&v)
    }

    pub fn out_neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.out[u].iter().copied()
    }

    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (0..self.n).flat_map(|u| self.out[u].iter().map(move |&v| (u, v))).collect()
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(BTreeSet::len).sum()
    }

    /// Kahn's algorithm taking the smallest available source first. On a
    /// cycle, reports the shortest cycle through the first back-arc met by a
    /// depth-first search in index order.
    pub fn topological_sort(&self) -> TopoOutcome {
        let mut indeg = vec![0usize; self.n];
        for u in 0..self.n {
            for &v in &self.out[u] {
                indeg[v] += 1;
            }
        }
        let mut heap: BinaryHeap<Reverse<usize>> =
            (0..self.n).filter(|&v| indeg[v] == 0).map(Reverse).collect();
        let mut seq = Vec::with_capacity(self.n);
        while let Some(Reverse(u)) = heap.pop() {
            seq.push(u);
            for &v in &self.out[u] {
                indeg[v] -= 1;
                if indeg[v] == 0 {
                    heap.push(Reverse(v));
                }
            }
        }
        if seq.len() == self.n {
            TopoOutcome::Order(VertexOrder::new(seq).expect("kahn yields a permutation"))
        } else {
            TopoOutcome::Cycle(self.find_cycle().expect("kahn stalled without a cycle"))
        }
    }

    pub fn is_acyclic(&self) -> bool {
        matches!(self.topological_sort(), TopoOutcome::Order(_))
    }

    fn find_cycle(&self) -> Option<Vec<usize>> {
        // 0 = unvisited, 1 = on stack, 2 = done
        let mut state = vec![0u8; self.n];
        for root in 0..self.n {
            if state[root] != 0 {
                continue;
            }
            let mut stack: Vec<(usize, Vec<usize>, usize)> =
                vec![(root, self.out[root].iter().copied().collect(), 0)];
            state[root] = 1;
            while let Some((u, succ, idx)) = stack.last_mut() {
                if *idx < succ.len() {
                    let v = succ[*idx];
                    *idx += 1;
                    let u = *u;
                    match state[v] {
                        0 => {
                            state[v] = 1;
                            stack.push((v, self.out[v].iter().copied().collect(), 0));
                        }
                        1 => return Some(self.shortest_cycle_through(u, v)),
                        _ => {}
                    }
                } else {
                    state[*u] = 2;
                    stack.pop();
                }
            }
        }
        None
    }

    /// Shortest cycle using arc `u -> v`: BFS path `v ~> u` plus that arc.
    fn shortest_cycle_through(&self, u: usize, v: usize) -> Vec<usize> {
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = VecDeque::from([v]);
        parent[v] = v;
        while let Some(x) = queue.pop_front() {
            if x == u {
                break;
            }
            for &y in &self.out[x] {
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        let mut path = vec![u];
        let mut x = u;
        while x != v {
            x = parent[x];
            path.push(x);
        }
        path.reverse();
        path.push(v);
        path
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_sorts_in_order() {
        let d = Digraph::from_arcs(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(d.topological_sort(), TopoOutcome::Order(VertexOrder::identity(3)));
    }

    #[test]
    fn two_cycle_reported_closed() {
        let d = Digraph::from_arcs(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(d.topological_sort(), TopoOutcome::Cycle(vec![0, 1, 0]));
    }

    #[test]
    fn smallest_source_first() {
        let d = Digraph::from_arcs(4, &[(3, 0), (2, 1)]).unwrap();
        let TopoOutcome::Order(o) = d.topological_sort() else { panic!() };
        assert_eq!(o.seq(), &[2, 1, 3, 0]);
    }

    #[test]
    fn cycle_is_shortest_through_back_arc() {
        // 0->1->2->3->0 plus chord 1->3
        let d = Digraph::from_arcs(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (1, 3)]).unwrap();
        let TopoOutcome::Cycle(c) = d.topological_sort() else { panic!() };
        assert_eq!(c, vec![0, 1, 3, 0]);
    }

    #[test]
    fn rejects_self_arc() {
        assert!(Digraph::from_arcs(2, &[(1, 1)]).is_err());
    }
}
