use std::time::{Duration, Instant};

use thin_graph::{Graph, Partition, Representation, VertexOrder};
use thiserror::Error;

use crate::coloring::{self, is_colorable};
use crate::{min_classes_for_order, verify_certificate, ThinnessKind};

pub const MAX_SOLVER_N: usize = coloring::MAX_COLOR_N;

/// Search limits; either one triggers `BudgetExceeded`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

impl Budget {
    pub const UNLIMITED: Budget = Budget { max_nodes: None, max_time: None };

    pub fn nodes(n: u64) -> Self {
        Budget { max_nodes: Some(n), max_time: None }
    }

    pub fn time(d: Duration) -> Self {
        Budget { max_nodes: None, max_time: Some(d) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThinnessResult {
    pub value: usize,
    pub certificate: Representation,
    pub nodes: u64,
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error("budget exceeded after {nodes} nodes; best upper bound {best}")]
    BudgetExceeded { best: usize, certificate: Representation, nodes: u64 },
    #[error("graph has {n} vertices; exact search supports at most {limit}")]
    TooLarge { n: usize, limit: usize },
}

#[inline]
fn bit(v: usize) -> u128 {
    1u128 << v
}

fn bits(mut m: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            v
        })
    })
}

struct Search {
    n: usize,
    nb: Vec<u128>,
    strong: bool,
    /// same-neighborhood vertices of larger index, which must be placed first
    twins_after: Vec<u128>,
    levels: Vec<Vec<u128>>,
    placement: Vec<usize>,
    best: usize,
    best_order: Vec<usize>,
    floor: usize,
    nodes: u64,
    budget: Budget,
    start: Instant,
    out_of_budget: bool,
}

impl Search {
    fn over_budget(&mut self) -> bool {
        if self.out_of_budget {
            return true;
        }
        if self.budget.max_nodes.is_some_and(|m| self.nodes >= m) {
            self.out_of_budget = true;
        } else if self.nodes % 256 == 0 && self.budget.max_time.is_some_and(|t| self.start.elapsed() >= t) {
            self.out_of_budget = true;
        }
        self.out_of_budget
    }

    /// Builds the order from the right: `placed` are the last vertices.
    fn dfs(&mut self, depth: usize, placed: u128) {
        let unplaced = !placed & (if self.n == 128 { u128::MAX } else { bit(self.n) - 1 });
        if unplaced == 0 {
            let k = coloring::chromatic_number(&self.levels[depth]);
            if k < self.best {
                self.best = k;
                self.best_order = self.placement.iter().rev().copied().collect();
            }
            return;
        }
        for v in bits(unplaced) {
            if self.best <= self.floor || self.over_budget() {
                return;
            }
            if self.twins_after[v] & !placed != 0 {
                continue;
            }
            self.nodes += 1;
            let (head, tail) = self.levels.split_at_mut(depth + 1);
            let known = &head[depth];
            let next = &mut tail[0];
            next.copy_from_slice(known);
            let rest = unplaced & !bit(v);
            let later_non_nb = placed & !self.nb[v];
            for u in bits(rest) {
                if self.nb[u] & later_non_nb != 0 {
                    next[u] |= bit(v);
                    next[v] |= bit(u);
                }
            }
            if self.strong {
                let earlier_non_nb = rest & !self.nb[v];
                for w in bits(placed) {
                    if self.nb[w] & earlier_non_nb != 0 {
                        next[w] |= bit(v);
                        next[v] |= bit(w);
                    }
                }
            }
            if !is_colorable(next, self.best - 1) {
                continue;
            }
            self.placement.push(v);
            self.dfs(depth + 1, placed | bit(v));
            self.placement.pop();
        }
    }
}

fn heuristic_orders(g: &Graph) -> Vec<VertexOrder> {
    let n = g.n();
    let mut out = vec![VertexOrder::identity(n), VertexOrder::identity(n).reversed()];
    for s in 0..n {
        let dist = g.bfs(s);
        let mut seq: Vec<usize> = (0..n).collect();
        seq.sort_by_key(|&v| (dist[v], v));
        let o = VertexOrder::new(seq).expect("sorted permutation");
        out.push(o.reversed());
        out.push(o);
    }
    out
}

/// Exact `kind` thinness by branch-and-bound over orders, built from the
/// right so that conflict edges touching placed vertices are final.
pub fn exact_thinness(g: &Graph, kind: ThinnessKind, budget: Budget) -> Result<ThinnessResult, SolveError> {
    let n = g.n();
    if n > MAX_SOLVER_N {
        return Err(SolveError::TooLarge { n, limit: MAX_SOLVER_N });
    }
    let mode = kind.mode();
    let empty = || Representation::new(VertexOrder::identity(n), Partition::single(n)).expect("sizes match");
    if n == 0 {
        return Ok(ThinnessResult { value: 0, certificate: empty(), nodes: 0 });
    }
    let nb = coloring::masks(g);

    let mut best: Option<Representation> = None;
    for order in heuristic_orders(g) {
        let p = min_classes_for_order(g, &order, mode, kind.independent);
        if best.as_ref().is_none_or(|b| p.k() < b.partition.k()) {
            best = Some(Representation::new(order, p).expect("sizes match"));
        }
    }
    let incumbent = best.expect("at least one heuristic order");

    let base: Vec<u128> = if kind.independent { nb.clone() } else { vec![0; n] };
    let floor = coloring::clique_number(&base).max(1);
    if incumbent.partition.k() <= floor {
        return Ok(ThinnessResult { value: incumbent.partition.k(), certificate: incumbent, nodes: 0 });
    }

    let mut twins_after = vec![0u128; n];
    for u in 0..n {
        for v in u + 1..n {
            if nb[u] & !bit(v) == nb[v] & !bit(u) {
                twins_after[u] |= bit(v);
            }
        }
    }
    let mut levels = vec![vec![0u128; n]; n + 1];
    levels[0].copy_from_slice(&base);
    let mut s = Search {
        n,
        nb,
        strong: kind.proper,
        twins_after,
        levels,
        placement: Vec::with_capacity(n),
        best: incumbent.partition.k(),
        best_order: incumbent.order.seq().to_vec(),
        floor,
        nodes: 0,
        budget,
        start: Instant::now(),
        out_of_budget: false,
    };
    s.dfs(0, 0);

    let order = VertexOrder::new(s.best_order.clone()).expect("search yields a permutation");
    let partition = min_classes_for_order(g, &order, mode, kind.independent);
    debug_assert_eq!(partition.k(), s.best);
    let certificate = Representation::new(order, partition).expect("sizes match");
    debug_assert!(verify_certificate(g, &certificate, kind));
    if s.out_of_budget {
        return Err(SolveError::BudgetExceeded { best: s.best, certificate, nodes: s.nodes });
    }
    Ok(ThinnessResult { value: s.best, certificate, nodes: s.nodes })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for v in 0..n {
            g.add_edge(v, (v + 1) % n);
        }
        g
    }

    fn value(g: &Graph, kind: ThinnessKind) -> usize {
        let r = exact_thinness(g, kind, Budget::UNLIMITED).unwrap();
        assert!(verify_certificate(g, &r.certificate, kind));
        assert_eq!(r.certificate.partition.k(), r.value);
        r.value
    }

    #[test]
    fn small_values() {
        assert_eq!(value(&Graph::new(1), ThinnessKind::THIN), 1);
        assert_eq!(value(&Graph::new(3), ThinnessKind::INDPTHIN), 1);
        assert_eq!(value(&Graph::path(5), ThinnessKind::PTHIN), 1);
        assert_eq!(value(&Graph::path(5), ThinnessKind::INDTHIN), 2);
        assert_eq!(value(&cycle(4), ThinnessKind::THIN), 2);
        assert_eq!(value(&cycle(6), ThinnessKind::THIN), 2);
        assert_eq!(value(&cycle(6), ThinnessKind::INDTHIN), 3);
        assert_eq!(value(&Graph::complete(4), ThinnessKind::INDTHIN), 4);
    }

    #[test]
    fn empty_graph_has_value_zero() {
        assert_eq!(exact_thinness(&Graph::new(0), ThinnessKind::THIN, Budget::UNLIMITED).unwrap().value, 0);
    }

    #[test]
    fn node_budget_reports_best_bound() {
        // C8 needs search beyond the heuristic orders
        let g = cycle(8);
        match exact_thinness(&g, ThinnessKind::INDPTHIN, Budget::nodes(1)) {
            Err(SolveError::BudgetExceeded { best, certificate, .. }) => {
                assert!(verify_certificate(&g, &certificate, ThinnessKind::INDPTHIN));
                assert_eq!(certificate.partition.k(), best);
            }
            Ok(r) => assert!(r.nodes <= 1),
            Err(e) => panic!("{e}"),
        }
    }
}
