//! Seedable random instances.

use rand::seq::SliceRandom;
use rand::Rng;
use thin_graph::{Graph, Partition, Representation, VertexOrder};

/// `G(n, p)`.
pub fn gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Random order and a random partition into exactly `k` nonempty classes.
pub fn representation<R: Rng>(n: usize, k: usize, rng: &mut R) -> Representation {
    assert!(k >= 1 && k <= n.max(1), "need 1 <= k <= n");
    let mut seq: Vec<usize> = (0..n).collect();
    seq.shuffle(rng);
    let mut labels: Vec<usize> = (0..n).map(|i| if i < k { i } else { rng.gen_range(0..k) }).collect();
    labels.shuffle(rng);
    if n == 0 {
        return Representation::new(VertexOrder::identity(0), Partition::single(0)).expect("empty");
    }
    Representation::new(VertexOrder::new(seq).expect("shuffled"), Partition::new(labels).expect("all used"))
        .expect("sizes match")
}

/// A random graph for which `rep` is consistent (strongly, if `strong`).
///
/// Each vertex is joined, within every class, to a random suffix of the
/// earlier members of that class. In strong mode a vertex that has missed a
/// later member of class `d` is barred from all later members of `d`.
pub fn consistent_graph<R: Rng>(rep: &Representation, strong: bool, rng: &mut R) -> Graph {
    let n = rep.n();
    let k = rep.partition.k();
    let mut g = Graph::new(n);
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); k];
    let mut closed = vec![vec![false; k]; n];
    for &t in rep.order.seq() {
        let d = rep.partition.class_of(t);
        for class in &members {
            let first_allowed = if strong {
                class.iter().rposition(|&r| closed[r][d]).map_or(0, |i| i + 1)
            } else {
                0
            };
            let start = rng.gen_range(first_allowed..=class.len());
            for &r in &class[start..] {
                g.add_edge(r, t);
            }
        }
        if strong {
            for class in &members {
                for &r in class {
                    if !g.has_edge(r, t) {
                        closed[r][d] = true;
                    }
                }
            }
        }
        members[d].push(t);
    }
    g
}

/// Random bipartite graph on sides `0..a` and `a..a+b`.
pub fn bipartite<R: Rng>(a: usize, b: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::new(a + b);
    for u in 0..a {
        for v in a..a + b {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}
