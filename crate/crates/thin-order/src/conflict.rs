use thin_graph::{Graph, Partition, VertexOrder};

use crate::coloring;
use crate::ConsistencyMode;

fn meets(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).any(|(x, y)| x & y != 0)
}

/// Bitset of `set` minus the neighbors of `v`.
fn minus_row(set: &[u64], g: &Graph, v: usize) -> Vec<u64> {
    set.iter().zip(g.row(v)).map(|(s, r)| s & !r).collect()
}

/// The conflict graph of `order`: a partition is consistent with `order`
/// (strongly, in strong mode) iff it properly colors this graph.
///
/// For `v < w`: edge when some `z > w` has `z ~ v`, `z !~ w`; strong mode also
/// when some `x < v` has `x ~ w`, `x !~ v`.
pub fn conflict_graph(g: &Graph, order: &VertexOrder, mode: ConsistencyMode) -> Graph {
    let n = g.n();
    let seq = order.seq();
    let mut h = Graph::new(n);
    if n == 0 {
        return h;
    }
    let words = g.row(0).len();
    // after[i] = vertices at positions > i
    let mut after = vec![vec![0u64; words]; n];
    let mut acc = vec![0u64; words];
    for i in (0..n).rev() {
        after[i].clone_from(&acc);
        acc[seq[i] / 64] |= 1 << (seq[i] % 64);
    }
    for (j, &w) in seq.iter().enumerate() {
        let later_non_nb = minus_row(&after[j], g, w);
        for &v in &seq[..j] {
            if meets(g.row(v), &later_non_nb) {
                h.add_edge(v, w);
            }
        }
    }
    if mode == ConsistencyMode::Strong {
        let mut before = vec![0u64; words];
        for (i, &v) in seq.iter().enumerate() {
            let earlier_non_nb = minus_row(&before, g, v);
            for &w in &seq[i + 1..] {
                if meets(g.row(w), &earlier_non_nb) {
                    h.add_edge(v, w);
                }
            }
            before[v / 64] |= 1 << (v % 64);
        }
    }
    h
}

/// Fewest classes consistent with `order`; with `independent` the classes
/// must also be independent sets of `g`.
pub fn min_classes_for_order(g: &Graph, order: &VertexOrder, mode: ConsistencyMode, independent: bool) -> Partition {
    let mut h = conflict_graph(g, order, mode);
    if independent {
        for (u, v) in g.edges() {
            h.add_edge(u, v);
        }
    }
    Partition::normalized(&coloring::min_coloring(&coloring::masks(&h)))
}
