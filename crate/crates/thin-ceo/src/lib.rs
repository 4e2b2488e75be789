//! Given a partition and a total order on each class, decide whether the
//! class orders extend to one total order (strongly) consistent with the
//! partition, via a precedence digraph and topological sorting.

use serde::{Deserialize, Serialize};
use thin_graph::{io, Digraph, Graph, GraphError, Partition, Representation, TopoOutcome, VertexOrder};
use thin_order::{consistency_violation, ConsistencyMode, Triple};
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CeoError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("order of class {class} is not a permutation of its members")]
    NotTotal { class: usize },
    #[error("order of class {class} is not {mode:?} on its own: r={}, s={}, t={}", .witness.r, .witness.s, .witness.t)]
    ClassOrderInconsistent { class: usize, mode: ConsistencyMode, witness: Triple },
    #[error("invalid instance: {0}")]
    Json(String),
}

/// A total order of each class; vertices of different classes are
/// incomparable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassOrder {
    per_class: Vec<Vec<usize>>,
}

impl ClassOrder {
    /// Checks that `per_class[c]` lists exactly the members of class `c`.
    pub fn new(partition: &Partition, per_class: Vec<Vec<usize>>) -> Result<Self, CeoError> {
        let members = partition.classes();
        if per_class.len() != members.len() {
            return Err(CeoError::NotTotal { class: per_class.len().min(members.len()) });
        }
        for (c, (listed, actual)) in per_class.iter().zip(&members).enumerate() {
            let mut sorted = listed.clone();
            sorted.sort_unstable();
            if &sorted != actual {
                return Err(CeoError::NotTotal { class: c });
            }
        }
        Ok(ClassOrder { per_class })
    }

    /// The class orders induced by a total order.
    pub fn from_representation(rep: &Representation) -> Self {
        ClassOrder { per_class: rep.ordered_classes() }
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.per_class
    }

    /// Whether `order` restricted to each class equals this class order.
    pub fn is_extended_by(&self, order: &VertexOrder) -> bool {
        let pos = order.positions();
        self.per_class.iter().all(|c| c.windows(2).all(|w| pos[w[0]] < pos[w[1]]))
    }
}

/// Validates sizes and class orders, then checks each class order against
/// the graph induced by its class.
fn check_instance(g: &Graph, partition: &Partition, porder: &ClassOrder, mode: ConsistencyMode) -> Result<(), CeoError> {
    if partition.len() != g.n() {
        return Err(GraphError::SizeMismatch { expected: g.n(), got: partition.len() }.into());
    }
    ClassOrder::new(partition, porder.per_class.clone())?;
    for (class, seq) in porder.per_class.iter().enumerate() {
        let sub = g.induced_subgraph(seq)?;
        let rep = Representation::new(VertexOrder::identity(seq.len()), Partition::single(seq.len()))?;
        if let Some(t) = consistency_violation(&sub, &rep, mode)? {
            let witness = Triple { r: seq[t.r], s: seq[t.s], t: seq[t.t], reversed: t.reversed };
            return Err(CeoError::ClassOrderInconsistent { class, mode, witness });
        }
    }
    Ok(())
}

/// The precedence digraph: `u -> w` means `u` must precede `w`.
///
/// Contains every within-class arc `v -> v'` for `v < v'`. For a
/// non-adjacent pair `u`, `w` in different classes, `u -> w` when `u` is
/// adjacent to some `w' < w` of `w`'s class; strong mode also adds it when
/// some `u' > u` of `u`'s class is adjacent to `w`.
pub fn build_ceo_digraph(
    g: &Graph,
    partition: &Partition,
    porder: &ClassOrder,
    mode: ConsistencyMode,
) -> Result<Digraph, CeoError> {
    if partition.len() != g.n() {
        return Err(GraphError::SizeMismatch { expected: g.n(), got: partition.len() }.into());
    }
    ClassOrder::new(partition, porder.per_class.clone())?;
    let n = g.n();
    let mut d = Digraph::new(n);
    let mut rank = vec![0; n];
    for seq in &porder.per_class {
        for (i, &v) in seq.iter().enumerate() {
            rank[v] = i;
            for &w in &seq[i + 1..] {
                d.add_arc(v, w);
            }
        }
    }
    let classes = &porder.per_class;
    for u in 0..n {
        let cu = partition.class_of(u);
        for w in 0..n {
            let cw = partition.class_of(w);
            if cu == cw || g.has_edge(u, w) {
                continue;
            }
            let earlier_w_nb = classes[cw][..rank[w]].iter().any(|&x| g.has_edge(u, x));
            let later_u_nb = mode == ConsistencyMode::Strong && classes[cu][rank[u] + 1..].iter().any(|&x| g.has_edge(x, w));
            if earlier_w_nb || later_u_nb {
                d.add_arc(u, w);
            }
        }
    }
    Ok(d)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CeoOutcome {
    Extended(VertexOrder),
    /// Closed directed cycle `[v0, v1, ..., v0]` of the precedence digraph.
    Infeasible { cycle: Vec<usize> },
}

/// Extends `porder` to a total order (strongly) consistent with
/// `partition`, or reports a precedence cycle. Ties go to the smallest
/// available vertex.
pub fn solve_ceo(g: &Graph, partition: &Partition, porder: &ClassOrder, mode: ConsistencyMode) -> Result<CeoOutcome, CeoError> {
    check_instance(g, partition, porder, mode)?;
    let d = build_ceo_digraph(g, partition, porder, mode)?;
    Ok(match d.topological_sort() {
        TopoOutcome::Order(o) => CeoOutcome::Extended(o),
        TopoOutcome::Cycle(cycle) => CeoOutcome::Infeasible { cycle },
    })
}

/// JSON instance: `{"graph": {...}, "classes": [...], "class_orders": [[...]], "mode": "..."}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CeoInstance {
    pub graph: serde_json::Value,
    pub classes: Vec<usize>,
    pub class_orders: Vec<Vec<usize>>,
    pub mode: ConsistencyMode,
}

impl CeoInstance {
    pub fn parse(input: &str) -> Result<(Graph, Partition, ClassOrder, ConsistencyMode), CeoError> {
        let inst: CeoInstance = serde_json::from_str(input).map_err(|e| CeoError::Json(e.to_string()))?;
        let g = io::parse_json(&inst.graph.to_string())?.graph;
        let p = Partition::new(inst.classes)?;
        let po = ClassOrder::new(&p, inst.class_orders)?;
        Ok((g, p, po, inst.mode))
    }
}
