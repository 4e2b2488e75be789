use crate::GraphError;
use serde::{Deserialize, Serialize};

/// A total order on `0..n`: `seq[i]` is the i-th smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VertexOrder {
    seq: Vec<usize>,
}

impl VertexOrder {
    pub fn new(seq: Vec<usize>) -> Result<Self, GraphError> {
        let n = seq.len();
        let mut seen = vec![false; n];
        for &v in &seq {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(GraphError::NotPermutation(n));
            }
        }
        Ok(VertexOrder { seq })
    }

    pub fn identity(n: usize) -> Self {
        VertexOrder { seq: (0..n).collect() }
    }

    pub fn seq(&self) -> &[usize] {
        &self.seq
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    /// `pos[v]` = rank of `v`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.seq.len()];
        for (i, &v) in self.seq.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    pub fn reversed(&self) -> Self {
        VertexOrder { seq: self.seq.iter().rev().copied().collect() }
    }
}

/// Assignment of vertices to classes `0..k`, every class nonempty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Partition {
    class_of: Vec<usize>,
    k: usize,
}

impl Partition {
    pub fn new(class_of: Vec<usize>) -> Result<Self, GraphError> {
        let k = class_of.iter().map(|&c| c + 1).max().unwrap_or(0);
        let mut used = vec![false; k];
        for &c in &class_of {
            used[c] = true;
        }
        if let Some(class) = used.iter().position(|&u| !u) {
            return Err(GraphError::EmptyClass { class, k });
        }
        Ok(Partition { class_of, k })
    }

    /// Relabels classes by first appearance so that every label is used.
    pub fn normalized(labels: &[usize]) -> Self {
        let mut map = std::collections::HashMap::new();
        let class_of = labels
            .iter()
            .map(|l| {
                let next = map.len();
                *map.entry(*l).or_insert(next)
            })
            .collect();
        let k = map.len();
        Partition { class_of, k }
    }

    pub fn single(n: usize) -> Self {
        Partition { class_of: vec![0; n], k: usize::from(n > 0) }
    }

    pub fn class_of(&self, v: usize) -> usize {
        self.class_of[v]
    }

    pub fn labels(&self) -> &[usize] {
        &self.class_of
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.class_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class_of.is_empty()
    }

    /// Members of each class, in increasing vertex index.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.k];
        for (v, &c) in self.class_of.iter().enumerate() {
            out[c].push(v);
        }
        out
    }
}

/// A vertex order together with a partition: a thinness certificate.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Representation {
    pub order: VertexOrder,
    pub partition: Partition,
}

impl Representation {
    pub fn new(order: VertexOrder, partition: Partition) -> Result<Self, GraphError> {
        if order.len() != partition.len() {
            return Err(GraphError::SizeMismatch { expected: order.len(), got: partition.len() });
        }
        Ok(Representation { order, partition })
    }

    pub fn n(&self) -> usize {
        self.order.len()
    }

    /// Members of each class listed in increasing order position.
    pub fn ordered_classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.partition.k()];
        for &v in self.order.seq() {
            out[self.partition.class_of(v)].push(v);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_must_be_permutation() {
        assert!(VertexOrder::new(vec![1, 0, 2]).is_ok());
        assert!(VertexOrder::new(vec![1, 1, 2]).is_err());
        assert!(VertexOrder::new(vec![0, 3]).is_err());
    }

    #[test]
    fn positions_invert_sequence() {
        let o = VertexOrder::new(vec![2, 0, 1]).unwrap();
        assert_eq!(o.positions(), vec![1, 2, 0]);
        assert_eq!(o.reversed().seq(), &[1, 0, 2]);
    }

    #[test]
    fn partition_requires_all_classes_used() {
        assert_eq!(Partition::new(vec![0, 2]), Err(GraphError::EmptyClass { class: 1, k: 3 }));
        let p = Partition::normalized(&[7, 3, 7]);
        assert_eq!(p.labels(), &[0, 1, 0]);
        assert_eq!(p.k(), 2);
        assert_eq!(p.classes(), vec![vec![0, 2], vec![1]]);
    }

    #[test]
    fn ordered_classes_follow_order() {
        let rep = Representation::new(
            VertexOrder::new(vec![3, 1, 0, 2]).unwrap(),
            Partition::new(vec![0, 1, 0, 0]).unwrap(),
        )
        .unwrap();
        assert_eq!(rep.ordered_classes(), vec![vec![3, 0, 2], vec![1]]);
    }
}
