use serde::{Deserialize, Serialize};
use thin_graph::Graph;

use crate::BoxError;

/// Closed axis-parallel rectangle `[x1, x2] x [y1, y2]` in doubled units.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Rect {
    #[serde(rename = "v")]
    pub vertex: usize,
    pub x1: i64,
    pub x2: i64,
    pub y1: i64,
    pub y2: i64,
    /// 1 for the lower diagonal, 2 for the upper one, when known.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class: Option<u8>,
}

impl Rect {
    pub fn corner(&self) -> (i64, i64) {
        (self.x2, self.y2)
    }

    pub fn x_overlaps(&self, o: &Rect) -> bool {
        self.x1 <= o.x2 && o.x1 <= self.x2
    }

    pub fn y_overlaps(&self, o: &Rect) -> bool {
        self.y1 <= o.y2 && o.y1 <= self.y2
    }

    pub fn meets(&self, o: &Rect) -> bool {
        self.x_overlaps(o) && self.y_overlaps(o)
    }

    pub fn translated(&self, dx: i64, dy: i64) -> Rect {
        Rect { x1: self.x1 + dx, x2: self.x2 + dx, y1: self.y1 + dy, y2: self.y2 + dy, ..*self }
    }
}

/// One rectangle per vertex plus the diagonal offsets `y = x + d` the
/// builder aimed for (informational; predicates recompute them).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxModel {
    pub d1: i64,
    pub d2: i64,
    pub boxes: Vec<Rect>,
}

impl BoxModel {
    /// Sorts boxes by vertex and checks indices are `0..n` and every
    /// rectangle is non-degenerate.
    pub fn new(d1: i64, d2: i64, mut boxes: Vec<Rect>) -> Result<Self, BoxError> {
        boxes.sort_by_key(|b| b.vertex);
        for (i, b) in boxes.iter().enumerate() {
            if b.vertex != i {
                return Err(BoxError::Invalid(format!("vertex indices must be 0..{}; found {}", boxes.len(), b.vertex)));
            }
            if b.x1 >= b.x2 || b.y1 >= b.y2 {
                return Err(BoxError::Invalid(format!("box of vertex {i} is degenerate")));
            }
        }
        Ok(BoxModel { d1, d2, boxes })
    }

    pub fn n(&self) -> usize {
        self.boxes.len()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("model serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, BoxError> {
        let m: BoxModel = serde_json::from_str(s).map_err(|e| BoxError::Invalid(e.to_string()))?;
        BoxModel::new(m.d1, m.d2, m.boxes)
    }

    /// Edge `uv` iff the closed rectangles of `u` and `v` share a point.
    pub fn intersection_graph(&self) -> Graph {
        let mut g = Graph::new(self.n());
        for (i, a) in self.boxes.iter().enumerate() {
            for b in &self.boxes[i + 1..] {
                if a.meets(b) {
                    g.add_edge(a.vertex, b.vertex);
                }
            }
        }
        g
    }
}
