use serde::{Deserialize, Serialize};
use thin_graph::Graph;

use crate::VpgError;

/// Most points a path may have (three bends).
pub const MAX_POINTS: usize = 5;

/// Axis-parallel polyline with alternating orientation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridPath {
    #[serde(rename = "v")]
    pub vertex: usize,
    #[serde(rename = "pts")]
    pub points: Vec<(i64, i64)>,
}

/// Direction signs of the two arms of a one-bend path, seen from the corner.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Shape {
    Segment,
    /// `dx`, `dy` in `{-1, 1}`: the horizontal arm points along `dx` and the
    /// vertical arm along `dy`. `L` itself is `(1, 1)`.
    L { dx: i8, dy: i8 },
    Bent(usize),
}

impl GridPath {
    pub fn new(vertex: usize, points: Vec<(i64, i64)>) -> Result<Self, VpgError> {
        if points.len() < 2 || points.len() > MAX_POINTS {
            return Err(VpgError::InvalidPath(format!("vertex {vertex}: {} points, need 2..={MAX_POINTS}", points.len())));
        }
        let mut prev_horizontal = None;
        for w in points.windows(2) {
            let (a, b) = (w[0], w[1]);
            let horizontal = match (a.0 == b.0, a.1 == b.1) {
                (true, true) => return Err(VpgError::InvalidPath(format!("vertex {vertex}: zero-length segment"))),
                (false, false) => return Err(VpgError::InvalidPath(format!("vertex {vertex}: diagonal segment"))),
                (_, h) => h,
            };
            if prev_horizontal == Some(horizontal) {
                return Err(VpgError::InvalidPath(format!("vertex {vertex}: consecutive segments are parallel")));
            }
            prev_horizontal = Some(horizontal);
        }
        Ok(GridPath { vertex, points })
    }

    pub fn bends(&self) -> usize {
        self.points.len() - 2
    }

    pub fn segments(&self) -> impl Iterator<Item = ((i64, i64), (i64, i64))> + '_ {
        self.points.windows(2).map(|w| (w[0], w[1]))
    }

    pub fn meets(&self, other: &GridPath) -> bool {
        self.segments().any(|s| other.segments().any(|t| segments_meet(s, t)))
    }

    pub fn shape(&self) -> Shape {
        match self.points.as_slice() {
            [_, _] => Shape::Segment,
            [a, c, b] => {
                let (h, v) = if a.1 == c.1 { (a, b) } else { (b, a) };
                Shape::L { dx: (h.0 - c.0).signum() as i8, dy: (v.1 - c.1).signum() as i8 }
            }
            p => Shape::Bent(p.len() - 2),
        }
    }

    /// Corner and the far ends of the horizontal and vertical arms.
    pub fn l_parts(&self) -> Option<((i64, i64), (i64, i64), (i64, i64))> {
        match self.points.as_slice() {
            [a, c, b] if a.1 == c.1 => Some((*c, *a, *b)),
            [a, c, b] => Some((*c, *b, *a)),
            _ => None,
        }
    }
}

/// Closed axis-parallel segments meet iff their bounding boxes do.
pub(crate) fn segments_meet(s: ((i64, i64), (i64, i64)), t: ((i64, i64), (i64, i64))) -> bool {
    let span = |a: i64, b: i64| (a.min(b), a.max(b));
    let (sx, sy) = (span(s.0 .0, s.1 .0), span(s.0 .1, s.1 .1));
    let (tx, ty) = (span(t.0 .0, t.1 .0), span(t.0 .1, t.1 .1));
    sx.0 <= tx.1 && tx.0 <= sx.1 && sy.0 <= ty.1 && ty.0 <= sy.1
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridPathModel {
    pub paths: Vec<GridPath>,
}

impl GridPathModel {
    /// Sorts by vertex and checks indices are `0..n` and every path is valid.
    pub fn new(mut paths: Vec<GridPath>) -> Result<Self, VpgError> {
        paths.sort_by_key(|p| p.vertex);
        for (i, p) in paths.iter().enumerate() {
            if p.vertex != i {
                return Err(VpgError::InvalidPath(format!("vertex indices must be 0..{}; found {}", paths.len(), p.vertex)));
            }
            GridPath::new(p.vertex, p.points.clone())?;
        }
        Ok(GridPathModel { paths })
    }

    pub fn n(&self) -> usize {
        self.paths.len()
    }

    pub fn max_bends(&self) -> usize {
        self.paths.iter().map(GridPath::bends).max().unwrap_or(0)
    }

    pub fn intersection_graph(&self) -> Graph {
        let mut g = Graph::new(self.n());
        for (i, p) in self.paths.iter().enumerate() {
            for q in &self.paths[i + 1..] {
                if p.meets(q) {
                    g.add_edge(p.vertex, q.vertex);
                }
            }
        }
        g
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("model serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, VpgError> {
        let m: GridPathModel = serde_json::from_str(s).map_err(|e| VpgError::InvalidPath(e.to_string()))?;
        GridPathModel::new(m.paths)
    }

    /// SVG with the box renderer's scale; `class_of` colors each path.
    pub fn to_svg(&self, class_of: impl Fn(usize) -> Option<u8>, names: Option<&[String]>) -> String {
        use std::fmt::Write;
        use thin_box::svg::{class_color, Canvas};
        let c = Canvas::fit(self.paths.iter().flat_map(|p| p.points.iter().copied()));
        let mut out = c.header();
        for p in &self.paths {
            let pts: Vec<String> = p
                .points
                .iter()
                .map(|&(x, y)| {
                    let (px, py) = c.px(x, y);
                    format!("{px},{py}")
                })
                .collect();
            let color = class_color(class_of(p.vertex));
            let label = names.and_then(|n| n.get(p.vertex)).cloned().unwrap_or_else(|| p.vertex.to_string());
            let _ = writeln!(out, "<polyline points=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"2\"><title>{label}</title></polyline>", pts.join(" "));
        }
        out.push_str("</svg>\n");
        out
    }
}

/// The path intersection graph.
pub fn path_intersection_graph(m: &GridPathModel) -> Graph {
    m.intersection_graph()
}
