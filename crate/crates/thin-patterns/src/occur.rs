use thin_graph::{Graph, VertexOrder};

use crate::pattern::{Flavor, Pattern};
use crate::PatternError;

/// An ordered graph in the shape a pattern flavor expects.
#[derive(Debug, Clone, Copy)]
pub enum Host<'a> {
    /// For plain patterns.
    Ordered(&'a VertexOrder),
    /// For bicolored patterns; `white[v]` is the color of vertex `v`.
    Colored { order: &'a VertexOrder, white: &'a [bool] },
    /// For bipartite patterns: the ordered unprimed and primed sides.
    Sided { a: &'a [usize], b: &'a [usize] },
}

impl Host<'_> {
    fn label(&self) -> &'static str {
        match self {
            Host::Ordered(_) => "plain",
            Host::Colored { .. } => "bicolored",
            Host::Sided { .. } => "bipartite",
        }
    }
}

/// A pattern flattened into lookup tables.
#[derive(Debug, Clone)]
pub(crate) struct Compiled {
    size: usize,
    rel: Vec<Option<bool>>,
    lane: Vec<usize>,
    color: Vec<Option<bool>>,
    last_in_lane: [Option<usize>; 2],
}

impl Compiled {
    pub(crate) fn new(p: &Pattern) -> Self {
        let size = p.size;
        let mut rel = vec![None; size * size];
        for a in 0..size {
            for b in 0..size {
                if a != b {
                    rel[a * size + b] = p.relation(a, b);
                }
            }
        }
        let lane: Vec<usize> = (0..size)
            .map(|v| match p.flavor {
                Flavor::Bipartite { left } => usize::from(v >= left),
                _ => 0,
            })
            .collect();
        let color = (0..size)
            .map(|v| matches!(p.flavor, Flavor::Bicolored { .. }).then(|| p.is_white(v)))
            .collect();
        let mut last_in_lane = [None; 2];
        for (v, &l) in lane.iter().enumerate() {
            last_in_lane[l] = Some(v);
        }
        Compiled { size, rel, lane, color, last_in_lane }
    }

    pub(crate) fn uses_lane(&self, lane: usize) -> bool {
        self.last_in_lane[lane].is_some()
    }
}

/// Vertex sequences the pattern lanes map into.
pub(crate) struct Lanes<'a> {
    pub g: &'a Graph,
    pub seqs: [&'a [usize]; 2],
    pub white: Option<&'a [bool]>,
}

impl Lanes<'_> {
    /// First occurrence (pattern vertex -> host vertex). With `anchor`, the
    /// last pattern vertex of that lane must sit on the lane's final vertex.
    pub(crate) fn find(&self, c: &Compiled, anchor: Option<usize>) -> Option<Vec<usize>> {
        if let Some(l) = anchor {
            if !c.uses_lane(l) || self.seqs[l].is_empty() {
                return None;
            }
        }
        let mut map = Vec::with_capacity(c.size);
        let mut pos = Vec::with_capacity(c.size);
        self.extend(c, anchor, &mut map, &mut pos).then_some(map)
    }

    fn extend(&self, c: &Compiled, anchor: Option<usize>, map: &mut Vec<usize>, pos: &mut Vec<usize>) -> bool {
        let i = map.len();
        if i == c.size {
            return true;
        }
        let lane = c.lane[i];
        let seq = self.seqs[lane];
        let last = c.last_in_lane[lane].expect("lane in use");
        let start = if i > 0 && c.lane[i - 1] == lane { pos[i - 1] + 1 } else { 0 };
        let room = last - i;
        let (lo, hi) = match anchor {
            Some(l) if l == lane && i == last => (start.max(seq.len() - 1), seq.len()),
            _ => (start, seq.len().saturating_sub(room)),
        };
        for (p, &v) in seq.iter().enumerate().take(hi).skip(lo) {
            if let (Some(want), Some(white)) = (c.color[i], self.white) {
                if white[v] != want {
                    continue;
                }
            }
            let fits = (0..i).all(|j| match c.rel[j * c.size + i] {
                Some(e) => self.g.has_edge(map[j], v) == e,
                None => true,
            });
            if !fits {
                continue;
            }
            map.push(v);
            pos.push(p);
            if self.extend(c, anchor, map, pos) {
                return true;
            }
            map.pop();
            pos.pop();
        }
        false
    }
}

fn check_order(g: &Graph, order: &VertexOrder) -> Result<(), PatternError> {
    if order.len() != g.n() {
        return Err(PatternError::BadHost(format!("order has {} vertices, graph {}", order.len(), g.n())));
    }
    Ok(())
}

/// First occurrence of `pattern` in the ordered graph, as host vertices
/// listed in pattern-vertex order (unprimed side first).
pub fn occurs(g: &Graph, host: Host<'_>, pattern: &Pattern) -> Result<Option<Vec<usize>>, PatternError> {
    let mismatch = || PatternError::FlavorMismatch {
        pattern: pattern.name.clone(),
        flavor: pattern.flavor.label(),
        host: host.label(),
    };
    let lanes = match (host, &pattern.flavor) {
        (Host::Ordered(order), Flavor::Plain) => {
            check_order(g, order)?;
            Lanes { g, seqs: [order.seq(), &[]], white: None }
        }
        (Host::Colored { order, white }, Flavor::Bicolored { .. }) => {
            check_order(g, order)?;
            if white.len() != g.n() {
                return Err(PatternError::BadHost(format!("{} colors for {} vertices", white.len(), g.n())));
            }
            Lanes { g, seqs: [order.seq(), &[]], white: Some(white) }
        }
        (Host::Sided { a, b }, Flavor::Bipartite { .. }) => {
            let mut seen = vec![false; g.n()];
            for &v in a.iter().chain(b) {
                if v >= g.n() || std::mem::replace(&mut seen[v], true) {
                    return Err(PatternError::BadHost(format!("vertex {v} repeated or out of range")));
                }
            }
            Lanes { g, seqs: [a, b], white: None }
        }
        _ => return Err(mismatch()),
    };
    Ok(lanes.find(&Compiled::new(pattern), None))
}
