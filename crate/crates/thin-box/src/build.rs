use thin_graph::{Graph, Representation};
use thin_order::{consistency_violation, ConsistencyMode};

use crate::{BoxError, BoxModel, Rect, Side};

/// Per-vertex stopping indices, 1-based ranks within classes.
///
/// `own[x]`: smallest rank of an earlier neighbor of `x` in its own class,
/// or the rank of `x` itself when there is none. `other[x]`: largest rank
/// of an earlier non-neighbor of `x` in the other class, or 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UValues {
    pub rank: Vec<usize>,
    pub own: Vec<usize>,
    pub other: Vec<usize>,
}

/// Stopping indices for a 2-class representation.
pub fn u_values(g: &Graph, rep: &Representation) -> UValues {
    let n = g.n();
    let mut rank = vec![0; n];
    let mut own = vec![0; n];
    let mut other = vec![0; n];
    let mut seen: [Vec<usize>; 2] = [Vec::new(), Vec::new()];
    for &x in rep.order.seq() {
        let c = rep.partition.class_of(x);
        let same = &seen[c];
        rank[x] = same.len() + 1;
        own[x] = same.iter().position(|&y| g.has_edge(x, y)).map_or(rank[x], |j| j + 1);
        other[x] = seen[1 - c].iter().rposition(|&y| !g.has_edge(x, y)).map_or(0, |j| j + 1);
        seen[c].push(x);
    }
    UValues { rank, own, other }
}

pub(crate) fn check_two_class(g: &Graph, rep: &Representation) -> Result<(), BoxError> {
    if rep.partition.k() != 2 {
        return Err(BoxError::NotTwoClasses { k: rep.partition.k() });
    }
    match consistency_violation(g, rep, ConsistencyMode::Consistent)? {
        Some(t) => Err(BoxError::Inconsistent(t)),
        None => Ok(()),
    }
}

/// The two-diagonal model: class 0 (`n1` vertices) on the lower diagonal
/// with corners `(i + n2, i)`, class 1 (`n2` vertices) on the upper one with
/// corners `(i, i + n1)`. Lower-left corners stop half a unit short of the
/// last earlier non-neighbor of the other class and reach the first
/// earlier neighbor of their own class.
pub fn build_m1(g: &Graph, rep: &Representation) -> Result<BoxModel, BoxError> {
    check_two_class(g, rep)?;
    let u = u_values(g, rep);
    let sizes: Vec<usize> = rep.partition.classes().iter().map(Vec::len).collect();
    let (n1, n2) = (sizes[0] as i64, sizes[1] as i64);
    let boxes = (0..g.n())
        .map(|x| {
            let (i, own, other) = (u.rank[x] as i64, u.own[x] as i64, u.other[x] as i64);
            if rep.partition.class_of(x) == 0 {
                Rect { vertex: x, x1: 2 * other + 1, x2: 2 * (i + n2), y1: 2 * own - 1, y2: 2 * i, class: Some(1) }
            } else {
                Rect { vertex: x, x1: 2 * own - 1, x2: 2 * i, y1: 2 * other + 1, y2: 2 * (i + n1), class: Some(2) }
            }
        })
        .collect();
    BoxModel::new(-2 * n2, 2 * n1, boxes)
}

/// The grounded model: shifts the first lower-diagonal corner onto the
/// `y` axis and the first upper-diagonal corner onto the `x` axis, then
/// clips to the third quadrant.
pub fn build_m2(m1: &BoxModel) -> Result<BoxModel, BoxError> {
    let report = crate::check_diagonal(m1);
    if report.sides.is_empty() {
        return Err(BoxError::Precondition { required: "weakly 2-diagonal", witness: report.witness });
    }
    let on = |s: Side| m1.boxes.iter().zip(&report.sides).filter(move |(_, &t)| t == s).map(|(b, _)| b);
    let ox = on(Side::Lower).map(|b| b.x2).min().expect("two diagonals");
    let oy = on(Side::Upper).map(|b| b.y2).min().expect("two diagonals");
    let mut boxes = Vec::with_capacity(m1.n());
    for b in &m1.boxes {
        let t = b.translated(-ox, -oy);
        let clipped = Rect { x2: t.x2.min(0), y2: t.y2.min(0), ..t };
        if clipped.x1 >= clipped.x2 || clipped.y1 >= clipped.y2 {
            return Err(BoxError::Invalid(format!("box of vertex {} vanishes outside the third quadrant", b.vertex)));
        }
        boxes.push(clipped);
    }
    BoxModel::new(m1.d1 - oy + ox, m1.d2 - oy + ox, boxes)
}
