use std::collections::BTreeSet;

use crate::{BoxError, BoxModel};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Lower,
    Upper,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Diagonal {
    /// Weakly 2-diagonal, and some translation puts lower-diagonal corners
    /// in the closed 4th quadrant and upper ones in the closed 2nd quadrant
    /// with `d1 < 0 < d2`.
    TwoDiagonal,
    /// Distinct corners on exactly two diagonals `d1 < d2`.
    WeaklyTwoDiagonal,
    Neither,
}

impl std::fmt::Display for Diagonal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Diagonal::TwoDiagonal => "two_diagonal",
            Diagonal::WeaklyTwoDiagonal => "weakly_two_diagonal",
            Diagonal::Neither => "neither",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalReport {
    pub diagonal: Diagonal,
    /// Offsets `y2 - x2` of the corners, when there are exactly two.
    pub offsets: Option<(i64, i64)>,
    /// Side per vertex; empty unless weakly 2-diagonal.
    pub sides: Vec<Side>,
    /// Two vertices with the same upper-right corner, if any.
    pub witness: Option<(usize, usize)>,
}

fn duplicate_corner(m: &BoxModel) -> Option<(usize, usize)> {
    let mut seen = std::collections::HashMap::new();
    for b in &m.boxes {
        if let Some(&u) = seen.get(&b.corner()) {
            return Some((u, b.vertex));
        }
        seen.insert(b.corner(), b.vertex);
    }
    None
}

fn offsets(m: &BoxModel) -> BTreeSet<i64> {
    m.boxes.iter().map(|b| b.y2 - b.x2).collect()
}

/// Strongest diagonal property of the model, up to translation.
pub fn check_diagonal(m: &BoxModel) -> DiagonalReport {
    let neither = |witness| DiagonalReport { diagonal: Diagonal::Neither, offsets: None, sides: Vec::new(), witness };
    if let Some(w) = duplicate_corner(m) {
        return neither(Some(w));
    }
    let offs: Vec<i64> = offsets(m).into_iter().collect();
    let &[d1, d2] = offs.as_slice() else {
        return neither(None);
    };
    let sides: Vec<Side> = m.boxes.iter().map(|b| if b.y2 - b.x2 == d1 { Side::Lower } else { Side::Upper }).collect();
    let corners = |s: Side| m.boxes.iter().zip(&sides).filter(move |(_, &t)| t == s).map(|(b, _)| b.corner());
    // origin (ox, oy) must satisfy upper x <= ox <= lower x, lower y <= oy <= upper y
    let ox_lo = corners(Side::Upper).map(|c| c.0).max().unwrap();
    let ox_hi = corners(Side::Lower).map(|c| c.0).min().unwrap();
    let oy_lo = corners(Side::Lower).map(|c| c.1).max().unwrap();
    let oy_hi = corners(Side::Upper).map(|c| c.1).min().unwrap();
    // and the shifted offsets d - (oy - ox) must straddle zero
    let fits = ox_lo <= ox_hi && oy_lo <= oy_hi && {
        let (lo, hi) = (oy_lo - ox_hi, oy_hi - ox_lo);
        lo < d2 && hi > d1
    };
    let diagonal = if fits { Diagonal::TwoDiagonal } else { Diagonal::WeaklyTwoDiagonal };
    DiagonalReport { diagonal, offsets: Some((d1, d2)), sides, witness: None }
}

/// `Ok(None)` when every disjoint (upper, lower) pair is separated by the
/// vertical prolongation of the upper box or the horizontal prolongation
/// of the lower box; otherwise the first violating `(upper, lower)` pair.
pub fn check_blocking(m: &BoxModel) -> Result<Option<(usize, usize)>, BoxError> {
    let report = check_diagonal(m);
    if report.diagonal != Diagonal::TwoDiagonal {
        return Err(BoxError::Precondition { required: "2-diagonal", witness: report.witness });
    }
    for (u, su) in m.boxes.iter().zip(&report.sides) {
        if *su != Side::Upper {
            continue;
        }
        for (l, sl) in m.boxes.iter().zip(&report.sides) {
            if *sl == Side::Lower && !u.meets(l) && !u.x_overlaps(l) && !l.y_overlaps(u) {
                return Ok(Some((u.vertex, l.vertex)));
            }
        }
    }
    Ok(None)
}

/// `Ok(None)` when same-diagonal boxes ordered by corner have monotone
/// lower-left corners; otherwise the first violating pair `(b, b')` with
/// `x2 < x2'`. Needs distinct corners on at most two diagonals.
pub fn check_bi_semi_proper(m: &BoxModel) -> Result<Option<(usize, usize)>, BoxError> {
    if let Some(w) = duplicate_corner(m) {
        return Err(BoxError::Precondition { required: "weakly 2-diagonal", witness: Some(w) });
    }
    if offsets(m).len() > 2 {
        return Err(BoxError::Precondition { required: "weakly 2-diagonal", witness: None });
    }
    for a in &m.boxes {
        for b in &m.boxes {
            let same = a.y2 - a.x2 == b.y2 - b.x2;
            if same && a.x2 < b.x2 && (a.x1 > b.x1 || a.y1 > b.y1) {
                return Ok(Some((a.vertex, b.vertex)));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rect;

    fn rect(vertex: usize, x1: i64, x2: i64, y1: i64, y2: i64) -> Rect {
        Rect { vertex, x1, x2, y1, y2, class: None }
    }

    fn model(boxes: Vec<Rect>) -> BoxModel {
        BoxModel::new(0, 0, boxes).unwrap()
    }

    #[test]
    fn one_diagonal_is_neither() {
        let m = model(vec![rect(0, 0, 2, 0, 2), rect(1, 2, 4, 2, 4)]);
        assert_eq!(check_diagonal(&m).diagonal, Diagonal::Neither);
    }

    #[test]
    fn duplicate_corner_has_witness() {
        let m = model(vec![rect(0, 0, 2, 0, 2), rect(1, 1, 2, 1, 2)]);
        let r = check_diagonal(&m);
        assert_eq!((r.diagonal, r.witness), (Diagonal::Neither, Some((0, 1))));
    }

    #[test]
    fn swapped_quadrants_are_only_weak() {
        // lower-diagonal corner up and to the left of the upper-diagonal one
        let m = model(vec![rect(0, -4, -2, -8, -6), rect(1, 8, 10, 10, 14)]);
        let r = check_diagonal(&m);
        assert_eq!(r.offsets, Some((-4, 4)));
        assert_eq!(r.diagonal, Diagonal::WeaklyTwoDiagonal);
        assert!(check_blocking(&m).is_err());
    }

    #[test]
    fn far_apart_boxes_are_not_blocking() {
        // upper box at top-left, lower box at bottom-right, no shared projection
        let m = model(vec![rect(0, -10, -8, 8, 10), rect(1, 8, 10, -10, -8)]);
        assert_eq!(check_diagonal(&m).diagonal, Diagonal::TwoDiagonal);
        assert_eq!(check_blocking(&m).unwrap(), Some((0, 1)));
    }

    #[test]
    fn nested_same_diagonal_is_not_bi_semi_proper() {
        let m = model(vec![rect(0, 0, 4, 0, 4), rect(1, 2, 6, -2, 6)]);
        assert_eq!(check_bi_semi_proper(&m).unwrap(), Some((0, 1)));
        assert_eq!(check_bi_semi_proper(&model(vec![rect(0, 0, 1, 0, 1)])).unwrap(), None);
    }
}
