use thin_box::{build_m1, build_m2};
use thin_graph::{Graph, Representation};

use crate::path::segments_meet;
use crate::{GridPath, GridPathModel, VpgError};

pub(crate) fn check_independent(g: &Graph, rep: &Representation) -> Result<(), VpgError> {
    for (u, v) in g.edges() {
        if rep.partition.class_of(u) == rep.partition.class_of(v) {
            return Err(VpgError::NotIndependent { class: rep.partition.class_of(u) });
        }
    }
    Ok(())
}

/// L paths from the grounded rectangles (top and right sides, reflected
/// through the origin), with the diagonal tag of each source box.
fn l_paths(g: &Graph, rep: &Representation) -> Result<Vec<(GridPath, u8)>, VpgError> {
    let m2 = build_m2(&build_m1(g, rep)?)?;
    m2.boxes
        .iter()
        .map(|b| {
            let pts = vec![(-b.x1, -b.y2), (-b.x2, -b.y2), (-b.x2, -b.y1)];
            Ok((GridPath::new(b.vertex, pts)?, b.class.expect("builder tags classes")))
        })
        .collect()
}

/// One-bend `L` model of a 2-thin graph. Class 0 paths have their corner
/// on the `y` axis, class 1 paths on the `x` axis. With `independent`
/// (classes must be independent sets) each path keeps only its grounded
/// arm, giving segments.
pub fn build_m3(g: &Graph, rep: &Representation, independent: bool) -> Result<GridPathModel, VpgError> {
    if independent {
        check_independent(g, rep)?;
    }
    let paths = l_paths(g, rep)?
        .into_iter()
        .map(|(p, class)| {
            if !independent {
                return p;
            }
            let (corner, h_end, v_end) = p.l_parts().expect("three points");
            let pts = if class == 1 { vec![h_end, corner] } else { vec![corner, v_end] };
            GridPath { vertex: p.vertex, points: pts }
        })
        .collect();
    GridPathModel::new(paths)
}

/// Monotone L-model: every M3 corner slides along its grounding axis onto
/// `y = -x` while both arms keep their free ends, so the grounded arm
/// grows by the distance travelled.
pub fn build_m4(g: &Graph, rep: &Representation) -> Result<GridPathModel, VpgError> {
    let paths = l_paths(g, rep)?
        .into_iter()
        .map(|(p, class)| {
            let ((cx, cy), h_end, v_end) = p.l_parts().expect("three points");
            let c = if class == 1 { (-cy, cy) } else { (cx, -cx) };
            GridPath { vertex: p.vertex, points: vec![(h_end.0, c.1), c, (c.0, v_end.1)] }
        })
        .collect();
    GridPathModel::new(paths)
}

/// Far enough to act as infinity for any model built here.
const FAR: i64 = 1 << 40;

/// Rays from the corner along each arm, to infinity.
fn prolongations(p: &GridPath) -> [((i64, i64), (i64, i64)); 2] {
    let (c, h, v) = p.l_parts().expect("checked L");
    let h_far = (c.0 + (h.0 - c.0).signum() * FAR, c.1);
    let v_far = (c.0, c.1 + (v.1 - c.1).signum() * FAR);
    [(c, h_far), (c, v_far)]
}

fn blocked(p: &GridPath, q: &GridPath) -> bool {
    let hits = |a: &GridPath, b: &GridPath| prolongations(a).into_iter().any(|r| b.segments().any(|s| segments_meet(r, s)));
    hits(p, q) || hits(q, p)
}

/// Every disjoint pair of paths none of whose arm prolongations meets
/// the other path.
pub fn blocking_violations(m: &GridPathModel) -> Result<Vec<(usize, usize)>, VpgError> {
    if let Some(p) = m.paths.iter().find(|p| p.bends() != 1) {
        return Err(VpgError::NotL { vertex: p.vertex });
    }
    let mut out = Vec::new();
    for (i, p) in m.paths.iter().enumerate() {
        for q in &m.paths[i + 1..] {
            if !p.meets(q) && !blocked(p, q) {
                out.push((p.vertex, q.vertex));
            }
        }
    }
    Ok(out)
}

/// `Ok(None)` when the L-model is blocking, otherwise the first violating pair.
pub fn check_blocking_l(m: &GridPathModel) -> Result<Option<(usize, usize)>, VpgError> {
    Ok(blocking_violations(m)?.into_iter().next())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Shape;
    use thin_graph::{Partition, VertexOrder};

    fn rep(seq: Vec<usize>, classes: Vec<usize>) -> Representation {
        Representation::new(VertexOrder::new(seq).unwrap(), Partition::new(classes).unwrap()).unwrap()
    }

    fn l(v: usize, pts: [(i64, i64); 3]) -> GridPath {
        GridPath::new(v, pts.to_vec()).unwrap()
    }

    #[test]
    fn single_edge_l_paths_meet() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let m = build_m3(&g, &rep(vec![0, 1], vec![0, 1]), false).unwrap();
        assert!(m.paths.iter().all(|p| p.shape() == Shape::L { dx: 1, dy: 1 }));
        assert!(m.intersection_graph().same_edges(&g));
    }

    #[test]
    fn same_class_edge_in_m4() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        let m = build_m4(&g, &rep(vec![0, 1, 2], vec![0, 0, 1])).unwrap();
        assert!(m.intersection_graph().same_edges(&g));
        for p in &m.paths {
            let (c, _, _) = p.l_parts().unwrap();
            assert_eq!(c.0, -c.1);
        }
    }

    #[test]
    fn edgeless_pair_is_blocked() {
        let g = Graph::new(2);
        let m = build_m4(&g, &rep(vec![0, 1], vec![0, 1])).unwrap();
        assert_eq!(m.intersection_graph().edge_count(), 0);
        assert_eq!(check_blocking_l(&m).unwrap(), None);
    }

    #[test]
    fn far_apart_collinear_ls_are_not_blocking() {
        // both corners on y = 0, arms pointing away from each other's reach
        let m = GridPathModel::new(vec![l(0, [(0, 2), (0, 0), (2, 0)]), l(1, [(10, -2), (10, 0), (12, 0)])]);
        // second L has its vertical arm pointing down, horizontal arm right;
        // the first L's horizontal ray runs along y = 0 and hits it
        assert_eq!(check_blocking_l(&m.unwrap()).unwrap(), None);
        let m = GridPathModel::new(vec![l(0, [(0, 2), (0, 0), (2, 0)]), l(1, [(-10, 8), (-10, 6), (-8, 6)])]).unwrap();
        assert_eq!(check_blocking_l(&m).unwrap(), Some((0, 1)));
    }

    #[test]
    fn fig6_p7_configuration_violates_blocking_at_x_y() {
        // doubled coordinates of the five thick L's of the P7 sketch
        let m = GridPathModel::new(vec![
            l(0, [(2, 12), (2, 10), (11, 10)]),
            l(1, [(6, 8), (6, 6), (8, 6)]),
            l(2, [(10, 11), (10, 2), (19, 2)]),
            l(3, [(14, 0), (14, -2), (16, -2)]),
            l(4, [(18, 3), (18, -6), (20, -6)]),
        ])
        .unwrap();
        assert!(blocking_violations(&m).unwrap().contains(&(1, 3)));
    }

    #[test]
    fn rejects_non_l_paths() {
        let m = GridPathModel::new(vec![GridPath::new(0, vec![(0, 0), (2, 0)]).unwrap()]).unwrap();
        assert_eq!(check_blocking_l(&m), Err(VpgError::NotL { vertex: 0 }));
    }
}
