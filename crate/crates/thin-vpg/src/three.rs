use thin_graph::{Graph, Representation};
use thin_order::{consistency_violation, ConsistencyMode};

use crate::lmodel::check_independent;
use crate::{GridPath, GridPathModel, VpgError};

/// Stopping indices for every (vertex, class) pair, 1-based ranks.
///
/// For the vertex's own class: the smallest rank of an earlier neighbor,
/// or its own rank. For another class: the largest rank of an earlier
/// non-neighbor, or 0.
struct Stops {
    rank: Vec<i64>,
    u: Vec<[i64; 3]>,
}

fn stops(g: &Graph, rep: &Representation) -> Stops {
    let n = g.n();
    let mut rank = vec![0; n];
    let mut u = vec![[0; 3]; n];
    let mut seen: [Vec<usize>; 3] = Default::default();
    for &x in rep.order.seq() {
        let c = rep.partition.class_of(x);
        rank[x] = seen[c].len() as i64 + 1;
        for (d, members) in seen.iter().enumerate() {
            u[x][d] = if d == c {
                members.iter().position(|&y| g.has_edge(x, y)).map_or(rank[x], |j| j as i64 + 1)
            } else {
                members.iter().rposition(|&y| !g.has_edge(x, y)).map_or(0, |j| j as i64 + 1)
            };
        }
        seen[c].push(x);
    }
    Stops { rank, u }
}

/// Grid-path model of a graph with a consistent representation of at
/// most three classes `A`, `B`, `C` (classes 0, 1, 2).
///
/// `A` paths rise from the bottom band and turn right into the top band,
/// `B` paths run right along the bottom band and rise into the right band,
/// `C` paths descend from the top band and run right into the right band.
/// Within each band a path stops just before the last earlier non-neighbor
/// of the other class, so each pair of classes interacts as in the
/// two-diagonal box model. Own-class adjacency uses a short spine reaching
/// back to the first earlier neighbor: three bends per path. With
/// `independent` (classes must be independent sets) the spines are
/// dropped and every path is a single L.
pub fn build_vpg_3thin(g: &Graph, rep: &Representation, independent: bool) -> Result<GridPathModel, VpgError> {
    let k = rep.partition.k();
    if k > 3 {
        return Err(VpgError::TooManyClasses { k, max: 3 });
    }
    if let Some(t) = consistency_violation(g, rep, ConsistencyMode::Consistent)? {
        return Err(VpgError::Inconsistent(t));
    }
    if independent {
        check_independent(g, rep)?;
    }
    let s = stops(g, rep);
    let mut size = [0i64; 3];
    for v in 0..g.n() {
        size[rep.partition.class_of(v)] += 1;
    }
    let [na, nb, nc] = size;

    // band coordinates, unit 4 so that +-1 and +-2 offsets stay separate
    let x_a = |i: i64| 4 * i;
    let y_b = |j: i64| -4 * (nc + 1) - 4 * (nb + 1 - j);
    let h_a = |i: i64| 4 * (na + 2 - i);
    let x_c = |k: i64| 4 * na + 4 * (nc + 1 - k);
    let y_c = |k: i64| -4 * k;
    let x_spine_b = 4 * na + 4 * (nc + 2);
    let x_bc = |j: i64| x_spine_b + 4 * (nb + 1 - j);
    const Y_SPINE_C: i64 = 2;

    let paths = (0..g.n())
        .map(|v| {
            let (i, [ua, ub, uc]) = (s.rank[v], s.u[v]);
            let pts = match (rep.partition.class_of(v), independent) {
                (0, false) => vec![
                    (x_a(i), y_b(ub) + 2),
                    (x_a(i), 0),
                    (x_a(ua) - 1, 0),
                    (x_a(ua) - 1, h_a(i)),
                    (x_c(uc) - 2, h_a(i)),
                ],
                (0, true) => vec![(x_a(i), y_b(ub) + 2), (x_a(i), h_a(i)), (x_c(uc) - 2, h_a(i))],
                (1, false) => vec![
                    (x_a(ua) + 2, y_b(i)),
                    (x_spine_b, y_b(i)),
                    (x_spine_b, y_b(ub) - 1),
                    (x_bc(i), y_b(ub) - 1),
                    (x_bc(i), y_c(uc) - 2),
                ],
                (1, true) => vec![(x_a(ua) + 2, y_b(i)), (x_bc(i), y_b(i)), (x_bc(i), y_c(uc) - 2)],
                (_, false) => vec![
                    (x_c(i), h_a(ua) - 2),
                    (x_c(i), Y_SPINE_C),
                    (x_c(uc) + 1, Y_SPINE_C),
                    (x_c(uc) + 1, y_c(i)),
                    (x_bc(ub) - 2, y_c(i)),
                ],
                (_, true) => vec![(x_c(i), h_a(ua) - 2), (x_c(i), y_c(i)), (x_bc(ub) - 2, y_c(i))],
            };
            GridPath::new(v, pts)
        })
        .collect::<Result<Vec<_>, _>>()?;
    GridPathModel::new(paths)
}

#[cfg(test)]
mod tests {
    use super::*;
    use thin_graph::{Partition, VertexOrder};

    fn rep(seq: Vec<usize>, classes: Vec<usize>) -> Representation {
        Representation::new(VertexOrder::new(seq).unwrap(), Partition::new(classes).unwrap()).unwrap()
    }

    #[test]
    fn triangle_with_singleton_classes() {
        let g = Graph::complete(3);
        let r = rep(vec![0, 1, 2], vec![0, 1, 2]);
        for independent in [false, true] {
            let m = build_vpg_3thin(&g, &r, independent).unwrap();
            assert!(m.intersection_graph().same_edges(&g));
            assert!(m.max_bends() <= if independent { 1 } else { 3 });
        }
    }

    #[test]
    fn octahedron_with_pair_classes() {
        let mut g = Graph::complete(6);
        for k in 0..3 {
            g.remove_edge(2 * k, 2 * k + 1);
        }
        let r = rep((0..6).collect(), vec![0, 0, 1, 1, 2, 2]);
        let m = build_vpg_3thin(&g, &r, true).unwrap();
        assert!(m.intersection_graph().same_edges(&g));
    }

    #[test]
    fn rejects_four_classes_and_dependent_classes() {
        let g = Graph::new(4);
        let r = rep(vec![0, 1, 2, 3], vec![0, 1, 2, 3]);
        assert_eq!(build_vpg_3thin(&g, &r, false), Err(VpgError::TooManyClasses { k: 4, max: 3 }));
        let p = Graph::path(2);
        let r = rep(vec![0, 1], vec![0, 0]);
        assert_eq!(build_vpg_3thin(&p, &r, true), Err(VpgError::NotIndependent { class: 0 }));
        assert!(build_vpg_3thin(&p, &r, false).unwrap().intersection_graph().same_edges(&p));
    }
}
