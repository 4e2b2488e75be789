use thin_graph::{Graph, Partition, Representation, VertexOrder};

use crate::{Fact, Fixture, FixtureBox};

fn named(prefix: &str, count: usize) -> impl Iterator<Item = String> + '_ {
    (1..=count).map(move |i| format!("{prefix}{i}"))
}

fn plain(name: &str, graph: Graph, facts: Vec<Fact>) -> Fixture {
    let names = (0..graph.n()).map(|v| v.to_string()).collect();
    Fixture { name: name.into(), graph, names, facts, representation: None, boxes: None }
}

/// Builds a graph from name pairs.
fn by_names(names: &[String], pairs: &[(&str, &str)]) -> Graph {
    let idx = |s: &str| names.iter().position(|n| n == s).unwrap_or_else(|| panic!("unknown vertex {s}"));
    let edges: Vec<(usize, usize)> = pairs.iter().map(|&(a, b)| (idx(a), idx(b))).collect();
    Graph::from_edges(names.len(), &edges).expect("valid literal edges")
}

/// Representation drawn in the figure: vertices sorted by height, one class
/// per vertical line.
fn two_line_rep(names: &[String], by_height: &[&str], left: char) -> Representation {
    let seq = by_height.iter().map(|s| names.iter().position(|n| n == s).unwrap()).collect();
    let classes = names.iter().map(|n| usize::from(!n.starts_with(left))).collect();
    Representation::new(VertexOrder::new(seq).unwrap(), Partition::new(classes).unwrap()).unwrap()
}

/// 2-thin graph of proper thinness 3 (left drawing of the first figure).
/// Class 1: `v1..v9`, class 2: `w1..w6`.
pub fn fig1a() -> Fixture {
    let names: Vec<String> = named("v", 9).chain(named("w", 6)).collect();
    #[rustfmt::skip]
    let edges = [
        ("v4", "v3"), ("v4", "v2"), ("v4", "v1"),
        ("v8", "v7"), ("v8", "v6"), ("v8", "v5"),
        ("w6", "w5"), ("w6", "w4"), ("w6", "w3"),
        ("w1", "v2"), ("w1", "v3"), ("w2", "v2"), ("w2", "v3"),
        ("v9", "w3"), ("v9", "w4"), ("v9", "w5"), ("v9", "w6"),
        ("v9", "v8"), ("v9", "v7"), ("v9", "v6"), ("v9", "v5"),
        ("v9", "v4"), ("v9", "v3"), ("v9", "v2"), ("v9", "v1"),
    ];
    let graph = by_names(&names, &edges);
    let heights = ["v1", "v2", "w1", "w2", "v3", "v4", "v5", "w3", "v6", "w4", "v7", "w5", "v8", "w6", "v9"];
    let rep = two_line_rep(&names, &heights, 'v');
    Fixture {
        name: "fig1a".into(),
        graph,
        names,
        facts: vec![Fact::stated("thin", 2), Fact::stated("pthin", 3)],
        representation: Some(rep),
        boxes: None,
    }
}

/// Proper 2-thin graph (right drawing of the first figure).
/// Class 1: `x1..x9`, class 2: `z1..z6`.
pub fn fig1b() -> Fixture {
    let names: Vec<String> = named("x", 9).chain(named("z", 6)).collect();
    #[rustfmt::skip]
    let edges = [
        ("x4", "x3"), ("x2", "x1"), ("x4", "x5"), ("x5", "x3"),
        ("x8", "x7"), ("x8", "x6"), ("x8", "x5"), ("x7", "x6"), ("x7", "x5"), ("x6", "x5"),
        ("z6", "z5"), ("z6", "z4"), ("z5", "z4"), ("z3", "z4"),
        ("z1", "x2"), ("z1", "x3"), ("z2", "x2"), ("z2", "x3"),
        ("x8", "z4"), ("x7", "z4"),
        ("x8", "z5"), ("x9", "z4"), ("x9", "z5"), ("x9", "z6"),
        ("x9", "x8"), ("x9", "x7"),
    ];
    let graph = by_names(&names, &edges);
    let heights = ["x1", "x2", "z1", "z2", "x3", "x4", "x5", "z3", "x6", "z4", "x7", "z5", "x8", "z6", "x9"];
    let rep = two_line_rep(&names, &heights, 'x');
    Fixture {
        name: "fig1b".into(),
        graph,
        names,
        facts: vec![Fact::stated("pthin", 2)],
        representation: Some(rep),
        boxes: None,
    }
}

/// Group of `a_i` / `b_i` (1-based) in the 72-vertex construction.
pub fn g72_group(i: usize) -> usize {
    match i {
        33..=36 => 5,
        _ if i % 2 == 1 => 0,
        _ => (i - 1) / 8 + 1,
    }
}

/// 72-vertex graph with a non-blocking 2-diagonal box model and a 3-thin
/// certificate. Vertices `a1..a36` are `0..36`, `b1..b36` are `36..72`.
pub fn g72() -> Fixture {
    let names: Vec<String> = named("a", 36).chain(named("b", 36)).collect();
    let a = |i: usize| i - 1;
    let b = |i: usize| 35 + i;
    let mut g = Graph::new(72);
    for k in 1..=16 {
        g.add_edge(a(2 * k - 1), a(2 * k));
        g.add_edge(b(2 * k - 1), b(2 * k));
    }
    for i in 1..=36 {
        for j in 1..=36 {
            let (gi, gj) = (g72_group(i), g72_group(j));
            let joined = gi != 0 && gj != 0 && (gi == 5 || gj == 5 || gi == gj);
            if joined {
                g.add_edge(a(i), b(j));
            }
        }
    }

    let mut boxes = Vec::with_capacity(72);
    for i in 1..=36i64 {
        let (x2, y2) = (2 * i, 2 * i + 72);
        let (x1, y1) = match g72_group(i as usize) {
            0 => (2 * i - 1, 2 * i + 71),
            1 => (2 * i - 3, 0),
            2 => (2 * i - 3, 17),
            3 => (2 * i - 3, 33),
            4 => (2 * i - 3, 49),
            _ => (2 * i - 1, 0),
        };
        let iu = i as usize;
        boxes.push(FixtureBox { vertex: a(iu), x1, x2, y1, y2, class: 2 });
        boxes.push(FixtureBox { vertex: b(iu), x1: y1, x2: y2, y1: x1, y2: x2, class: 1 });
    }
    boxes.sort_by_key(|b| b.vertex);

    let mut seq = Vec::with_capacity(72);
    for k in 1..=18 {
        seq.extend([a(2 * k - 1), a(2 * k), b(2 * k - 1), b(2 * k)]);
    }
    let class = |v: usize| {
        let (is_a, i) = if v < 36 { (true, v + 1) } else { (false, v - 35) };
        match (g72_group(i), is_a) {
            (0, _) => 2,
            (_, true) => 0,
            (_, false) => 1,
        }
    };
    let rep = Representation::new(
        VertexOrder::new(seq).unwrap(),
        Partition::new((0..72).map(class).collect()).unwrap(),
    )
    .unwrap();

    Fixture {
        name: "g72".into(),
        graph: g,
        names,
        facts: vec![
            Fact::stated("thin_upper", 3),
            Fact::stated("two_diagonal", 1),
            Fact::stated("blocking", 0),
            Fact::unverified("thin", 3),
        ],
        representation: Some(rep),
        boxes: Some(boxes),
    }
}

/// The `r x r` grid; vertex `(i, j)` (1-based) is `(i-1)*r + (j-1)`.
pub fn grid(r: usize) -> Fixture {
    let mut g = Graph::new(r * r);
    for i in 0..r {
        for j in 0..r {
            if i + 1 < r {
                g.add_edge(i * r + j, (i + 1) * r + j);
            }
            if j + 1 < r {
                g.add_edge(i * r + j, i * r + j + 1);
            }
        }
    }
    let names = (0..r * r).map(|v| format!("({},{})", v / r + 1, v % r + 1)).collect();
    Fixture {
        name: format!("grid{r}"),
        graph: g,
        names,
        facts: vec![Fact::stated("iso_peak_at_least", r as i64)],
        representation: None,
        boxes: None,
    }
}

/// Axis-parallel segments `((x1, y1), (x2, y2))` at scale 10 whose
/// intersection graph has unbounded thinness with maximum degree 6:
/// horizontals `(i-0.1, j)--(i+1.1, j)` for `0 <= i, j <= r`, then verticals
/// `(i, j-1.1)--(i, j+0.1)` for `1 <= i, j <= r`.
pub fn b0vpg_grid_segments(r: usize) -> Vec<((i64, i64), (i64, i64))> {
    let r = r as i64;
    let mut out = Vec::new();
    for i in 0..=r {
        for j in 0..=r {
            out.push(((10 * i - 1, 10 * j), (10 * i + 11, 10 * j)));
        }
    }
    for i in 1..=r {
        for j in 1..=r {
            out.push(((10 * i, 10 * j - 11), (10 * i, 10 * j + 1)));
        }
    }
    out
}

fn segments_meet(s: &((i64, i64), (i64, i64)), t: &((i64, i64), (i64, i64))) -> bool {
    let (sx1, sx2) = (s.0 .0.min(s.1 .0), s.0 .0.max(s.1 .0));
    let (sy1, sy2) = (s.0 .1.min(s.1 .1), s.0 .1.max(s.1 .1));
    let (tx1, tx2) = (t.0 .0.min(t.1 .0), t.0 .0.max(t.1 .0));
    let (ty1, ty2) = (t.0 .1.min(t.1 .1), t.0 .1.max(t.1 .1));
    sx1 <= tx2 && tx1 <= sx2 && sy1 <= ty2 && ty1 <= sy2
}

pub fn b0vpg_grid(r: usize) -> Fixture {
    let segs = b0vpg_grid_segments(r);
    let mut g = Graph::new(segs.len());
    for u in 0..segs.len() {
        for v in u + 1..segs.len() {
            if segments_meet(&segs[u], &segs[v]) {
                g.add_edge(u, v);
            }
        }
    }
    let h = (r + 1) * (r + 1);
    let names = (0..segs.len())
        .map(|v| if v < h { format!("h{}_{}", v / (r + 1), v % (r + 1)) } else { format!("v{}_{}", (v - h) / r + 1, (v - h) % r + 1) })
        .collect();
    Fixture {
        name: format!("b0grid{r}"),
        graph: g,
        names,
        facts: vec![Fact::stated("max_degree", 6)],
        representation: None,
        boxes: None,
    }
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Fixture {
    let mut g = Graph::new(a + b);
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v);
        }
    }
    let mut facts = Vec::new();
    if a == b && a >= 2 {
        facts.push(Fact::stated("pthin", 2));
    }
    plain(&format!("k{a},{b}"), g, facts)
}

/// The 4-cycle `0..4` plus universal vertex `4`.
pub fn wheel4() -> Fixture {
    let mut g = cycle_graph(4);
    let mut w = Graph::new(5);
    for (u, v) in g.edges() {
        w.add_edge(u, v);
    }
    for v in 0..4 {
        w.add_edge(4, v);
    }
    g = w;
    plain("wheel4", g, vec![Fact::stated("thin", 2), Fact::stated("indpthin", 3)])
}

fn cycle_graph(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for v in 0..n {
        g.add_edge(v, (v + 1) % n);
    }
    g
}

pub fn cycle(n: usize) -> Fixture {
    assert!(n >= 3, "cycles need at least 3 vertices");
    let mut facts = Vec::new();
    if n == 6 {
        facts.push(Fact::stated("thin", 2));
        facts.push(Fact::derived("indthin", 3));
    }
    plain(&format!("cycle{n}"), cycle_graph(n), facts)
}

/// `K5` with every edge subdivided: branch vertices `0..5`, then one
/// subdivision vertex per pair in lexicographic order.
pub fn subdivided_k5() -> Fixture {
    let mut g = Graph::new(15);
    let mut s = 5;
    for u in 0..5 {
        for v in u + 1..5 {
            g.add_edge(u, s);
            g.add_edge(v, s);
            s += 1;
        }
    }
    plain("subdivided_k5", g, vec![Fact::stated("thin_upper", 4), Fact::unverified("vpg", 0)])
}

/// Subdivision of `K_{1,3}`: centre `0`, middles `1..4`, leaves `4..7`.
pub fn bipartite_claw() -> Fixture {
    let g = Graph::from_edges(7, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)]).unwrap();
    plain("bipartite_claw", g, vec![Fact::stated("avoids_p3_p4", 0), Fact::stated("pthin", 2)])
}

/// Complement of three disjoint edges `{0,1}, {2,3}, {4,5}`.
pub fn octahedron() -> Fixture {
    let mut g = Graph::complete(6);
    for k in 0..3 {
        g.remove_edge(2 * k, 2 * k + 1);
    }
    plain("octahedron", g, vec![Fact::stated("thin", 3)])
}

/// Names accepted by [`by_name`].
pub const GALLERY: &[&str] = &[
    "fig1a",
    "fig1b",
    "g72",
    "grid<r>",
    "b0grid<r>",
    "k<a>,<b>",
    "wheel4",
    "cycle<n>",
    "subdivided_k5",
    "bipartite_claw",
    "octahedron",
];

pub fn by_name(name: &str) -> Option<Fixture> {
    let num = |p: &str| name.strip_prefix(p).and_then(|s| s.parse::<usize>().ok());
    Some(match name {
        "fig1a" => fig1a(),
        "fig1b" => fig1b(),
        "g72" => g72(),
        "wheel4" => wheel4(),
        "subdivided_k5" => subdivided_k5(),
        "bipartite_claw" => bipartite_claw(),
        "octahedron" => octahedron(),
        _ => {
            if let Some(r) = num("grid").filter(|&r| r >= 1) {
                grid(r)
            } else if let Some(r) = num("b0grid").filter(|&r| r >= 1) {
                b0vpg_grid(r)
            } else if let Some(n) = num("cycle").filter(|&n| n >= 3) {
                cycle(n)
            } else {
                let (a, b) = name.strip_prefix('k')?.split_once(',')?;
                complete_bipartite(a.parse().ok()?, b.parse().ok()?)
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fig1_sizes() {
        let a = fig1a();
        assert_eq!((a.graph.n(), a.graph.edge_count()), (15, 25));
        let b = fig1b();
        assert_eq!((b.graph.n(), b.graph.edge_count()), (15, 26));
    }

    #[test]
    fn v9_sees_its_whole_line() {
        let f = fig1a();
        let v9 = f.vertex("v9");
        for i in 1..=8 {
            assert!(f.graph.has_edge(v9, f.vertex(&format!("v{i}"))));
        }
        assert!(!f.graph.has_edge(v9, f.vertex("w1")));
    }

    #[test]
    fn g72_group_sizes() {
        let count = |k| (1..=36).filter(|&i| g72_group(i) == k).count();
        assert_eq!([count(0), count(1), count(2), count(3), count(4), count(5)], [16, 4, 4, 4, 4, 4]);
    }

    #[test]
    fn gallery_names_resolve() {
        for n in ["fig1a", "grid3", "b0grid2", "k2,3", "cycle6", "octahedron"] {
            assert!(by_name(n).is_some(), "{n}");
        }
        assert!(by_name("nope").is_none());
        assert!(by_name("cycle2").is_none());
    }

    #[test]
    fn small_constructions() {
        assert_eq!(grid(3).graph.edge_count(), 12);
        assert_eq!(octahedron().graph.edge_count(), 12);
        assert_eq!(subdivided_k5().graph.edge_count(), 20);
        assert_eq!(wheel4().graph.degree(4), 4);
        assert_eq!(complete_bipartite(2, 3).graph.edge_count(), 6);
    }
}
