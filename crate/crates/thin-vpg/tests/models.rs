use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thin_fixtures::{b0vpg_grid, b0vpg_grid_segments, fig1a, fig1b, octahedron, random};
use thin_graph::{Graph, Partition, Representation, VertexOrder};
use thin_vpg::*;

fn drop_class_edges(g: &Graph, rep: &Representation) -> Graph {
    let mut h = g.clone();
    for (u, v) in g.edges() {
        if rep.partition.class_of(u) == rep.partition.class_of(v) {
            h.remove_edge(u, v);
        }
    }
    h
}

fn instance(seed: u64, k: usize, max_n: usize) -> (Graph, Representation) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(k..=max_n);
    let rep = random::representation(n, k, &mut rng);
    let strong = rng.gen_bool(0.5);
    (random::consistent_graph(&rep, strong, &mut rng), rep)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn two_thin_l_models(seed in any::<u64>()) {
        let (g, rep) = instance(seed, 2, 10);
        let m3 = build_m3(&g, &rep, false).unwrap();
        prop_assert!(m3.intersection_graph().same_edges(&g));
        let upright = Shape::L { dx: 1, dy: 1 };
        prop_assert!(m3.paths.iter().all(|p| p.shape() == upright));

        let m4 = build_m4(&g, &rep).unwrap();
        prop_assert!(m4.intersection_graph().same_edges(&g));
        let mut corners = std::collections::HashSet::new();
        for p in &m4.paths {
            prop_assert_eq!(p.bends(), 1);
            let (c, _, _) = p.l_parts().unwrap();
            prop_assert_eq!(c.0, -c.1);
            prop_assert!(corners.insert(c));
        }
        prop_assert_eq!(check_blocking_l(&m4).unwrap(), None);

        let h = drop_class_edges(&g, &rep);
        let m0 = build_m3(&h, &rep, true).unwrap();
        prop_assert_eq!(m0.max_bends(), 0);
        prop_assert!(m0.intersection_graph().same_edges(&h));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn three_thin_vpg(seed in any::<u64>()) {
        let (g, rep) = instance(seed, 3, 9);
        let m = build_vpg_3thin(&g, &rep, false).unwrap();
        prop_assert!(m.max_bends() <= 3);
        prop_assert!(m.intersection_graph().same_edges(&g));
        let h = drop_class_edges(&g, &rep);
        let m = build_vpg_3thin(&h, &rep, true).unwrap();
        prop_assert!(m.max_bends() <= 1);
        prop_assert!(m.intersection_graph().same_edges(&h));
    }
}

#[test]
fn octahedron_three_thin() {
    let f = octahedron();
    let rep = Representation::new(VertexOrder::identity(6), Partition::new(vec![0, 0, 1, 1, 2, 2]).unwrap()).unwrap();
    let m = build_vpg_3thin(&f.graph, &rep, false).unwrap();
    assert!(m.max_bends() <= 3);
    assert!(m.intersection_graph().same_edges(&f.graph));
}

#[test]
fn fig1a_padded_with_third_class() {
    let f = fig1a();
    let rep = f.representation.unwrap();
    let n = f.graph.n();
    let mut g = Graph::new(n + 1);
    for (u, v) in f.graph.edges() {
        g.add_edge(u, v);
    }
    let mut seq = rep.order.seq().to_vec();
    seq.push(n);
    let mut labels = rep.partition.labels().to_vec();
    labels.push(2);
    let padded = Representation::new(VertexOrder::new(seq).unwrap(), Partition::new(labels).unwrap()).unwrap();
    let m = build_vpg_3thin(&g, &padded, false).unwrap();
    assert!(m.intersection_graph().same_edges(&g));
}

#[test]
fn fig1a_m4_reproduces_graph() {
    let f = fig1a();
    let m = build_m4(&f.graph, f.representation.as_ref().unwrap()).unwrap();
    assert!(m.intersection_graph().same_edges(&f.graph));
    assert_eq!(check_blocking_l(&m).unwrap(), None);
}

#[test]
fn fig1b_m4_corners_follow_combined_order() {
    let f = fig1b();
    let rep = f.representation.as_ref().unwrap();
    let m = build_m4(&f.graph, rep).unwrap();
    let mut by_corner: Vec<usize> = (0..f.graph.n()).collect();
    by_corner.sort_by_key(|&v| m.paths[v].l_parts().unwrap().0 .0);
    let classes = rep.ordered_classes();
    let expected: Vec<usize> = classes[0].iter().chain(classes[1].iter().rev()).copied().collect();
    assert_eq!(by_corner, expected);
}

#[test]
fn b0_grid_segments_give_the_fixture_graph() {
    for r in 1..=4 {
        let paths = b0vpg_grid_segments(r)
            .into_iter()
            .enumerate()
            .map(|(v, (a, b))| GridPath::new(v, vec![a, b]).unwrap())
            .collect();
        let m = GridPathModel::new(paths).unwrap();
        assert_eq!(m.max_bends(), 0);
        assert!(m.intersection_graph().same_edges(&b0vpg_grid(r).graph));
    }
}
