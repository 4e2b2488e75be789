use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thin_box::*;
use thin_fixtures::{fig1a, fig1b, g72, random};
use thin_graph::Representation;
use thin_order::{is_consistent, ConsistencyMode};

fn g72_model() -> BoxModel {
    let f = g72();
    let boxes = f
        .boxes
        .unwrap()
        .iter()
        .map(|b| Rect { vertex: b.vertex, x1: b.x1, x2: b.x2, y1: b.y1, y2: b.y2, class: Some(b.class) })
        .collect();
    BoxModel::new(-72, 72, boxes).unwrap()
}

#[test]
fn fig1a_stopping_indices_match_drawing() {
    let f = fig1a();
    let rep = f.representation.as_ref().unwrap();
    let u = u_values(&f.graph, rep);
    let v: Vec<usize> = (1..=9).map(|i| f.vertex(&format!("v{i}"))).collect();
    let w: Vec<usize> = (1..=6).map(|i| f.vertex(&format!("w{i}"))).collect();
    let pick = |vs: &[usize], t: &[usize]| vs.iter().map(|&x| t[x]).collect::<Vec<_>>();
    assert_eq!(pick(&v, &u.own), [1, 2, 3, 1, 5, 6, 7, 5, 1]);
    assert_eq!(pick(&v, &u.other), [0, 0, 0, 2, 2, 3, 4, 5, 2]);
    assert_eq!(pick(&w, &u.other), [1, 1, 5, 6, 7, 8]);
    assert_eq!(pick(&w, &u.own), [1, 2, 3, 4, 5, 3]);

    let m = build_m1(&f.graph, rep).unwrap();
    for (i, &x) in v.iter().enumerate() {
        assert_eq!(m.boxes[x].corner(), (2 * (i as i64 + 1 + 6), 2 * (i as i64 + 1)));
    }
    for (i, &x) in w.iter().enumerate() {
        assert_eq!(m.boxes[x].corner(), (2 * (i as i64 + 1), 2 * (i as i64 + 1 + 9)));
    }
}

#[test]
fn fig1a_model_properties() {
    let f = fig1a();
    let m = build_m1(&f.graph, f.representation.as_ref().unwrap()).unwrap();
    assert!(m.intersection_graph().same_edges(&f.graph));
    assert_eq!(check_diagonal(&m).diagonal, Diagonal::TwoDiagonal);
    assert_eq!(check_blocking(&m).unwrap(), None);
    let rec = recover_representation(&m, ConsistencyMode::Consistent).unwrap();
    assert_eq!(rec.partition.k(), 2);
    assert!(is_consistent(&f.graph, &rec, ConsistencyMode::Consistent).unwrap());

    let m2 = build_m2(&m).unwrap();
    assert!(m2.intersection_graph().same_edges(&f.graph));
    assert!(m2.boxes.iter().all(|b| b.x2 <= 0 && b.y2 <= 0 && (b.x2 == 0 || b.y2 == 0)));
}

#[test]
fn fig1b_model_is_bi_semi_proper() {
    let f = fig1b();
    let m = build_m1(&f.graph, f.representation.as_ref().unwrap()).unwrap();
    assert_eq!(check_bi_semi_proper(&m).unwrap(), None);
    let rec = recover_representation(&m, ConsistencyMode::Strong).unwrap();
    assert!(is_consistent(&f.graph, &rec, ConsistencyMode::Strong).unwrap());
}

#[test]
fn g72_model_is_two_diagonal_but_not_blocking() {
    let f = g72();
    let m = g72_model();
    assert!(m.intersection_graph().same_edges(&f.graph));
    assert_eq!(check_diagonal(&m).diagonal, Diagonal::TwoDiagonal);
    let (up, low) = check_blocking(&m).unwrap().expect("a violating pair");
    assert!(!f.graph.has_edge(up, low));
    assert!(matches!(
        recover_representation(&m, ConsistencyMode::Consistent),
        Err(BoxError::Precondition { required: "blocking", .. })
    ));
}

fn two_class_instance(seed: u64, strong: bool) -> (thin_graph::Graph, Representation) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(2..=10);
    let rep = random::representation(n, 2, &mut rng);
    (random::consistent_graph(&rep, strong, &mut rng), rep)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn m1_round_trip(seed in any::<u64>(), strong in any::<bool>()) {
        let (g, rep) = two_class_instance(seed, strong);
        let m = build_m1(&g, &rep).unwrap();
        prop_assert!(m.intersection_graph().same_edges(&g));
        prop_assert_eq!(check_diagonal(&m).diagonal, Diagonal::TwoDiagonal);
        prop_assert_eq!(check_blocking(&m).unwrap(), None);
        // each class ordered by corner follows the certificate
        let pos = rep.order.positions();
        for a in &m.boxes {
            for b in &m.boxes {
                if a.class == b.class && a.x2 < b.x2 {
                    prop_assert!(pos[a.vertex] < pos[b.vertex]);
                }
            }
        }
        let rec = recover_representation(&m, ConsistencyMode::Consistent).unwrap();
        prop_assert!(is_consistent(&g, &rec, ConsistencyMode::Consistent).unwrap());
        if strong {
            prop_assert_eq!(check_bi_semi_proper(&m).unwrap(), None);
            let rec = recover_representation(&m, ConsistencyMode::Strong).unwrap();
            prop_assert!(is_consistent(&g, &rec, ConsistencyMode::Strong).unwrap());
        }
        let m2 = build_m2(&m).unwrap();
        prop_assert!(m2.intersection_graph().same_edges(&g));
    }

    #[test]
    fn json_round_trip(seed in any::<u64>()) {
        let (g, rep) = two_class_instance(seed, false);
        let m = build_m1(&g, &rep).unwrap();
        prop_assert_eq!(BoxModel::from_json(&m.to_json()).unwrap(), m);
    }
}

/// Random model with corners on `y = x - 8` (4th quadrant) and
/// `y = x + 8` (2nd quadrant), lower-left corners anywhere below-left.
fn random_diagonal_model(rng: &mut ChaCha8Rng) -> BoxModel {
    let n = rng.gen_range(2..=6);
    let mut lower_x: Vec<i64> = (0..=8).collect();
    let mut upper_x: Vec<i64> = (-8..=0).collect();
    use rand::seq::SliceRandom;
    lower_x.shuffle(rng);
    upper_x.shuffle(rng);
    let boxes = (0..n)
        .map(|v| {
            let (x2, y2) = if v == 0 || (v > 1 && rng.gen_bool(0.5)) {
                let x = lower_x.pop().unwrap();
                (x, x - 8)
            } else {
                let x = upper_x.pop().unwrap();
                (x, x + 8)
            };
            let x1 = x2 - rng.gen_range(1..=16);
            let y1 = y2 - rng.gen_range(1..=16);
            Rect { vertex: v, x1, x2, y1, y2, class: None }
        })
        .collect();
    BoxModel::new(-8, 8, boxes).unwrap()
}

#[test]
fn blocking_models_always_recover() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let (mut blocking, mut semi_proper) = (0, 0);
    for _ in 0..20_000 {
        let m = random_diagonal_model(&mut rng);
        assert_eq!(check_diagonal(&m).diagonal, Diagonal::TwoDiagonal);
        let g = m.intersection_graph();
        if check_blocking(&m).unwrap().is_none() {
            blocking += 1;
            let rep = recover_representation(&m, ConsistencyMode::Consistent).unwrap();
            assert!(is_consistent(&g, &rep, ConsistencyMode::Consistent).unwrap());
        }
        if check_bi_semi_proper(&m).unwrap().is_none() {
            semi_proper += 1;
            let rep = recover_representation(&m, ConsistencyMode::Strong).unwrap();
            assert!(is_consistent(&g, &rep, ConsistencyMode::Strong).unwrap());
        }
    }
    assert!(blocking > 500 && semi_proper > 500, "{blocking} {semi_proper}");
}
