use proptest::prelude::*;
use thin_ceo::{solve_ceo, CeoError, CeoOutcome, ClassOrder};
use thin_graph::{Graph, Partition, Representation, VertexOrder};
use thin_order::{is_consistent, ConsistencyMode};

/// Tries every merge of the class sequences.
fn brute_force(g: &Graph, p: &Partition, classes: &[Vec<usize>], mode: ConsistencyMode) -> bool {
    fn go(g: &Graph, p: &Partition, classes: &[Vec<usize>], idx: &mut Vec<usize>, seq: &mut Vec<usize>, mode: ConsistencyMode) -> bool {
        if seq.len() == g.n() {
            let rep = Representation::new(VertexOrder::new(seq.clone()).unwrap(), p.clone()).unwrap();
            return is_consistent(g, &rep, mode).unwrap();
        }
        for c in 0..classes.len() {
            if idx[c] < classes[c].len() {
                seq.push(classes[c][idx[c]]);
                idx[c] += 1;
                let found = go(g, p, classes, idx, seq, mode);
                idx[c] -= 1;
                seq.pop();
                if found {
                    return true;
                }
            }
        }
        false
    }
    go(g, p, classes, &mut vec![0; classes.len()], &mut Vec::new(), mode)
}

fn instance() -> impl Strategy<Value = (Graph, Partition, Vec<Vec<usize>>)> {
    (2usize..=6)
        .prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            (Just(n), prop::collection::vec(any::<bool>(), pairs), prop::collection::vec(0usize..2, n), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
        })
        .prop_filter_map("both classes used", |(n, bits, mut labels, perm)| {
            labels[0] = 0;
            labels[n - 1] = 1;
            let mut g = Graph::new(n);
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        g.add_edge(u, v);
                    }
                    i += 1;
                }
            }
            let p = Partition::new(labels).ok()?;
            let classes = (0..2).map(|c| perm.iter().copied().filter(|&v| p.class_of(v) == c).collect()).collect();
            Some((g, p, classes))
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn digraph_matches_brute_force((g, p, classes) in instance()) {
        for mode in [ConsistencyMode::Consistent, ConsistencyMode::Strong] {
            let po = ClassOrder::new(&p, classes.clone()).unwrap();
            match solve_ceo(&g, &p, &po, mode) {
                Ok(CeoOutcome::Extended(order)) => {
                    prop_assert!(po.is_extended_by(&order));
                    let rep = Representation::new(order, p.clone()).unwrap();
                    prop_assert!(is_consistent(&g, &rep, mode).unwrap());
                }
                Ok(CeoOutcome::Infeasible { cycle }) => {
                    prop_assert_eq!(cycle.first(), cycle.last());
                    prop_assert!(!brute_force(&g, &p, &classes, mode));
                }
                Err(CeoError::ClassOrderInconsistent { .. }) => {}
                Err(e) => panic!("{e}"),
            }
        }
    }
}

#[test]
fn drawn_two_thin_example_extends() {
    // path 0-1-2-3 plus chord 0-2, classes {0,2} and {1,3}
    let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 2)]).unwrap();
    let p = Partition::new(vec![0, 1, 0, 1]).unwrap();
    let po = ClassOrder::new(&p, vec![vec![0, 2], vec![1, 3]]).unwrap();
    assert!(matches!(solve_ceo(&g, &p, &po, ConsistencyMode::Strong).unwrap(), CeoOutcome::Extended(_)));
}
