//! Pattern families versus exact thinness on small graphs.

use thin_fixtures::{bipartite_claw, complete_bipartite, cycle, wheel4};
use thin_graph::{nonisomorphic_graphs, Graph};
use thin_order::{exact_thinness, Budget, ThinnessKind};
use thin_patterns::{family, ord_membership};

fn member(g: &Graph, fam: &str) -> bool {
    ord_membership(g, &family(fam).unwrap(), Budget::UNLIMITED).unwrap().is_member().unwrap()
}

fn value(g: &Graph, kind: ThinnessKind) -> usize {
    exact_thinness(g, kind, Budget::UNLIMITED).unwrap().value
}

#[test]
fn families_match_thinness_up_to_five_vertices() {
    for n in 1..=5 {
        for g in nonisomorphic_graphs(n).unwrap() {
            let thin = value(&g, ThinnessKind::THIN);
            let pthin = value(&g, ThinnessKind::PTHIN);
            let ind2 = value(&g, ThinnessKind::INDTHIN) <= 2;
            let indp2 = value(&g, ThinnessKind::INDPTHIN) <= 2;
            let e = g.edges();
            assert_eq!(member(&g, "P1"), thin == 1, "{e:?}");
            assert_eq!(member(&g, "P12"), pthin == 1, "{e:?}");
            assert_eq!(member(&g, "P6789"), thin <= 2, "{e:?}");
            for fam in ["P569S", "R23", "Q12"] {
                assert_eq!(member(&g, fam), ind2, "{fam} {e:?}");
            }
            for fam in ["P34", "R12", "Q1234"] {
                assert_eq!(member(&g, fam), indp2, "{fam} {e:?}");
            }
            if ind2 {
                assert!(member(&g, "P569"), "{e:?}");
            }
        }
    }
}

#[test]
fn named_graphs() {
    let c6 = cycle(6).graph;
    assert!(member(&c6, "P6789"));
    assert!(!member(&c6, "R23") && !member(&c6, "P569S"));
    let claw = bipartite_claw().graph;
    assert!(!member(&claw, "P34") && !member(&claw, "R12"));
    assert_eq!(value(&wheel4().graph, ThinnessKind::INDPTHIN), 3);
    assert!(member(&complete_bipartite(3, 3).graph, "R12"));
}
