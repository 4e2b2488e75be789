//! Width parameters against permutation brute force, and the class
//! assignments derived from decompositions.

use proptest::prelude::*;
use thin_bounds::*;
use thin_fixtures::grid;
use thin_graph::{Graph, VertexOrder};
use thin_order::{is_consistent, ConsistencyMode};

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = vec![];
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Minimum over orders of the largest number of earlier vertices with a
/// later neighbor.
fn brute_pathwidth(g: &Graph) -> usize {
    permutations(g.n())
        .into_iter()
        .map(|p| {
            (0..p.len())
                .map(|i| p[..=i].iter().filter(|&&u| p[i + 1..].iter().any(|&w| g.has_edge(u, w))).count())
                .max()
                .unwrap_or(0)
        })
        .min()
        .unwrap()
}

fn brute_bandwidth(g: &Graph) -> u64 {
    permutations(g.n())
        .into_iter()
        .map(|p| Labeling::from_order(&VertexOrder::new(p).unwrap()).bandwidth_of(g).unwrap())
        .min()
        .unwrap()
}

fn brute_peak(g: &Graph) -> usize {
    let n = g.n();
    (0..=n)
        .map(|s| {
            (0u32..1 << n)
                .filter(|x| x.count_ones() as usize == s)
                .map(|x| {
                    (0..n).filter(|&w| x >> w & 1 == 0 && (0..n).any(|v| x >> v & 1 == 1 && g.has_edge(v, w))).count()
                })
                .min()
                .unwrap()
        })
        .max()
        .unwrap()
}

fn small_graph() -> impl Strategy<Value = Graph> {
    (1usize..=7).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::new(n);
            let mut k = 0;
            for v in 0..n {
                for u in 0..v {
                    if bits[k] {
                        g.add_edge(u, v);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn exact_values_match_brute_force(g in small_graph()) {
        let (bw, f) = bandwidth(&g).unwrap();
        prop_assert_eq!(bw, brute_bandwidth(&g));
        prop_assert_eq!(f.bandwidth_of(&g).unwrap(), bw);
        let (pw, pd) = pathwidth(&g).unwrap();
        prop_assert_eq!(pw, brute_pathwidth(&g));
        pd.validate(&g).unwrap();
        prop_assert_eq!(pd.width(), pw);
        prop_assert_eq!(iso_peak(&g).unwrap(), brute_peak(&g));
    }

    /// Windows of an optimal labeling give a proper decomposition of width
    /// exactly the bandwidth; any labeling gives width at most its own gap.
    #[test]
    fn label_windows(g in small_graph(), shuffle in Just((0..7).collect::<Vec<usize>>()).prop_shuffle()) {
        let (bw, f) = bandwidth(&g).unwrap();
        let pd = proper_decomposition_from_labeling(&g, &f).unwrap();
        prop_assert!(pd.is_proper(&g).unwrap());
        prop_assert_eq!(pd.width() as u64, bw);
        let seq: Vec<usize> = shuffle.into_iter().filter(|&v| v < g.n()).collect();
        let any = Labeling::from_order(&VertexOrder::new(seq).unwrap());
        let pd = proper_decomposition_from_labeling(&g, &any).unwrap();
        prop_assert!(pd.is_proper(&g).unwrap());
        prop_assert!(pd.width() as u64 <= any.bandwidth_of(&g).unwrap());
    }

    #[test]
    fn decompositions_give_independent_consistent_partitions(g in small_graph()) {
        let (pw, pd) = pathwidth(&g).unwrap();
        let rep = partition_from_decomposition(&g, &pd).unwrap();
        prop_assert!(rep.partition.k() <= pw + 1);
        prop_assert!(is_consistent(&g, &rep, ConsistencyMode::Consistent).unwrap());
        prop_assert!(g.edges().iter().all(|&(u, v)| rep.partition.class_of(u) != rep.partition.class_of(v)));
        let (bw, f) = bandwidth(&g).unwrap();
        let rep = partition_from_decomposition(&g, &proper_decomposition_from_labeling(&g, &f).unwrap()).unwrap();
        prop_assert!(rep.partition.k() as u64 <= bw + 1);
        prop_assert!(is_consistent(&g, &rep, ConsistencyMode::Strong).unwrap());
    }
}

#[test]
fn grids() {
    let g2 = grid(2).graph;
    assert_eq!(iso_peak(&g2).unwrap(), 2);
    let g3 = grid(3).graph;
    assert_eq!(pathwidth(&g3).unwrap().0, 3);
    assert_eq!(diameter(&g3).unwrap(), 4);
    assert_eq!(bandwidth(&g3).unwrap().0, 3);
    assert!(iso_peak(&g3).unwrap() >= 3);
    assert!(iso_peak(&grid(4).graph).unwrap() >= 4);
}

#[test]
fn corollary_bound_on_paths_and_cycles() {
    for n in 2..=8 {
        let p = Graph::path(n);
        assert_eq!(diameter(&p).unwrap(), n - 1);
        assert!(bandwidth(&p).unwrap().0 as usize <= n - diameter(&p).unwrap());
    }
}
