//! Cross-checks between independently computed quantities, run over every
//! small graph or over seeded random instances.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thin_bounds::{bandwidth, diameter, iso_peak, partition_from_decomposition, pathwidth, proper_decomposition_from_labeling};
use thin_box::{build_m1, check_bi_semi_proper, check_blocking, check_diagonal, recover_representation, Diagonal};
use thin_ceo::{build_ceo_digraph, solve_ceo, CeoError, CeoOutcome, ClassOrder};
use thin_fixtures::{grid, octahedron, random};
use thin_graph::{nonisomorphic_graphs, Graph, Partition, Representation, VertexOrder};
use thin_order::coloring::{chromatic_number, clique_number, masks};
use thin_order::{conflict_graph, exact_thinness, is_consistent, verify_certificate, Budget, ConsistencyMode, ThinnessKind};
use thin_patterns::{family, occurs, ord_membership, Host};
use thin_vpg::{build_m3, build_m4, build_vpg_3thin, check_blocking_l};

#[derive(Debug, Clone, Copy)]
pub struct SweepOptions {
    /// Largest vertex count for exhaustive sweeps, or the instance size cap
    /// for random ones.
    pub n: usize,
    /// Random instances (or random orders per graph for `perfection`).
    pub samples: usize,
    pub seed: u64,
}

#[derive(Debug, Clone)]
pub struct SweepRow {
    pub instance: String,
    pub detail: String,
    pub ok: bool,
}

#[derive(Debug, Clone)]
pub struct SweepReport {
    pub theorem: &'static str,
    pub rows: Vec<SweepRow>,
    pub notes: Vec<String>,
}

impl SweepReport {
    pub fn checked(&self) -> usize {
        self.rows.len()
    }

    pub fn failures(&self) -> impl Iterator<Item = &SweepRow> {
        self.rows.iter().filter(|r| !r.ok)
    }

    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.ok)
    }
}

type Runner = fn(&SweepOptions) -> (Vec<SweepRow>, Vec<String>);

/// `(name, what is compared, runner)`.
pub const THEOREMS: &[(&str, &str, Runner)] = &[
    ("forb-pat-2-thin", "Ord{P6,P7,P8,P9} iff thin <= 2 (exhaustive to n, plus `samples` random graphs on 7-8 vertices)", forb_pat_two_thin),
    ("interval", "Ord{P1} iff thin = 1; Ord{P1,P2} iff pthin = 1", interval),
    ("char-ind-2-thin", "BiOrd{R2,R3} iff BicolOrd{Q1,Q2} iff Ord{P5,P6,P9,S} iff indthin <= 2 on connected bipartite graphs", char_ind),
    ("char-prop-ind-2-thin", "Ord{P3,P4} iff BiOrd{R1,R2} iff BicolOrd{Q1..Q4} iff indpthin <= 2 on connected bipartite graphs", char_prop_ind),
    ("pthin-le-bw", "pthin <= bandwidth on connected graphs with an edge", pthin_le_bw),
    ("width-bounds", "indthin <= pw + 1 and indpthin <= bw + 1, by exact values and by decomposition certificates", width_bounds),
    ("pthin-le-n-diam", "pthin <= n - diameter on connected graphs", pthin_le_n_diam),
    ("peak", "thin * maxdeg >= isoperimetric peak; peak(grid r) >= r for r = 2..4", peak),
    ("ceo", "precedence-digraph extension agrees with brute-force interleaving", ceo),
    ("dpat", "precedence-digraph acyclicity agrees with R-pattern avoidance", dpat),
    ("models", "box and L-models of random 2-thin certificates", models),
    ("vpg3", "grid-path models of random 3-thin certificates and the octahedron", vpg3),
    ("perfection", "chromatic number equals clique number on conflict graphs", perfection),
];

pub fn run_sweep(theorem: &str, opts: &SweepOptions) -> Result<SweepReport, String> {
    let (name, _, run) = THEOREMS.iter().find(|t| t.0 == theorem).ok_or_else(|| {
        let known: Vec<&str> = THEOREMS.iter().map(|t| t.0).collect();
        format!("unknown theorem `{theorem}` (known: {})", known.join(", "))
    })?;
    let (rows, notes) = run(opts);
    Ok(SweepReport { theorem: name, rows, notes })
}

fn describe(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
    format!("n={} [{}]", g.n(), edges.join(" "))
}

fn row(g: &Graph, detail: String, ok: bool) -> SweepRow {
    SweepRow { instance: describe(g), detail, ok }
}

fn graphs_up_to(n: usize, connected: bool) -> Vec<Graph> {
    (1..=n.min(thin_graph::MAX_ENUM_N))
        .flat_map(|k| nonisomorphic_graphs(k).expect("within enumeration limit"))
        .filter(|g| !connected || g.is_connected())
        .collect()
}

fn value(g: &Graph, kind: ThinnessKind) -> usize {
    exact_thinness(g, kind, Budget::UNLIMITED).expect("desk-scale graph").value
}

fn member(g: &Graph, fam: &str) -> bool {
    let f = family(fam).expect("known family");
    ord_membership(g, &f, Budget::UNLIMITED).expect("desk-scale graph").is_member().expect("unbounded search")
}

fn rng_for(seed: u64, i: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(i as u64))
}

fn random_connected(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    loop {
        let g = random::gnp(n, rng.gen_range(0.2..0.8), rng);
        if g.is_connected() {
            return g;
        }
    }
}

fn forb_pat_two_thin(o: &SweepOptions) -> (Vec<SweepRow>, Vec<String>) {
    let mut graphs = graphs_up_to(o.n, true);
    graphs.extend((0..o.samples).map(|i| {
        let mut rng = rng_for(o.seed, i);
        let n = rng.gen_range(7..=8);
        random_connected(&mut rng, n)
    }));
    let rows = graphs
        .par_iter()
        .map(|g| {
            let thin = value(g, ThinnessKind::THIN);
            let pat = member(g, "P6789");
            row(g, format!("thin={thin} Ord{{P6789}}={pat}"), pat == (thin <= 2))
        })
        .collect();
    (rows, vec![])
}

fn interval(o: &SweepOptions) -> (Vec<SweepRow>, Vec<String>) {
    let rows = graphs_up_to(o.n, false)
        .par_iter()
        .map(|g| {
            let (thin, pthin) = (value(g, ThinnessKind::THIN), value(g, ThinnessKind::PTHIN));
            let (p1, p12) = (member(g, "P1"), member(g, "P12"));
            row(g, format!("thin={thin} pthin={pthin} P1={p1} P12={p12}"), p1 == (thin == 1) && p12 == (pthin == 1))
        })
        .collect();
    (rows, vec![])
}

fn connected_bipartite(n: usize) -> Vec<Graph> {
    graphs_up_to(n, true).into_iter().filter(Graph::is_bipartite).collect()
}

fn char_ind(o: &SweepOptions) -> (Vec<SweepRow>, Vec<String>) {
    let results: Vec<(SweepRow, bool)> = connected_bipartite(o.n)
        .par_iter()
        .map(|g| {
            let ind2 = value(g, ThinnessKind::INDTHIN) <= 2;
            let [r23, q12, p569s, p569] = ["R23", "Q12", "P569S", "P569"].map(|f| member(g, f));
            let ok = r23 == ind2 && q12 == ind2 && p569s == ind2 && (!ind2 || p569);
            let detail = format!("indthin<=2:{ind2} R23={r23} Q12={q12} P569S={p569s} P569={p569}");
            (row(g, detail, ok), p569 && !ind2)
        })
        .collect();
    let excess: Vec<&SweepRow> = results.iter().filter(|r| r.1).map(|r| &r.0).collect();
    let mut notes = vec![format!(
        "Ord{{P5,P6,P9}} admits {} graph(s) that are not independent 2-thin{}",
        excess.len(),
        excess.first().map(|r| format!(", e.g. {}", r.instance)).unwrap_or_default()
    )];
    notes.retain(|_| !excess.is_empty());
    (results.into_iter().map(|r| r.0).collect(), notes)
}

fn char_prop_ind(o: &SweepOptions) -> (Vec<SweepRow>, Vec<String>) {
    let rows = connected_bipartite(o.n)
        .par_iter()
        .map(|g| {
            let indp2 = value(g, ThinnessKind::INDPTHIN) <= 2;
            let [p34, r12, q] = ["P34", "R12", "Q1234"].map(|f| member(g, f));
            let detail = format!("indpthin<=2:{indp2} P34={p34} R12={r12} Q1234={q}");
            row(g, detail, p34 == indp2 && r12 == indp2 && q == indp2)
        })
        .collect();
    (rows, vec![])
}

fn with_edge(n: usize) -> Vec<Graph> {
    graphs_up_to(n, true).into_iter().filter(|g| g.edge_count() > 0).collect()
}

fn pthin_le_bw(o: &SweepOptions) -> (Vec<SweepRow>, Vec<String>) {
    let rows = with_edge(o.n)
        .par_iter()
        .map(|g| {
            let pthin = value(g, ThinnessKind::PTHIN);
            let bw = bandwidth(g).expect("small").0 as usize;
            row(g, format!("pthin={pthin} bw={bw}"), pthin <= bw)
        })
        .collect();
    (rows, vec![])
}

fn width_bounds(o: &SweepOptions) -> (Vec<SweepRow>, Vec<String>) {
    let rows = graphs_up_to(o.n, true)
        .par_iter()
        .map(|g| {
            let (ind, indp) = (value(g, ThinnessKind::INDTHIN), value(g, ThinnessKind::INDPTHIN));
            let (pw, pd) = pathwidth(g).expect("small");
            let (bw, f) = bandwidth(g).expect("small");
            let bw = bw as usize;
            let from_pw = partition_from_decomposition(g, &pd).expect("valid witness");
            let proper = proper_decomposition_from_labeling(g, &f).expect("labeling fits");
            let from_bw = partition_from_decomposition(g, &proper).expect("valid windows");
            let certs_ok = from_pw.partition.k() <= pw + 1
                && verify_certificate(g, &from_pw, ThinnessKind::INDTHIN)
                && from_bw.partition.k() <= bw + 1
                && verify_certificate(g, &from_bw, ThinnessKind::INDPTHIN);
            let detail = format!(
                "indthin={ind} pw={pw} cert={} indpthin={indp} bw={bw} cert={}",
                from_pw.partition.k(),
                from_bw.partition.k()
            );
            row(g, detail, ind <= pw + 1 && indp <= bw + 1 && certs_ok)
        })
        .collect();
    (rows, vec![])
}

fn pthin_le_n_diam(o: &SweepOptions) -> (Vec<SweepRow>, Vec<String>) {
    let rows = graphs_up_to(o.n, true)
        .par_iter()
        .map(|g| {
            let pthin = value(g, ThinnessKind::PTHIN);
            let diam = diameter(g).expect("connected");
            row(g, format!("pthin={pthin} n-diam={}", g.n() - diam), pthin <= g.n() - diam)
        })
        .collect();
    (rows, vec![])
}

fn peak(o: &SweepOptions) -> (Vec<SweepRow>, Vec<String>) {
    let mut rows: Vec<SweepRow> = with_edge(o.n)
        .par_iter()
        .map(|g| {
            let thin = value(g, ThinnessKind::THIN);
            let bv = iso_peak(g).expect("small");
            let delta = g.max_degree();
            row(g, format!("thin={thin} b_v={bv} maxdeg={delta}"), thin * delta >= bv)
        })
        .collect();
    for r in 2..=4 {
        let g = grid(r).graph;
        let bv = iso_peak(&g).expect("at most 16 vertices");
        rows.push(SweepRow { instance: format!("grid{r}"), detail: format!("b_v={bv}"), ok: bv >= r });
    }
    (rows, vec![])
}

fn random_split(rng: &mut ChaCha8Rng, n: usize) -> (Partition, Vec<Vec<usize>>) {
    let mut labels: Vec<usize> = (0..n).map(|_| rng.gen_range(0..2)).collect();
    labels[0] = 0;
    labels[n - 1] = 1;
    labels.shuffle(rng);
    let partition = Partition::new(labels).expect("both classes used");
    let mut classes = partition.classes();
    for c in &mut classes {
        c.shuffle(rng);
    }
    (partition, classes)
}

/// Every merge of the two class orders, tested for consistency.
fn interleaving_exists(g: &Graph, partition: &Partition, classes: &[Vec<usize>], mode: ConsistencyMode) -> bool {
    let (a, b) = (&classes[0], &classes[1]);
    let n = a.len() + b.len();
    (0u32..1 << n).filter(|m| m.count_ones() as usize == a.len()).any(|m| {
        let (mut ia, mut ib) = (a.iter(), b.iter());
        let seq: Vec<usize> =
            (0..n).map(|i| *if m >> i & 1 == 1 { ia.next() } else { ib.next() }.expect("counts match")).collect();
        let rep = Representation::new(VertexOrder::new(seq).expect("merge"), partition.clone()).expect("sizes");
        is_consistent(g, &rep, mode).expect("sizes")
    })
}

/// Half the instances are plain random; the rest perturb a graph that has a
/// consistent extension so that feasible and near-feasible cases both occur.
fn ceo_instance(rng: &mut ChaCha8Rng, n: usize) -> (Graph, Partition, Vec<Vec<usize>>) {
    if rng.gen_bool(0.5) {
        let g = random::gnp(n, rng.gen_range(0.1..0.9), rng);
        let (partition, classes) = random_split(rng, n);
        return (g, partition, classes);
    }
    let rep = random::representation(n, 2, rng);
    let mut g = random::consistent_graph(&rep, rng.gen_bool(0.5), rng);
    for _ in 0..rng.gen_range(0..=2) {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if rep.partition.class_of(u) != rep.partition.class_of(v) {
            if g.has_edge(u, v) {
                g.remove_edge(u, v);
            } else {
                g.add_edge(u, v);
            }
        }
    }
    (g, rep.partition.clone(), rep.ordered_classes())
}

fn ceo(o: &SweepOptions) -> (Vec<SweepRow>, Vec<String>) {
    let results: Vec<(SweepRow, usize)> = (0..o.samples)
        .into_par_iter()
        .map(|i| {
            let mut rng = rng_for(o.seed, i);
            let n = rng.gen_range(2..=o.n.max(2));
            let (g, partition, classes) = ceo_instance(&mut rng, n);
            let porder = ClassOrder::new(&partition, classes.clone()).expect("orders cover classes");
            let mut ok = true;
            let mut feasible = 0;
            let mut detail = Vec::new();
            for mode in [ConsistencyMode::Consistent, ConsistencyMode::Strong] {
                let brute = interleaving_exists(&g, &partition, &classes, mode);
                let fast = match solve_ceo(&g, &partition, &porder, mode) {
                    Ok(CeoOutcome::Extended(order)) => {
                        let rep = Representation::new(order.clone(), partition.clone()).expect("sizes");
                        ok &= porder.is_extended_by(&order) && is_consistent(&g, &rep, mode).expect("sizes");
                        true
                    }
                    Ok(CeoOutcome::Infeasible { .. }) | Err(CeoError::ClassOrderInconsistent { .. }) => false,
                    Err(e) => panic!("well-formed instance rejected: {e}"),
                };
                ok &= brute == fast;
                feasible += usize::from(fast);
                detail.push(format!("{mode:?}: digraph={fast} brute={brute}"));
            }
            (row(&g, format!("classes={classes:?} {}", detail.join(" ")), ok), feasible)
        })
        .collect();
    let feasible: usize = results.iter().map(|r| r.1).sum();
    let notes = vec![format!("{feasible} of {} mode checks were feasible", 2 * results.len())];
    (results.into_iter().map(|r| r.0).collect(), notes)
}

fn dpat(o: &SweepOptions) -> (Vec<SweepRow>, Vec<String>) {
    let (f_plain, f_strong, f_refined) =
        (family("R23").expect("known"), family("R1244'").expect("known"), family("R12").expect("known"));
    let rows: Vec<(SweepRow, bool)> = (0..o.samples)
        .into_par_iter()
        .map(|i| {
            let mut rng = rng_for(o.seed, i);
            let n = rng.gen_range(2..=o.n.max(2));
            let (partition, classes) = random_split(&mut rng, n);
            let p = rng.gen_range(0.2..0.9);
            let mut g = Graph::new(n);
            for &u in &classes[0] {
                for &v in &classes[1] {
                    if rng.gen_bool(p) {
                        g.add_edge(u, v);
                    }
                }
            }
            let porder = ClassOrder::new(&partition, classes.clone()).expect("orders cover classes");
            let acyclic = |mode| build_ceo_digraph(&g, &partition, &porder, mode).expect("well-formed").is_acyclic();
            let host = Host::Sided { a: &classes[0], b: &classes[1] };
            let avoids = |f: &thin_patterns::PatternFamily| {
                f.patterns.iter().all(|p| occurs(&g, host, p).expect("bipartite host").is_none())
            };
            let (d, dt) = (acyclic(ConsistencyMode::Consistent), acyclic(ConsistencyMode::Strong));
            let no_isolated = (0..n).all(|v| g.degree(v) > 0);
            let mut ok = d == avoids(&f_plain) && dt == avoids(&f_strong);
            if no_isolated {
                ok &= dt == avoids(&f_refined);
            }
            let detail = format!("sides={classes:?} D acyclic={d} strong acyclic={dt}");
            (row(&g, detail, ok), no_isolated)
        })
        .collect();
    let refined = rows.iter().filter(|r| r.1).count();
    let notes = vec![format!("{refined} instance(s) without isolated vertices exercised the refined statement")];
    (rows.into_iter().map(|r| r.0).collect(), notes)
}

/// Drops every edge inside a class; consistency is preserved.
fn strip_classes(g: &Graph, rep: &Representation) -> Graph {
    let mut h = g.clone();
    for (u, v) in g.edges() {
        if rep.partition.class_of(u) == rep.partition.class_of(v) {
            h.remove_edge(u, v);
        }
    }
    h
}

fn models(o: &SweepOptions) -> (Vec<SweepRow>, Vec<String>) {
    let rows = (0..o.samples)
        .into_par_iter()
        .map(|i| {
            let mut rng = rng_for(o.seed, i);
            let n = rng.gen_range(2..=o.n.max(2));
            let rep = random::representation(n, 2, &mut rng);
            let mut g = random::consistent_graph(&rep, rng.gen_bool(0.5), &mut rng);
            let independent = rng.gen_bool(0.3);
            if independent {
                g = strip_classes(&g, &rep);
            }
            let strong = is_consistent(&g, &rep, ConsistencyMode::Strong).expect("sizes");
            let mut fails: Vec<&str> = Vec::new();
            let m1 = build_m1(&g, &rep).expect("consistent 2-class certificate");
            let mut check = |cond: bool, what| {
                if !cond {
                    fails.push(what);
                }
            };
            check(m1.intersection_graph().same_edges(&g), "M1 graph");
            check(check_diagonal(&m1).diagonal == Diagonal::TwoDiagonal, "2-diagonal");
            check(check_blocking(&m1).expect("two-diagonal").is_none(), "blocking");
            if strong {
                check(check_bi_semi_proper(&m1).expect("corners on two diagonals").is_none(), "bi-semi-proper");
            }
            let modes: &[ConsistencyMode] =
                if strong { &[ConsistencyMode::Consistent, ConsistencyMode::Strong] } else { &[ConsistencyMode::Consistent] };
            for &mode in modes {
                let ok = recover_representation(&m1, mode)
                    .map(|r| r.partition.k() <= 2 && is_consistent(&g, &r, mode).expect("sizes"))
                    .unwrap_or(false);
                check(ok, "recovery");
            }
            let m3 = build_m3(&g, &rep, false).expect("valid input");
            check(m3.intersection_graph().same_edges(&g) && m3.max_bends() <= 1, "M3");
            let m4 = build_m4(&g, &rep).expect("valid input");
            check(m4.intersection_graph().same_edges(&g) && m4.max_bends() <= 1, "M4 graph");
            let on_diagonal = m4.paths.iter().all(|p| p.l_parts().is_some_and(|(c, _, _)| c.0 + c.1 == 0));
            check(on_diagonal, "M4 corners on y=-x");
            check(check_blocking_l(&m4).expect("L-shaped").is_none(), "L-blocking");
            if independent {
                let m0 = build_m3(&g, &rep, true).expect("independent classes");
                check(m0.intersection_graph().same_edges(&g) && m0.max_bends() == 0, "0-bend model");
            }
            let detail = if fails.is_empty() {
                format!("strong={strong} independent={independent}")
            } else {
                format!("failed: {}", fails.join(", "))
            };
            row(&g, detail, fails.is_empty())
        })
        .collect();
    (rows, vec![])
}

fn vpg3(o: &SweepOptions) -> (Vec<SweepRow>, Vec<String>) {
    let check = |g: &Graph, rep: &Representation, independent: bool| {
        let m = build_vpg_3thin(g, rep, independent).expect("consistent certificate");
        let limit = if independent { 1 } else { 3 };
        let ok = m.intersection_graph().same_edges(g) && m.max_bends() <= limit;
        row(g, format!("bends={} independent={independent}", m.max_bends()), ok)
    };
    let mut rows: Vec<SweepRow> = (0..o.samples)
        .into_par_iter()
        .map(|i| {
            let mut rng = rng_for(o.seed, i);
            let n = rng.gen_range(3..=o.n.max(3));
            let rep = random::representation(n, 3, &mut rng);
            let mut g = random::consistent_graph(&rep, rng.gen_bool(0.5), &mut rng);
            let independent = rng.gen_bool(0.3);
            if independent {
                g = strip_classes(&g, &rep);
            }
            check(&g, &rep, independent)
        })
        .collect();
    let oct = octahedron().graph;
    let cert = exact_thinness(&oct, ThinnessKind::THIN, Budget::UNLIMITED).expect("six vertices").certificate;
    rows.push(check(&oct, &cert, false));
    (rows, vec![])
}

fn perfection(o: &SweepOptions) -> (Vec<SweepRow>, Vec<String>) {
    let rows = graphs_up_to(o.n, false)
        .par_iter()
        .enumerate()
        .map(|(i, g)| {
            let n = g.n();
            let mut rng = rng_for(o.seed, i);
            let factorial: usize = (1..=n).product();
            let orders: Vec<Vec<usize>> = if factorial <= o.samples {
                permutations(n)
            } else {
                (0..o.samples)
                    .map(|_| {
                        let mut s: Vec<usize> = (0..n).collect();
                        s.shuffle(&mut rng);
                        s
                    })
                    .collect()
            };
            let mut bad = None;
            for seq in &orders {
                let order = VertexOrder::new(seq.clone()).expect("permutation");
                for mode in [ConsistencyMode::Consistent, ConsistencyMode::Strong] {
                    let adj = masks(&conflict_graph(g, &order, mode));
                    if chromatic_number(&adj) != clique_number(&adj) {
                        bad = Some(format!("order {seq:?} {mode:?}"));
                    }
                }
            }
            let detail = bad.clone().unwrap_or_else(|| format!("{} orders", orders.len()));
            row(g, detail, bad.is_none())
        })
        .collect();
    (rows, vec![])
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}
