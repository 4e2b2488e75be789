//! Acceptance suite: one PASS/FAIL line per criterion; exits nonzero if any
//! criterion fails.

use std::time::{Duration, Instant};

use thin_box::{check_blocking, check_diagonal, BoxModel, Diagonal, Rect};
use thin_cli::sweep::{run_sweep, SweepOptions, SweepReport};
use thin_fixtures::{bipartite_claw, complete_bipartite, cycle, fig1a, fig1b, g72, wheel4};
use thin_graph::Graph;
use thin_order::{exact_thinness, verify_certificate, Budget, ThinnessKind};
use thin_patterns::{family, ord_membership};

const SEED: u64 = 20_240_601;

type Check = (bool, String);

fn thinness(g: &Graph, kind: ThinnessKind) -> Option<usize> {
    exact_thinness(g, kind, Budget::time(Duration::from_secs(120))).ok().map(|r| r.value)
}

fn sweeps(runs: &[(&str, usize, usize)]) -> Check {
    let mut ok = true;
    let mut parts = Vec::new();
    for &(name, n, samples) in runs {
        let r: SweepReport = run_sweep(name, &SweepOptions { n, samples, seed: SEED }).expect("known theorem");
        let bad = r.failures().count();
        ok &= r.passed() && r.checked() > 0;
        parts.push(format!("{name}: {} checked, {bad} mismatches", r.checked()));
        if let Some(f) = r.failures().next() {
            parts.push(format!("first mismatch {} ({})", f.instance, f.detail));
        }
        parts.extend(r.notes.iter().map(|n| format!("note: {n}")));
    }
    (ok, parts.join("; "))
}

fn fig1_values() -> Check {
    let got = [
        thinness(&fig1a().graph, ThinnessKind::THIN),
        thinness(&fig1a().graph, ThinnessKind::PTHIN),
        thinness(&fig1b().graph, ThinnessKind::PTHIN),
    ];
    (got == [Some(2), Some(3), Some(2)], format!("thin(fig1a), pthin(fig1a), pthin(fig1b) = {got:?}"))
}

fn g72_model() -> Check {
    let f = g72();
    let rep = f.representation.as_ref().expect("attached certificate");
    let cert_ok = rep.partition.k() <= 3 && verify_certificate(&f.graph, rep, ThinnessKind::THIN);
    let rects: Vec<Rect> = f
        .boxes
        .as_ref()
        .expect("attached boxes")
        .iter()
        .map(|b| Rect { vertex: b.vertex, x1: b.x1, x2: b.x2, y1: b.y1, y2: b.y2, class: Some(b.class) })
        .collect();
    let m = BoxModel::new(-72, 72, rects).expect("well-formed boxes");
    let same = m.intersection_graph().same_edges(&f.graph);
    let diagonal = check_diagonal(&m).diagonal;
    let blocking = check_blocking(&m).expect("two-diagonal model");
    let ok = cert_ok && same && diagonal == Diagonal::TwoDiagonal && blocking.is_some();
    (ok, format!("certificate k={} verifies={cert_ok}; edges reproduced={same}; {diagonal}; blocking violated by {blocking:?}", rep.partition.k()))
}

fn named_class_facts() -> Check {
    let member = |g: &Graph, fam: &str| ord_membership(g, &family(fam).unwrap(), Budget::UNLIMITED).unwrap().is_member().unwrap();
    let c6 = cycle(6).graph;
    let facts = [
        ("C6 thin=2", thinness(&c6, ThinnessKind::THIN) == Some(2)),
        ("C6 indthin=3", thinness(&c6, ThinnessKind::INDTHIN) == Some(3)),
        ("C6 avoids R23 in no side order", !member(&c6, "R23")),
        ("bipartite claw not in Ord{P3,P4}", !member(&bipartite_claw().graph, "P34")),
        ("W4 indpthin=3", thinness(&wheel4().graph, ThinnessKind::INDPTHIN) == Some(3)),
        ("K3,3 pthin=2", thinness(&complete_bipartite(3, 3).graph, ThinnessKind::PTHIN) == Some(2)),
        ("K3,3 in BiOrd{R1,R2}", member(&complete_bipartite(3, 3).graph, "R12")),
    ];
    let failed: Vec<&str> = facts.iter().filter(|f| !f.1).map(|f| f.0).collect();
    (failed.is_empty(), if failed.is_empty() { format!("{} named facts hold", facts.len()) } else { format!("failed: {failed:?}") })
}

fn class_theorems() -> Check {
    let (sweep_ok, detail) = sweeps(&[("char-ind-2-thin", 7, 0), ("char-prop-ind-2-thin", 7, 0)]);
    let (facts_ok, facts) = named_class_facts();
    (sweep_ok && facts_ok, format!("{detail}; {facts}"))
}

fn main() {
    let criteria: Vec<(&str, Box<dyn Fn() -> Check>)> = vec![
        ("1 fig1 thinness values", Box::new(fig1_values)),
        ("2 G72 certificate and box model", Box::new(g72_model)),
        ("3 forbidden patterns for 2-thin", Box::new(|| sweeps(&[("forb-pat-2-thin", 6, 500)]))),
        ("4 pthin <= bandwidth", Box::new(|| sweeps(&[("pthin-le-bw", 6, 0)]))),
        ("5 width bounds with certificates", Box::new(|| sweeps(&[("width-bounds", 6, 0)]))),
        ("6 isoperimetric peak bound", Box::new(|| sweeps(&[("peak", 6, 0)]))),
        ("7 order extension vs brute force", Box::new(|| sweeps(&[("ceo", 6, 1000)]))),
        ("8 precedence digraph vs R-patterns", Box::new(|| sweeps(&[("dpat", 8, 1000)]))),
        ("9 box and L-model round trips", Box::new(|| sweeps(&[("models", 10, 300)]))),
        ("10 3-thin grid-path models", Box::new(|| sweeps(&[("vpg3", 9, 100)]))),
        ("11 bipartite class characterizations", Box::new(class_theorems)),
        ("12 conflict graphs are perfect", Box::new(|| sweeps(&[("perfection", 6, 200)]))),
    ];
    let mut failed = 0;
    for (name, check) in &criteria {
        let start = Instant::now();
        let (ok, detail) = check();
        failed += usize::from(!ok);
        println!("{} criterion {name} [{:.1}s]: {detail}", if ok { "PASS" } else { "FAIL" }, start.elapsed().as_secs_f64());
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
