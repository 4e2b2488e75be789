use serde::{Deserialize, Serialize};
use thin_graph::{Graph, GraphError, Representation};

use crate::ThinnessKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConsistencyMode {
    Consistent,
    Strong,
}

impl std::str::FromStr for ConsistencyMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "consistent" => Ok(ConsistencyMode::Consistent),
            "strong" => Ok(ConsistencyMode::Strong),
            o => Err(format!("unknown mode `{o}` (expected consistent|strong)")),
        }
    }
}

/// A violating triple: `r < s < t` in the checked order, `r` and `s` in one
/// class, `t ~ r` but `t !~ s`. `reversed` is set when the triple lives in
/// the reverse order (strong mode only).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Triple {
    pub r: usize,
    pub s: usize,
    pub t: usize,
    pub reversed: bool,
}

fn scan(g: &Graph, rep: &Representation, seq: &[usize], reversed: bool) -> Option<Triple> {
    let k = rep.partition.k();
    // earlier members of each class, in order
    let mut earlier: Vec<Vec<usize>> = vec![Vec::new(); k];
    for &t in seq {
        for members in &earlier {
            let mut first_nb = None;
            for &x in members {
                match (first_nb, g.has_edge(t, x)) {
                    (None, true) => first_nb = Some(x),
                    (Some(r), false) => return Some(Triple { r, s: x, t, reversed }),
                    _ => {}
                }
            }
        }
        earlier[rep.partition.class_of(t)].push(t);
    }
    None
}

/// First violating triple, or `None` when the representation is
/// (strongly) consistent with `g`.
pub fn consistency_violation(
    g: &Graph,
    rep: &Representation,
    mode: ConsistencyMode,
) -> Result<Option<Triple>, GraphError> {
    if rep.n() != g.n() || rep.partition.len() != g.n() {
        return Err(GraphError::SizeMismatch { expected: g.n(), got: rep.n() });
    }
    let seq = rep.order.seq();
    if let Some(t) = scan(g, rep, seq, false) {
        return Ok(Some(t));
    }
    if mode == ConsistencyMode::Strong {
        let rev: Vec<usize> = seq.iter().rev().copied().collect();
        return Ok(scan(g, rep, &rev, true));
    }
    Ok(None)
}

pub fn is_consistent(g: &Graph, rep: &Representation, mode: ConsistencyMode) -> Result<bool, GraphError> {
    consistency_violation(g, rep, mode).map(|v| v.is_none())
}

/// True iff `rep` witnesses that `g` is `kind` k-thin with `k = rep.partition.k()`.
pub fn verify_certificate(g: &Graph, rep: &Representation, kind: ThinnessKind) -> bool {
    if !matches!(is_consistent(g, rep, kind.mode()), Ok(true)) {
        return false;
    }
    !kind.independent || g.edges().iter().all(|&(u, v)| rep.partition.class_of(u) != rep.partition.class_of(v))
}
