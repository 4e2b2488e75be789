use std::time::Instant;

use thin_graph::{Graph, VertexOrder};
use thin_order::Budget;

use crate::occur::{occurs, Compiled, Host, Lanes};
use crate::pattern::PatternFamily;
use crate::PatternError;

/// Vertex sets are `u64` masks.
pub const MAX_SEARCH_N: usize = 64;

/// An ordering witnessing membership, shaped by the family flavor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    Order(VertexOrder),
    Colored { order: VertexOrder, white: Vec<bool> },
    Sided { a: Vec<usize>, b: Vec<usize> },
}

impl Certificate {
    pub fn host(&self) -> Host<'_> {
        match self {
            Certificate::Order(o) => Host::Ordered(o),
            Certificate::Colored { order, white } => Host::Colored { order, white },
            Certificate::Sided { a, b } => Host::Sided { a, b },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Membership {
    Member(Certificate),
    NonMember,
    BudgetExceeded { nodes: u64 },
}

impl Membership {
    pub fn is_member(&self) -> Option<bool> {
        match self {
            Membership::Member(_) => Some(true),
            Membership::NonMember => Some(false),
            Membership::BudgetExceeded { .. } => None,
        }
    }
}

struct Exhausted;

struct Meter {
    budget: Budget,
    nodes: u64,
    start: Instant,
}

impl Meter {
    fn tick(&mut self) -> Result<(), Exhausted> {
        self.nodes += 1;
        if self.budget.max_nodes.is_some_and(|m| self.nodes > m)
            || (self.nodes % 1024 == 0 && self.budget.max_time.is_some_and(|t| self.start.elapsed() >= t))
        {
            return Err(Exhausted);
        }
        Ok(())
    }
}

fn bit(v: usize) -> u64 {
    1 << v
}

/// `before[v]`: vertices `u < v` interchangeable with `v`, which are then
/// required to precede `v`. `same` decides interchangeability.
fn twin_masks(n: usize, same: impl Fn(usize, usize) -> bool) -> Vec<u64> {
    let mut before = vec![0u64; n];
    for v in 0..n {
        for u in 0..v {
            if same(u, v) {
                before[v] |= bit(u);
            }
        }
    }
    before
}

fn open_twins(g: &Graph, u: usize, v: usize) -> bool {
    g.mask(u) & !bit(v) == g.mask(v) & !bit(u)
}

struct LineSearch<'a> {
    g: &'a Graph,
    pats: &'a [Compiled],
    white: Option<&'a [bool]>,
    before: Vec<u64>,
    seq: Vec<usize>,
}

impl LineSearch<'_> {
    /// Extends `seq` (and `pool` minus `placed`) to a full avoiding order of `pool`.
    fn run(&mut self, pool: &[usize], placed: u64, meter: &mut Meter, done: &mut dyn FnMut(&[usize], &mut Meter) -> Result<bool, Exhausted>) -> Result<bool, Exhausted> {
        if self.seq.len() == pool.len() {
            return done(&self.seq, meter);
        }
        for &v in pool {
            if placed & bit(v) != 0 || self.before[v] & !placed != 0 {
                continue;
            }
            meter.tick()?;
            self.seq.push(v);
            let lanes = Lanes { g: self.g, seqs: [&self.seq, &[]], white: self.white };
            if !self.pats.iter().any(|c| lanes.find(c, Some(0)).is_some()) && self.run(pool, placed | bit(v), meter, done)? {
                return Ok(true);
            }
            self.seq.pop();
        }
        Ok(false)
    }
}

/// Each proper 2-coloring, as `white` flags: one per choice of color for
/// each component.
fn colorings(g: &Graph) -> Option<Vec<Vec<bool>>> {
    let base = g.two_coloring()?;
    let comps = g.components();
    let mut out = Vec::with_capacity(1 << comps.len().min(20));
    for flips in 0u64..1 << comps.len() {
        let mut c = base.clone();
        for (i, comp) in comps.iter().enumerate() {
            if flips >> i & 1 == 1 {
                for &v in comp {
                    c[v] = !c[v];
                }
            }
        }
        out.push(c);
    }
    Some(out)
}

/// Searches for an ordering of `g` avoiding every pattern of `family`:
/// a total order (plain), a total order and a proper 2-coloring
/// (bicolored), or a bipartition with an order on each side (bipartite).
/// Vertices are placed left to right and a prefix is dropped as soon as a
/// pattern ends at its newest vertex.
pub fn ord_membership(g: &Graph, family: &PatternFamily, budget: Budget) -> Result<Membership, PatternError> {
    let n = g.n();
    if n > MAX_SEARCH_N {
        return Err(PatternError::TooLarge { n, limit: MAX_SEARCH_N });
    }
    let pats: Vec<Compiled> = family.patterns.iter().map(Compiled::new).collect();
    let mut meter = Meter { budget, nodes: 0, start: Instant::now() };
    let all: Vec<usize> = (0..n).collect();
    let found = match family.flavor() {
        "plain" => {
            let mut s = LineSearch { g, pats: &pats, white: None, before: twin_masks(n, |u, v| open_twins(g, u, v)), seq: vec![] };
            let mut cert = None;
            let r = s.run(&all, 0, &mut meter, &mut |seq, _| {
                cert = Some(Certificate::Order(VertexOrder::new(seq.to_vec()).expect("permutation")));
                Ok(true)
            });
            r.map(|_| cert)
        }
        "bicolored" => {
            let mut cert = None;
            let mut r = Ok(false);
            for white in colorings(g).unwrap_or_default() {
                let before = twin_masks(n, |u, v| white[u] == white[v] && open_twins(g, u, v));
                let mut s = LineSearch { g, pats: &pats, white: Some(&white), before, seq: vec![] };
                r = s.run(&all, 0, &mut meter, &mut |seq, _| {
                    let order = VertexOrder::new(seq.to_vec()).expect("permutation");
                    cert = Some(Certificate::Colored { order, white: white.clone() });
                    Ok(true)
                });
                if !matches!(r, Ok(false)) {
                    break;
                }
            }
            r.map(|_| cert)
        }
        _ => sided(g, &pats, &mut meter),
    };
    let Ok(found) = found else {
        return Ok(Membership::BudgetExceeded { nodes: meter.nodes });
    };
    Ok(match found {
        Some(cert) => {
            for p in &family.patterns {
                assert!(occurs(g, cert.host(), p)?.is_none(), "search returned an order containing {}", p.name);
            }
            Membership::Member(cert)
        }
        None => Membership::NonMember,
    })
}

fn sided(g: &Graph, pats: &[Compiled], meter: &mut Meter) -> Result<Option<Certificate>, Exhausted> {
    let n = g.n();
    let only_a: Vec<Compiled> = pats.iter().filter(|c| !c.uses_lane(1)).cloned().collect();
    let with_b: Vec<Compiled> = pats.iter().filter(|c| c.uses_lane(1)).cloned().collect();
    for white in colorings(g).unwrap_or_default() {
        let side_a: Vec<usize> = (0..n).filter(|&v| !white[v]).collect();
        let side_b: Vec<usize> = (0..n).filter(|&v| white[v]).collect();
        let mask_a = side_a.iter().fold(0u64, |m, &v| m | bit(v));
        let across = |u: usize| if white[u] { mask_a } else { !mask_a };
        let before = twin_masks(n, |u, v| white[u] == white[v] && g.mask(u) & across(u) == g.mask(v) & across(v));
        let mut cert = None;
        let mut outer = LineSearch { g, pats: &only_a, white: None, before: before.clone(), seq: vec![] };
        let found = outer.run(&side_a, !mask_a, meter, &mut |a_seq, meter| {
            let mut inner = BSearch { g, pats: &with_b, a: a_seq, before: &before, seq: vec![] };
            if inner.run(&side_b, mask_a, meter)? {
                cert = Some(Certificate::Sided { a: a_seq.to_vec(), b: inner.seq });
                return Ok(true);
            }
            Ok(false)
        })?;
        if found {
            return Ok(cert);
        }
    }
    Ok(None)
}

struct BSearch<'a> {
    g: &'a Graph,
    pats: &'a [Compiled],
    a: &'a [usize],
    before: &'a [u64],
    seq: Vec<usize>,
}

impl BSearch<'_> {
    fn run(&mut self, pool: &[usize], placed: u64, meter: &mut Meter) -> Result<bool, Exhausted> {
        if self.seq.len() == pool.len() {
            return Ok(true);
        }
        for &v in pool {
            if placed & bit(v) != 0 || self.before[v] & !placed != 0 {
                continue;
            }
            meter.tick()?;
            self.seq.push(v);
            let lanes = Lanes { g: self.g, seqs: [self.a, &self.seq], white: None };
            if !self.pats.iter().any(|c| lanes.find(c, Some(1)).is_some()) && self.run(pool, placed | bit(v), meter)? {
                return Ok(true);
            }
            self.seq.pop();
        }
        Ok(false)
    }
}
