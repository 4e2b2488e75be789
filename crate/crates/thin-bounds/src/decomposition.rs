use serde::{Deserialize, Serialize};
use thin_graph::{Graph, Partition, Representation, VertexOrder};
use thin_order::{is_consistent, ConsistencyMode};

use crate::bandwidth::Labeling;
use crate::BoundsError;

pub const MAX_PATHWIDTH_N: usize = 16;

/// Bags `X_1..X_r`; JSON `{"bags": [[v, ..], ..]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathDecomposition {
    pub bags: Vec<Vec<usize>>,
}

impl PathDecomposition {
    pub fn new(bags: Vec<Vec<usize>>) -> Self {
        let bags = bags
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b.dedup();
                b
            })
            .collect();
        PathDecomposition { bags }
    }

    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(1).saturating_sub(1)
    }

    /// First and last bag index of each vertex of `0..n`, if present.
    pub fn spans(&self, n: usize) -> Vec<Option<(usize, usize)>> {
        let mut out: Vec<Option<(usize, usize)>> = vec![None; n];
        for (i, bag) in self.bags.iter().enumerate() {
            for &v in bag {
                if let Some(slot) = out.get_mut(v) {
                    *slot = Some(slot.map_or((i, i), |(s, _)| (s, i)));
                }
            }
        }
        out
    }

    /// Checks coverage, edge coverage and consecutiveness; returns the span
    /// `(s(v), e(v))` of every vertex.
    pub fn validate(&self, g: &Graph) -> Result<Vec<(usize, usize)>, BoundsError> {
        let bad = |m: String| Err(BoundsError::InvalidDecomposition(m));
        let n = g.n();
        if let Some(v) = self.bags.iter().flatten().find(|&&v| v >= n) {
            return bad(format!("vertex {v} out of range"));
        }
        let spans = self.spans(n);
        let mut out = Vec::with_capacity(n);
        for (v, span) in spans.iter().enumerate() {
            let Some((s, e)) = *span else {
                return bad(format!("vertex {v} is in no bag"));
            };
            if let Some(gap) = (s..=e).find(|&i| self.bags[i].binary_search(&v).is_err()) {
                return bad(format!("bags containing vertex {v} are not consecutive (missing from bag {gap})"));
            }
            out.push((s, e));
        }
        for (u, v) in g.edges() {
            let (su, eu) = out[u];
            let (sv, ev) = out[v];
            if su.max(sv) > eu.min(ev) {
                return bad(format!("no bag holds edge {u} {v}"));
            }
        }
        Ok(out)
    }

    /// No span strictly contains another.
    pub fn is_proper(&self, g: &Graph) -> Result<bool, BoundsError> {
        let spans = self.validate(g)?;
        Ok(spans.iter().all(|&(s, e)| {
            spans.iter().all(|&(s2, e2)| !(s2 <= s && e <= e2 && (s2, e2) != (s, e)))
        }))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self, BoundsError> {
        let raw: PathDecomposition = serde_json::from_str(s)?;
        Ok(PathDecomposition::new(raw.bags))
    }
}

/// Exact pathwidth as the vertex separation number, by dynamic programming
/// over vertex sets placed first; the witness has bags `∂(S) + v` along an
/// optimal placement.
pub fn pathwidth(g: &Graph) -> Result<(usize, PathDecomposition), BoundsError> {
    let n = g.n();
    if n > MAX_PATHWIDTH_N {
        return Err(BoundsError::TooLarge { n, limit: MAX_PATHWIDTH_N });
    }
    if n == 0 {
        return Ok((0, PathDecomposition::new(vec![])));
    }
    let nb: Vec<u32> = (0..n).map(|v| g.mask(v) as u32).collect();
    let full = (1u32 << n) - 1;
    let boundary = |s: u32| (0..n).filter(|&v| s >> v & 1 == 1 && nb[v] & !s != 0).count();
    let size = 1usize << n;
    let mut best = vec![usize::MAX; size];
    let mut last = vec![0u8; size];
    best[0] = 0;
    for s in 1..size as u32 {
        let here = boundary(s);
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let cand = best[(s & !(1 << v)) as usize].max(here);
            if cand < best[s as usize] {
                best[s as usize] = cand;
                last[s as usize] = v as u8;
            }
        }
    }
    let mut seq = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let v = last[s as usize] as usize;
        seq.push(v);
        s &= !(1 << v);
    }
    seq.reverse();
    let mut bags = Vec::with_capacity(n);
    let mut placed = 0u32;
    for &v in &seq {
        let mut bag: Vec<usize> = (0..n).filter(|&u| placed >> u & 1 == 1 && nb[u] & !placed != 0).collect();
        bag.push(v);
        bags.push(bag);
        placed |= 1 << v;
    }
    let pd = PathDecomposition::new(bags);
    debug_assert_eq!(pd.width(), best[full as usize]);
    Ok((best[full as usize], pd))
}

/// Bags are the windows `[t, t + b]` of label values, `b` the bandwidth of
/// `f`, sliding from `min f - b` to `max f` so every vertex lies in the same
/// number of windows; empty and repeated windows are dropped. The result is
/// proper and has width at most `b`.
pub fn proper_decomposition_from_labeling(g: &Graph, f: &Labeling) -> Result<PathDecomposition, BoundsError> {
    let b = f.bandwidth_of(g)? as i64;
    let Some(&lo) = f.f.iter().min() else {
        return Ok(PathDecomposition::new(vec![]));
    };
    let hi = *f.f.iter().max().expect("nonempty");
    let mut bags: Vec<Vec<usize>> = Vec::new();
    let by_label = f.order();
    for t in lo - b..=hi {
        let bag: Vec<usize> = by_label.seq().iter().copied().filter(|&v| (t..=t + b).contains(&f.f[v])).collect();
        if !bag.is_empty() && bags.last() != Some(&bag) {
            bags.push(bag);
        }
    }
    Ok(PathDecomposition::new(bags))
}

/// Orders vertices by first bag (then last bag, then index) and gives the
/// vertices entering each bag distinct classes unused in that bag. The
/// partition is independent with at most width + 1 classes, consistent with
/// the order, and strongly consistent when `pd` is proper.
pub fn partition_from_decomposition(g: &Graph, pd: &PathDecomposition) -> Result<Representation, BoundsError> {
    let spans = pd.validate(g)?;
    let n = g.n();
    let mut seq: Vec<usize> = (0..n).collect();
    seq.sort_by_key(|&v| (spans[v], v));
    let mut class: Vec<Option<usize>> = vec![None; n];
    for bag in &pd.bags {
        let used: Vec<usize> = bag.iter().filter_map(|&v| class[v]).collect();
        let mut next = 0;
        for &v in bag {
            if class[v].is_none() {
                while used.contains(&next) || bag.iter().any(|&u| class[u] == Some(next)) {
                    next += 1;
                }
                class[v] = Some(next);
            }
        }
    }
    let labels: Vec<usize> = class.into_iter().map(|c| c.expect("every vertex lies in a bag")).collect();
    let rep = Representation::new(
        VertexOrder::new(seq).expect("permutation"),
        if n == 0 { Partition::single(0) } else { Partition::normalized(&labels) },
    )
    .expect("sizes match");
    let mode = if pd.is_proper(g)? { ConsistencyMode::Strong } else { ConsistencyMode::Consistent };
    assert!(is_consistent(g, &rep, mode).expect("sizes match"), "decomposition order must be {mode:?}");
    Ok(rep)
}
