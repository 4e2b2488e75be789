use crate::PatternError;

/// How a pattern's vertices are ordered and colored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Flavor {
    /// One linear order.
    Plain,
    /// One linear order; the listed vertices are white, the rest black.
    Bicolored { white: Vec<usize> },
    /// Vertices `0..left` form the unprimed side, `left..size` the primed
    /// side, each side linearly ordered.
    Bipartite { left: usize },
}

impl Flavor {
    pub fn label(&self) -> &'static str {
        match self {
            Flavor::Plain => "plain",
            Flavor::Bicolored { .. } => "bicolored",
            Flavor::Bipartite { .. } => "bipartite",
        }
    }
}

/// A trigraph on `0..size`; pairs in neither list are free.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pattern {
    pub name: String,
    pub size: usize,
    pub edges: Vec<(usize, usize)>,
    pub nonedges: Vec<(usize, usize)>,
    pub flavor: Flavor,
}

fn normalize(pairs: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut out: Vec<_> = pairs.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    out.sort_unstable();
    out.dedup();
    out
}

impl Pattern {
    pub fn new(
        name: impl Into<String>,
        size: usize,
        edges: &[(usize, usize)],
        nonedges: &[(usize, usize)],
        flavor: Flavor,
    ) -> Result<Self, PatternError> {
        let name = name.into();
        let edges = normalize(edges);
        let nonedges = normalize(nonedges);
        let bad = |m: String| Err(PatternError::Invalid(format!("{name}: {m}")));
        for &(a, b) in edges.iter().chain(&nonedges) {
            if b >= size || a == b {
                return bad(format!("pair {a} {b} out of range"));
            }
            if let Flavor::Bipartite { left } = flavor {
                if (a < left) == (b < left) {
                    return bad(format!("pair {a} {b} lies within one side"));
                }
            }
        }
        if let Some(p) = edges.iter().find(|p| nonedges.binary_search(p).is_ok()) {
            return bad(format!("pair {} {} is both edge and non-edge", p.0, p.1));
        }
        let flavor = match flavor {
            Flavor::Bicolored { white } => {
                let mut white = white;
                white.sort_unstable();
                white.dedup();
                if white.iter().any(|&w| w >= size) {
                    return bad("white vertex out of range".into());
                }
                Flavor::Bicolored { white }
            }
            Flavor::Bipartite { left } if left > size => return bad("side larger than pattern".into()),
            f => f,
        };
        Ok(Pattern { name, size, edges, nonedges, flavor })
    }

    /// Required adjacency of a pair: `Some(true)` edge, `Some(false)` non-edge.
    pub fn relation(&self, a: usize, b: usize) -> Option<bool> {
        let p = (a.min(b), a.max(b));
        if self.edges.binary_search(&p).is_ok() {
            Some(true)
        } else if self.nonedges.binary_search(&p).is_ok() {
            Some(false)
        } else {
            None
        }
    }

    /// Human label of a vertex: 1-based, primed on the second bipartite side.
    pub fn vertex_label(&self, v: usize) -> String {
        match self.flavor {
            Flavor::Bipartite { left } if v >= left => format!("{}'", v - left + 1),
            _ => (v + 1).to_string(),
        }
    }

    pub fn is_white(&self, v: usize) -> bool {
        matches!(&self.flavor, Flavor::Bicolored { white } if white.contains(&v))
    }
}

/// Patterns of one flavor, named for reporting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternFamily {
    pub name: String,
    pub patterns: Vec<Pattern>,
}

impl PatternFamily {
    pub fn new(name: impl Into<String>, patterns: Vec<Pattern>) -> Result<Self, PatternError> {
        if let Some(first) = patterns.first() {
            if let Some(other) = patterns.iter().find(|p| p.flavor.label() != first.flavor.label()) {
                return Err(PatternError::MixedFlavor(first.name.clone(), other.name.clone()));
            }
        }
        Ok(PatternFamily { name: name.into(), patterns })
    }

    /// Flavor label shared by all members; `plain` for an empty family.
    pub fn flavor(&self) -> &'static str {
        self.patterns.first().map_or("plain", |p| p.flavor.label())
    }
}
