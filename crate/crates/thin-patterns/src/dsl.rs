//! Text form: `pattern plain 4; name P6; edge 1 3; edge 2 4; nonedge 2 3`.
//!
//! Statements end at `;` or a newline; `#` starts a comment. Vertices are
//! 1-based; on bipartite patterns (`pattern bipartite <left> <right>`) the
//! second side is primed (`2'`). Bicolored patterns list `white` vertices.

use crate::pattern::{Flavor, Pattern};
use crate::PatternError;

pub fn format_pattern(p: &Pattern) -> String {
    let mut parts = vec![match p.flavor {
        Flavor::Plain => format!("pattern plain {}", p.size),
        Flavor::Bicolored { .. } => format!("pattern bicolored {}", p.size),
        Flavor::Bipartite { left } => format!("pattern bipartite {} {}", left, p.size - left),
    }];
    if !p.name.is_empty() {
        parts.push(format!("name {}", p.name));
    }
    if let Flavor::Bicolored { white } = &p.flavor {
        if !white.is_empty() {
            let w: Vec<String> = white.iter().map(|&v| p.vertex_label(v)).collect();
            parts.push(format!("white {}", w.join(" ")));
        }
    }
    for (kw, list) in [("edge", &p.edges), ("nonedge", &p.nonedges)] {
        for &(a, b) in list {
            parts.push(format!("{kw} {} {}", p.vertex_label(a), p.vertex_label(b)));
        }
    }
    parts.join("; ")
}

struct Draft {
    name: String,
    size: usize,
    left: Option<usize>,
    bicolored: bool,
    white: Vec<usize>,
    edges: Vec<(usize, usize)>,
    nonedges: Vec<(usize, usize)>,
    at: usize,
}

impl Draft {
    fn vertex(&self, tok: &str) -> Result<usize, String> {
        let (digits, primed) = match tok.strip_suffix('\'') {
            Some(d) => (d, true),
            None => (tok, false),
        };
        let i: usize = digits.parse().map_err(|_| format!("bad vertex {tok:?}"))?;
        let (offset, limit) = match (self.left, primed) {
            (Some(l), true) => (l, self.size - l),
            (Some(l), false) => (0, l),
            (None, false) => (0, self.size),
            (None, true) => return Err(format!("primed vertex {tok} outside a bipartite pattern")),
        };
        if i == 0 || i > limit {
            return Err(format!("vertex {tok} out of range"));
        }
        Ok(offset + i - 1)
    }

    fn finish(self) -> Result<Pattern, PatternError> {
        let flavor = match (self.left, self.bicolored) {
            (Some(left), _) => Flavor::Bipartite { left },
            (None, true) => Flavor::Bicolored { white: self.white },
            (None, false) => Flavor::Plain,
        };
        Pattern::new(self.name, self.size, &self.edges, &self.nonedges, flavor)
            .map_err(|e| PatternError::Syntax { statement: self.at, message: e.to_string() })
    }
}

/// Parses any number of patterns, each opened by a `pattern` header.
pub fn parse_patterns(text: &str) -> Result<Vec<Pattern>, PatternError> {
    let statements = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .flat_map(|l| l.split(';'))
        .map(str::trim)
        .filter(|s| !s.is_empty());
    let mut out = Vec::new();
    let mut cur: Option<Draft> = None;
    for (idx, stmt) in statements.enumerate() {
        let at = idx + 1;
        let err = |message: String| PatternError::Syntax { statement: at, message };
        let words: Vec<&str> = stmt.split_whitespace().collect();
        if words[0] == "pattern" {
            if let Some(d) = cur.take() {
                out.push(d.finish()?);
            }
            let num = |i: usize| -> Result<usize, PatternError> {
                words.get(i).and_then(|w| w.parse().ok()).ok_or_else(|| err(format!("expected a count in {stmt:?}")))
            };
            let (size, left, bicolored) = match words.get(1).copied() {
                Some("plain") if words.len() == 3 => (num(2)?, None, false),
                Some("bicolored") if words.len() == 3 => (num(2)?, None, true),
                Some("bipartite") if words.len() == 4 => (num(2)? + num(3)?, Some(num(2)?), false),
                _ => return Err(err(format!("bad header {stmt:?}"))),
            };
            cur = Some(Draft { name: String::new(), size, left, bicolored, white: vec![], edges: vec![], nonedges: vec![], at });
            continue;
        }
        let d = cur.as_mut().ok_or_else(|| err("statement before any pattern header".into()))?;
        match (words[0], &words[1..]) {
            ("name", [n]) => d.name = n.to_string(),
            ("white", ws) if d.bicolored => {
                for w in ws {
                    let v = d.vertex(w).map_err(err)?;
                    d.white.push(v);
                }
            }
            ("edge" | "nonedge", [a, b]) => {
                let pair = (d.vertex(a).map_err(err)?, d.vertex(b).map_err(err)?);
                if words[0] == "edge" {
                    d.edges.push(pair);
                } else {
                    d.nonedges.push(pair);
                }
            }
            _ => return Err(err(format!("unrecognized statement {stmt:?}"))),
        }
    }
    if let Some(d) = cur {
        out.push(d.finish()?);
    }
    Ok(out)
}

/// Parses exactly one pattern.
pub fn parse_pattern(text: &str) -> Result<Pattern, PatternError> {
    let mut all = parse_patterns(text)?;
    if all.len() != 1 {
        return Err(PatternError::Syntax { statement: 0, message: format!("expected one pattern, found {}", all.len()) });
    }
    Ok(all.remove(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{builtin_patterns, pattern};

    #[test]
    fn catalog_round_trips() {
        for p in builtin_patterns() {
            let text = format_pattern(&p);
            assert_eq!(parse_pattern(&text).unwrap(), p, "{text}");
        }
        let all: String = builtin_patterns().iter().map(|p| format_pattern(p) + "\n").collect();
        assert_eq!(parse_patterns(&all).unwrap(), builtin_patterns());
    }

    #[test]
    fn documented_forms() {
        let p6 = parse_pattern("pattern plain 4; edge 1 3; edge 2 4; nonedge 2 3").unwrap();
        assert_eq!((p6.edges.clone(), p6.nonedges.clone()), (pattern("P6").unwrap().edges, vec![(1, 2)]));
        assert_eq!(format_pattern(&pattern("R2").unwrap()), "pattern bipartite 2 2; name R2; edge 1 2'; edge 2 1'; nonedge 2 2'");
        assert_eq!(format_pattern(&pattern("Q1").unwrap()), "pattern bicolored 3; name Q1; white 3; edge 1 3; nonedge 2 3");
    }

    #[test]
    fn syntax_errors_name_the_statement() {
        let e = parse_pattern("pattern plain 3\nedge 1 4").unwrap_err();
        assert!(matches!(e, PatternError::Syntax { statement: 2, .. }), "{e}");
        assert!(parse_pattern("edge 1 2").is_err());
        assert!(parse_pattern("pattern plain 3; edge 1 2'").is_err());
        assert!(parse_pattern("pattern plain 3; edge 1 2; nonedge 2 1").is_err());
        assert!(parse_pattern("pattern weird 3").is_err());
        assert!(parse_pattern("pattern bipartite 1 1; edge 1 1'; nonedge 1' 1").is_err());
    }
}
