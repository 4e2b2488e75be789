//! Text and JSON graph formats.
//!
//! Text: first non-comment line `n m`, then `m` lines `u v` (0-based).
//! Lines starting with `#` are comments. JSON:
//! `{"n": 4, "edges": [[0,1],...], "names": ["a",...]}` with `names` optional.

use crate::{Graph, GraphError};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

impl std::str::FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format `{other}` (expected text|json)")),
        }
    }
}

/// A graph plus an optional vertex name table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedGraph {
    pub graph: Graph,
    pub names: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct JsonGraph {
    n: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    names: Option<Vec<String>>,
}

pub fn parse(input: &str, format: Format) -> Result<NamedGraph, GraphError> {
    match format {
        Format::Text => parse_text(input).map(|graph| NamedGraph { graph, names: None }),
        Format::Json => parse_json(input),
    }
}

pub fn parse_text(input: &str) -> Result<Graph, GraphError> {
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or(GraphError::Parse { line: 0, msg: "empty input".into() })?;
    let [n, m] = two_numbers(header, hline)?;
    let mut g = Graph::new(n);
    let mut count = 0;
    for (line, text) in lines {
        let [u, v] = two_numbers(text, line)?;
        g.try_add_edge(u, v).map_err(|e| GraphError::Parse { line, msg: e.to_string() })?;
        count += 1;
    }
    if count != m {
        return Err(GraphError::Parse { line: hline, msg: format!("header promises {m} edges, found {count}") });
    }
    Ok(g)
}

fn two_numbers(text: &str, line: usize) -> Result<[usize; 2], GraphError> {
    let nums: Vec<&str> = text.split_whitespace().collect();
    let err = |msg: String| GraphError::Parse { line, msg };
    if nums.len() != 2 {
        return Err(err(format!("expected two integers, got `{text}`")));
    }
    let a = nums[0].parse().map_err(|_| err(format!("bad integer `{}`", nums[0])))?;
    let b = nums[1].parse().map_err(|_| err(format!("bad integer `{}`", nums[1])))?;
    Ok([a, b])
}

pub fn parse_json(input: &str) -> Result<NamedGraph, GraphError> {
    let jg: JsonGraph = serde_json::from_str(input).map_err(|e| GraphError::Parse {
        line: e.line(),
        msg: e.to_string(),
    })?;
    let mut graph = Graph::new(jg.n);
    for [u, v] in jg.edges {
        graph.try_add_edge(u, v).map_err(|e| GraphError::Parse { line: 0, msg: e.to_string() })?;
    }
    if let Some(names) = &jg.names {
        if names.len() != jg.n {
            return Err(GraphError::SizeMismatch { expected: jg.n, got: names.len() });
        }
    }
    Ok(NamedGraph { graph, names: jg.names })
}

/// Text form; `comments` are emitted as leading `#` lines.
pub fn to_text(g: &Graph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        out.push_str("# ");
        out.push_str(c);
        out.push('\n');
    }
    let edges = g.edges();
    out.push_str(&format!("{} {}\n", g.n(), edges.len()));
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn to_json(g: &Graph, names: Option<&[String]>) -> String {
    let jg = JsonGraph {
        n: g.n(),
        edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        names: names.map(<[String]>::to_vec),
    };
    serde_json::to_string(&jg).expect("graph serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip_with_comments() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3), (1, 3)]).unwrap();
        let s = to_text(&g, &["demo".into()]);
        assert!(s.starts_with("# demo\n4 3\n"));
        assert_eq!(parse_text(&s).unwrap(), g);
    }

    #[test]
    fn json_round_trip_keeps_names() {
        let g = Graph::path(3);
        let names = vec!["a".to_string(), "b".into(), "c".into()];
        let s = to_json(&g, Some(&names));
        let back = parse_json(&s).unwrap();
        assert_eq!(back.graph, g);
        assert_eq!(back.names, Some(names));
    }

    #[test]
    fn text_errors_carry_line_numbers() {
        assert_eq!(
            parse_text("# c\n3 1\n0 x\n"),
            Err(GraphError::Parse { line: 3, msg: "bad integer `x`".into() })
        );
        assert!(matches!(parse_text("2 1\n0 5\n"), Err(GraphError::Parse { line: 2, .. })));
        assert!(matches!(parse_text("2 2\n0 1\n"), Err(GraphError::Parse { line: 1, .. })));
    }

    #[test]
    fn json_rejects_bad_names() {
        assert!(parse_json(r#"{"n":2,"edges":[],"names":["a"]}"#).is_err());
    }
}
