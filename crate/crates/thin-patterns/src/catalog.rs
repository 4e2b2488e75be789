use crate::pattern::{Flavor, Pattern, PatternFamily};
use crate::PatternError;

/// `"13"` -> `(0, 2)`; for bipartite patterns the second digit is primed.
fn pairs(spec: &[&str], left: Option<usize>) -> Vec<(usize, usize)> {
    spec.iter()
        .map(|s| {
            let d: Vec<usize> = s.chars().map(|c| c.to_digit(10).expect("digit") as usize - 1).collect();
            (d[0], d[1] + left.unwrap_or(0))
        })
        .collect()
}

fn plain(name: &str, size: usize, edges: &[&str], nonedges: &[&str]) -> Pattern {
    Pattern::new(name, size, &pairs(edges, None), &pairs(nonedges, None), Flavor::Plain).expect("catalog entry")
}

fn bicolored(name: &str, white: &[usize], edges: &[&str], nonedges: &[&str]) -> Pattern {
    let white = white.iter().map(|w| w - 1).collect();
    Pattern::new(name, 3, &pairs(edges, None), &pairs(nonedges, None), Flavor::Bicolored { white })
        .expect("catalog entry")
}

fn bipartite(name: &str, left: usize, right: usize, edges: &[&str], nonedges: &[&str]) -> Pattern {
    let l = Some(left);
    Pattern::new(name, left + right, &pairs(edges, l), &pairs(nonedges, l), Flavor::Bipartite { left })
        .expect("catalog entry")
}

/// The eighteen named patterns.
pub fn builtin_patterns() -> Vec<Pattern> {
    vec![
        plain("P1", 3, &["13"], &["23"]),
        plain("P2", 3, &["13"], &["12"]),
        plain("P3", 3, &["13"], &["12", "23"]),
        plain("P4", 3, &["12", "13", "23"], &[]),
        plain("P5", 3, &["12", "23"], &[]),
        plain("P6", 4, &["13", "24"], &["23"]),
        plain("P7", 5, &["13", "35"], &["23", "34"]),
        plain("P8", 6, &["13", "46"], &["23", "45"]),
        plain("P9", 6, &["14", "34", "36"], &["24", "35"]),
        bicolored("Q1", &[3], &["13"], &["23"]),
        bicolored("Q2", &[1, 2], &["13"], &["23"]),
        bicolored("Q3", &[1], &["13"], &["12"]),
        bicolored("Q4", &[2, 3], &["13"], &["12"]),
        bipartite("R1", 2, 2, &["12", "21"], &["11"]),
        bipartite("R2", 2, 2, &["12", "21"], &["22"]),
        bipartite("R3", 3, 3, &["13", "31", "33"], &["23", "32"]),
        bipartite("R4", 3, 1, &["11", "31"], &["21"]),
        bipartite("R4'", 1, 3, &["11", "13"], &["12"]),
    ]
}

/// `S`: two edges, the first ending before the second starts. On a
/// connected bipartite graph an order avoiding `P5` and `S` lists one
/// color class entirely before the other.
pub fn sides_pattern() -> Pattern {
    plain("S", 4, &["12", "34"], &[])
}

/// Looks up a builtin pattern or `S`; `p` may stand for a prime.
pub fn pattern(name: &str) -> Result<Pattern, PatternError> {
    let canon = name.trim().to_ascii_uppercase().replace('P', "'");
    let canon = canon.strip_prefix('\'').map_or(canon.clone(), |rest| format!("P{rest}"));
    builtin_patterns()
        .into_iter()
        .chain([sides_pattern()])
        .find(|p| p.name == canon)
        .ok_or_else(|| PatternError::Unknown(name.to_string()))
}

/// Parses a family name such as `P6789`, `P1`, `R12`, `R1244'`, `Q1,Q2`,
/// `P3+P4` or `P569S`: a letter followed by pattern numbers, each
/// optionally primed, with `S` standing alone.
pub fn family(spec: &str) -> Result<PatternFamily, PatternError> {
    let mut names: Vec<String> = Vec::new();
    let mut letter: Option<char> = None;
    let mut prev = ' ';
    for c in spec.trim().chars() {
        let after_digit = std::mem::replace(&mut prev, c).is_ascii_digit();
        match c {
            'P' | 'Q' | 'R' | 'p' | 'q' | 'r' if !(c == 'p' && after_digit) => {
                letter = Some(c.to_ascii_uppercase());
            }
            'S' | 's' => {
                names.push("S".into());
                letter = None;
            }
            '0'..='9' => {
                let l = letter.ok_or_else(|| PatternError::Unknown(spec.to_string()))?;
                names.push(format!("{l}{c}"));
            }
            '\'' | 'p' => match names.last_mut() {
                Some(last) if !last.ends_with('\'') => last.push('\''),
                _ => return Err(PatternError::Unknown(spec.to_string())),
            },
            ',' | '+' | ' ' | '{' | '}' => {}
            _ => return Err(PatternError::Unknown(spec.to_string())),
        }
    }
    if names.is_empty() {
        return Err(PatternError::Unknown(spec.to_string()));
    }
    let patterns = names.iter().map(|n| pattern(n)).collect::<Result<Vec<_>, _>>()?;
    PatternFamily::new(spec.trim(), patterns)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(spec: &str) -> Vec<String> {
        family(spec).unwrap().patterns.into_iter().map(|p| p.name).collect()
    }

    #[test]
    fn catalog_entries() {
        let all = builtin_patterns();
        assert_eq!(all.len(), 18);
        let p6 = pattern("P6").unwrap();
        assert_eq!((p6.size, p6.edges.clone(), p6.nonedges.clone()), (4, vec![(0, 2), (1, 3)], vec![(1, 2)]));
        let r2 = pattern("R2").unwrap();
        assert_eq!(r2.flavor, Flavor::Bipartite { left: 2 });
        assert_eq!(r2.edges, vec![(0, 3), (1, 2)]);
        assert_eq!(r2.nonedges, vec![(1, 3)]);
        let q1 = pattern("Q1").unwrap();
        assert_eq!(q1.flavor, Flavor::Bicolored { white: vec![2] });
        assert_eq!((q1.edges.clone(), q1.nonedges.clone()), (vec![(0, 2)], vec![(1, 2)]));
    }

    #[test]
    fn family_names() {
        assert_eq!(names("P6789"), ["P6", "P7", "P8", "P9"]);
        assert_eq!(names("R1244'"), ["R1", "R2", "R4", "R4'"]);
        assert_eq!(names("R124p4"), ["R1", "R2", "R4'", "R4"]);
        assert_eq!(names("p3,p4"), ["P3", "P4"]);
        assert_eq!(names("Q1+Q2"), ["Q1", "Q2"]);
        assert_eq!(pattern("r4p").unwrap().name, "R4'");
        assert_eq!(names("P569S"), ["P5", "P6", "P9", "S"]);
        assert!(family("S1").is_err());
        assert!(family("P0").is_err());
        assert!(family("P1R2").is_err());
        assert!(family("X1").is_err());
        assert!(family("").is_err());
    }
}
