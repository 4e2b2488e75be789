//! Ordered trigraph patterns (compulsory edges, compulsory non-edges, free
//! pairs) in three flavors, occurrence checks against ordered graphs, and
//! exhaustive membership search for the classes they define.

mod catalog;
mod classify;
mod dsl;
mod occur;
mod pattern;
mod search;

pub use catalog::{builtin_patterns, family, pattern, sides_pattern};
pub use classify::{classify, ClassReport, ClassVerdict, KNOWN_CLASSES};
pub use dsl::{format_pattern, parse_pattern, parse_patterns};
pub use occur::{occurs, Host};
pub use pattern::{Flavor, Pattern, PatternFamily};
pub use search::{ord_membership, Certificate, Membership, MAX_SEARCH_N};

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum PatternError {
    #[error("invalid pattern: {0}")]
    Invalid(String),
    #[error("unknown pattern {0}")]
    Unknown(String),
    #[error("family mixes {0} and {1} patterns")]
    MixedFlavor(String, String),
    #[error("{pattern} is a {flavor} pattern but the host is {host}")]
    FlavorMismatch { pattern: String, flavor: &'static str, host: &'static str },
    #[error("bad host: {0}")]
    BadHost(String),
    #[error("pattern syntax, statement {statement}: {message}")]
    Syntax { statement: usize, message: String },
    #[error("graph has {n} vertices; search supports at most {limit}")]
    TooLarge { n: usize, limit: usize },
}
