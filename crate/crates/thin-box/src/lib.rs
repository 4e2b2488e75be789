//! Rectangle intersection models for 2-thin graphs: the two-diagonal
//! construction, its grounded variant, the model predicates, and recovery
//! of a consistent representation from a model.
//!
//! All coordinates are integers equal to twice the geometric value, so
//! half-unit offsets are exact. Rectangles are closed.

mod build;
mod model;
mod predicates;
mod recover;
pub mod svg;

pub use build::{build_m1, build_m2, u_values, UValues};
pub use model::{BoxModel, Rect};
pub use predicates::{check_bi_semi_proper, check_blocking, check_diagonal, Diagonal, DiagonalReport, Side};
pub use recover::recover_representation;

use thin_graph::GraphError;
use thin_order::Triple;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum BoxError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("representation has {k} classes; this construction needs exactly 2")]
    NotTwoClasses { k: usize },
    #[error("representation is not consistent with the graph (r={}, s={}, t={})", .0.r, .0.s, .0.t)]
    Inconsistent(Triple),
    #[error("model is not {required}{}", witness.map(|(a, b)| format!(" (witness {a}, {b})")).unwrap_or_default())]
    Precondition { required: &'static str, witness: Option<(usize, usize)> },
    #[error("invalid model: {0}")]
    Invalid(String),
}
