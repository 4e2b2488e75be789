//! Width parameters that bound thinness: exact bandwidth and pathwidth with
//! witnesses, path decompositions and the class assignment they induce,
//! the vertex isoperimetric peak, and diameter.

mod bandwidth;
mod decomposition;
mod peak;

pub use bandwidth::{bandwidth, Labeling, MAX_BANDWIDTH_N};
pub use decomposition::{
    partition_from_decomposition, pathwidth, proper_decomposition_from_labeling, PathDecomposition, MAX_PATHWIDTH_N,
};
pub use peak::{diameter, iso_peak, MAX_PEAK_N};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum BoundsError {
    #[error("graph has {n} vertices; this computation supports at most {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("labeling is not injective: vertices {0} and {1} share a label")]
    NotInjective(usize, usize),
    #[error("expected {expected} entries, got {got}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("invalid path decomposition: {0}")]
    InvalidDecomposition(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
