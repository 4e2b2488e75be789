use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {v} out of range for graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex sets overlap at vertex {0}")]
    Overlap(usize),
    #[error("not a permutation of 0..{0}")]
    NotPermutation(usize),
    #[error("class {class} is unused in a partition with k = {k}")]
    EmptyClass { class: usize, k: usize },
    #[error("size mismatch: expected {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("enumeration limited to n <= {limit}, got {n}")]
    TooLarge { n: usize, limit: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
