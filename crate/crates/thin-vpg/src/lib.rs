//! Orthogonal grid-path models: L-models of 2-thin graphs, monotone
//! L-models with the blocking check, and bounded-bend models of 3-thin
//! graphs. Coordinates are integers; paths are closed polylines.

mod lmodel;
mod path;
mod three;

pub use lmodel::{blocking_violations, build_m3, build_m4, check_blocking_l};
pub use path::{path_intersection_graph, GridPath, GridPathModel, Shape, MAX_POINTS};
pub use three::build_vpg_3thin;

use thin_box::BoxError;
use thin_graph::GraphError;
use thin_order::Triple;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum VpgError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Box(#[from] BoxError),
    #[error("representation is not consistent with the graph (r={}, s={}, t={})", .0.r, .0.s, .0.t)]
    Inconsistent(Triple),
    #[error("representation has {k} classes; at most {max} supported")]
    TooManyClasses { k: usize, max: usize },
    #[error("class {class} is not an independent set")]
    NotIndependent { class: usize },
    #[error("path of vertex {vertex} is not a one-bend L")]
    NotL { vertex: usize },
    #[error("invalid path: {0}")]
    InvalidPath(String),
}
