//! Vertex orders versus partitions: consistency, conflict graphs, and exact
//! (proper / independent) thinness by branch-and-bound.

mod certificate;
pub mod coloring;
mod conflict;
mod consistency;
mod solver;

pub use certificate::{Certificate, CertificateError, ThinnessKind};
pub use conflict::{conflict_graph, min_classes_for_order};
pub use consistency::{consistency_violation, is_consistent, verify_certificate, ConsistencyMode, Triple};
pub use solver::{exact_thinness, Budget, SolveError, ThinnessResult, MAX_SOLVER_N};
