//! The `thin` command-line tool: argument types, command dispatch and the
//! cross-check sweeps shared with the acceptance suite.

mod app;
pub mod sweep;

pub use app::{run, Cli, CliError, Command, Output};

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const INPUT: i32 = 1;
    pub const BUDGET: i32 = 2;
    pub const INVALID_CERTIFICATE: i32 = 3;
    pub const SWEEP_MISMATCH: i32 = 4;
}
