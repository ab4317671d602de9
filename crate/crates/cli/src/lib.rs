//! Library side of the `g2lab` command-line tool.

pub mod commands;
pub mod config;
pub mod render;
pub mod report;
pub mod verify;

pub use config::{Format, Mode, RunConfig};
pub use report::{CheckSummary, VerificationReport};
pub use verify::cmd_verify;
