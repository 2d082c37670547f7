//! Front end for `distpf`: problem files, subcommands and result documents.

pub mod args;
pub mod commands;
pub mod config;
pub mod number;
pub mod report;

pub use args::{Cli, Command, Flags};
pub use commands::{run, Outcome, EXIT_LOG_OBSTRUCTION, EXIT_OK, EXIT_RESIDUAL};
pub use config::{ConfigError, Mode, ProblemSpec, RootChoice};
pub use report::{CoeffTable, Report, ResidualRow};
