//! Command-line front end: graph file format, run reports and subcommands.

pub mod commands;
pub mod format;
pub mod report;

pub use commands::{run, Cli, CliError, Command, Outcome};
pub use format::{normalize, parse_graph, serialize_graph, ParseError};
pub use report::RunReport;
