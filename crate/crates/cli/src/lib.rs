//! Library surface of the `frl` command-line tool: relation ingestion,
//! subcommand runners, and structured reports.

pub mod commands;
pub mod input;
pub mod report;
