//! Scenario files, CSV output and the subcommands behind the `dsc` binary.

pub mod commands;
pub mod output;
pub mod scenario;
