//! File formats, reports and commands for the `eulerspace` tool.

pub mod commands;
pub mod error;
pub mod format;
pub mod props;
pub mod report;

pub use error::{CliError, Result};
pub use format::LabeledComplex;
