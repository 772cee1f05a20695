//! Report builders behind the `surdcf` command line.

pub mod error;
pub mod report;
pub mod sweep;

pub use error::{CliError, ExitStatus};
