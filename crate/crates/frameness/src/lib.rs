//! File formats, reports and the `frameness` command-line tool built on
//! [`frameness_core`].

pub mod cli;
pub mod error;
pub mod formats;
pub mod report;
pub mod verify;

pub use error::{CliError, CliResult};
