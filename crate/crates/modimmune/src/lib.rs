//! File formats, experiment jobs and the command line around
//! [`modimmune_core`].
//!
//! Every job is a plain serializable value. Running it writes a JSON run
//! manifest first and the results second, so any output can be regenerated
//! byte for byte from its manifest with `modimmune replay`.

pub mod cli;
pub mod config;
pub mod error;
pub mod format;
pub mod io;
pub mod jobs;
pub mod manifest;
pub mod parallel;

pub use error::{CliError, CliResult};
