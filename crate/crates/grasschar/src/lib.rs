//! File cache, claim runner, report formats and command-line front end
//! for [`grasschar_core`].

pub mod cache;
pub mod cli;
pub mod compute;
pub mod error;
pub mod manifest;
pub mod report;
pub mod runner;

pub use cache::{CacheMode, GbCache};
pub use error::CliError;
