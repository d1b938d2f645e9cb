//! Command-line front end for `circgeo-core`: file formats, reports,
//! rendering and the exploration harness.

pub mod analyze;
pub mod commands;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod files;
pub mod render;

pub use commands::{run, Cli};
pub use error::CliError;
