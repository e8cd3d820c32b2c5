//! Command-line front end and file formats for `cgspec-core`.

pub mod cli;
mod error;
pub mod input;
pub mod render;
pub mod verify;

pub use error::CliError;
