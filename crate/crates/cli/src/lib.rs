//! Command-line front end: problem files, point sets, command dispatch and
//! report rendering.

pub mod commands;
pub mod error;
pub mod points;
pub mod problem;
pub mod report;

pub use commands::{run, Cli, Command};
pub use error::{CliError, Issue};
pub use report::{emit, render, Body, Format, Report};
