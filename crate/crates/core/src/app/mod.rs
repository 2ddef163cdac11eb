//! Command line, JSON file formats and SVG output.

mod cli;
pub mod format;
pub mod svg;

pub use cli::{run, EXIT_INFEASIBLE, EXIT_INVALID, EXIT_OK, EXIT_USAGE};
