//! Command-line front end for the `cdkernel` library: measure files, kernel
//! reports, Schur tables and randomized verification suites.

pub mod app;
pub mod error;
pub mod measure_file;
pub mod random;
pub mod report;
pub mod suites;

pub use error::{CliError, CliResult};
