//! Library side of the `l2disc` command-line tool: point-set generation,
//! discrepancy evaluation, verification suites and tables, all writing CSV.

pub mod commands;
pub mod error;
pub mod params;
pub mod record;
pub mod suites;
pub mod tables;

pub use error::{CliError, CliResult};

/// Formats a real with 17 significant digits.
pub fn fmt_real(x: f64) -> String {
    format!("{x:.16e}")
}
