//! Library half of the `ratinterp` binary: spec files, the interpolation
//! driver, benchmark sweeps and the acceptance self-test.

pub mod bench;
pub mod error;
pub mod interpolate;
pub mod selftest;
pub mod spec_file;

pub use error::{CliError, Result};
