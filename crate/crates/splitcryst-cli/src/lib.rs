//! Command line driver support for `splitcryst`: JSON and text reports and the
//! golden-table regression runner.

pub mod goldens;
pub mod report;

pub use goldens::{run_goldens, GoldenReport, Goldens, Mismatch};
