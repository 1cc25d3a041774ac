//! Command-line front end: evaluation, identity verification, listing and
//! the truncation benchmark.

pub mod app;
pub mod bench;
pub mod report;
