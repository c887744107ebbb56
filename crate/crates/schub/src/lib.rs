//! Command line front end and verification harness for `schub-core`.

pub mod error;
pub mod input;
mod run;
pub mod sample;
pub mod suites;

pub use run::{run, value_json, EXIT_DOMAIN, EXIT_OK, EXIT_VERIFY, THREADS_ENV};
