//! Library side of the `meg` command: subcommand bodies and the
//! theorem-verification suites.

pub mod commands;
pub mod suites;

pub use suites::{run_suite, InstanceRecord, SuiteId, SuiteSpec, TheoremReport};
