//! Random instances, the worked-example registry, property suites and
//! matrix file I/O.

pub mod exec;
pub mod generate;
pub mod highprec;
pub mod matrix_file;
pub mod registry;
pub mod suites;

pub use exec::Execution;
pub use generate::InstanceSpec;
pub use matrix_file::{MatrixFile, MatrixFileError};
pub use suites::{run_suite, PropertyReport, RunOptions, Suite, SuiteError};
