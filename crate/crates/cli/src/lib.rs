//! Front end for the `widthlab` binary: verification suites, formula tables
//! and the report formats they write.

pub mod report;
pub mod suites;
pub mod tables;

use thiserror::Error;

pub use report::{Format, Record, Report, Table};
pub use suites::{run_suite, Suite, SuiteConfig};
pub use tables::{emit_table, Formula, Grid};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Lib(#[from] widthlab::Error),
    #[error("{0}")]
    Usage(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// 2 for usage and cap errors, 1 for everything that went wrong while
    /// checking.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Lib(e) => match e {
                widthlab::Error::Parameter(_) | widthlab::Error::SizeCap { .. } | widthlab::Error::Parse { .. } => 2,
                _ => 1,
            },
            CliError::Io(_) | CliError::Csv(_) | CliError::Json(_) => 2,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
