//! Standard-library companion to `surfinv-core`: JSON file formats,
//! deterministic parallel sweeps and the `surfinv` command-line tool.

pub mod commands;
pub mod formats;
pub mod sweep;

use surfinv_core::braid::BraidError;
use surfinv_core::chart::ChartError;
use surfinv_core::quandle::QuandleError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0}")]
    Input(String),
    #[error("search exhausted: {0}")]
    Exhausted(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// 1 for bad input, 2 for exhausted searches, 3 for broken invariants.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Input(_) | Error::Io(_) | Error::Json(_) => 1,
            Error::Exhausted(_) => 2,
            Error::Invariant(_) => 3,
        }
    }
}

impl From<BraidError> for Error {
    fn from(e: BraidError) -> Self {
        Error::Input(e.to_string())
    }
}

impl From<QuandleError> for Error {
    fn from(e: QuandleError) -> Self {
        Error::Input(e.to_string())
    }
}

impl From<ChartError> for Error {
    fn from(e: ChartError) -> Self {
        match e {
            ChartError::Exhausted(x) => Error::Exhausted(x.to_string()),
            ChartError::InvalidEvent { .. } | ChartError::BadStart { .. } | ChartError::BadEnd { .. } => {
                Error::Invariant(e.to_string())
            }
            other => Error::Input(other.to_string()),
        }
    }
}
