use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] fragpd_core::Error),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{0}")]
    Param(String),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::Param(msg.into())
    }

    /// Process exit status: 2 for bad parameters, 3 for exceeded caps, 4 for
    /// unparseable input. IO failures are reported as parse errors, since
    /// they mean the input could not be read.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Core(fragpd_core::Error::Parameter(_)) | Error::Param(_) => 2,
            Error::Core(fragpd_core::Error::CapExceeded { .. }) => 3,
            Error::Parse { .. } | Error::Io { .. } | Error::Json(_) => 4,
        }
    }
}
