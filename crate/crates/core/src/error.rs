use std::path::PathBuf;

use thiserror::Error;

use crate::oeis::SequenceId;

/// A problem with a single line of an OEIS text file.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LineError {
    #[error("malformed sequence identifier {0:?}")]
    BadId(String),
    #[error("non-integer token {token:?} at position {position}")]
    BadTerm { position: usize, token: String },
    #[error("expected \"index term\", found {0:?}")]
    BadLayout(String),
    #[error("index {found} does not follow {previous}")]
    IndexGap { previous: i64, found: i64 },
    #[error("duplicate index {0}")]
    DuplicateIndex(i64),
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {source}")]
    Parse { line: usize, source: LineError },

    #[error("{0} not found upstream")]
    NotFound(SequenceId),

    #[error("network failure fetching {url}: {message}")]
    Network { url: String, message: String },

    #[error("malformed record for {id}: {message}")]
    MalformedRecord { id: SequenceId, message: String },

    #[error("distance undefined: the sequence has no nonzero terms")]
    UndefinedDistance,

    #[error("degenerate fit: {0}")]
    DegenerateFit(&'static str),

    #[error("no consensus set with at least two points")]
    NoConsensus,

    #[error("shape mismatch: expected {expected}, got {found}")]
    Shape { expected: String, found: String },

    #[error("model has no trees")]
    EmptyModel,

    #[error("total support is zero")]
    ZeroSupport,

    #[error("eigen-decomposition failed: {0}")]
    Eigen(String),

    #[error("invalid argument: {0}")]
    Invalid(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: {message}")]
    Format { path: PathBuf, message: String },

    #[error("[{stage}] {source}")]
    Stage {
        stage: &'static str,
        #[source]
        source: Box<Error>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn format(path: impl Into<PathBuf>, message: impl Into<String>) -> Self {
        Error::Format {
            path: path.into(),
            message: message.into(),
        }
    }

    pub(crate) fn shape(expected: impl std::fmt::Display, found: impl std::fmt::Display) -> Self {
        Error::Shape {
            expected: expected.to_string(),
            found: found.to_string(),
        }
    }

    pub(crate) fn invalid(message: impl Into<String>) -> Self {
        Error::Invalid(message.into())
    }

    pub fn in_stage(self, stage: &'static str) -> Self {
        match self {
            e @ Error::Stage { .. } => e,
            e => Error::Stage {
                stage,
                source: Box::new(e),
            },
        }
    }

    /// Process exit status: 1 usage, 2 data, 3 internal.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Stage { source, .. } => source.exit_code(),
            Error::Invalid(_) => 1,
            Error::EmptyModel | Error::Eigen(_) => 3,
            _ => 2,
        }
    }
}
