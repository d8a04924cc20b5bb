use std::path::PathBuf;

use thiserror::Error;

/// Broad failure category, used by front ends to choose an exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Input,
    Config,
    Io,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("point has no coordinates")]
    EmptyPoint,

    #[error("coordinate {index} is not finite ({value})")]
    NonFinite { index: usize, value: f64 },

    #[error("dataset is empty")]
    EmptyDataset,

    #[error("vertex index {index} out of range for {count} vertices")]
    VertexOutOfRange { index: usize, count: usize },

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("edge ({u}, {v}) closes a cycle")]
    Cycle { u: usize, v: usize },

    #[error("edge weight {0} is negative or not finite")]
    BadWeight(f64),

    #[error("edge ({u}, {v}) is not part of the tree")]
    EdgeNotInTree { u: usize, v: usize },

    #[error("cluster edges do not form a single tree over its members")]
    NotATree,

    #[error("degenerate input: {0}")]
    Degenerate(&'static str),

    #[error("cluster count k = {k} is outside [1, {n}]")]
    InvalidK { k: usize, n: usize },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("exhaustive oracle refuses {0} points (limit is 8)")]
    OracleTooLarge(usize),

    #[error("{path}: line {line}: {message}")]
    Parse {
        path: PathBuf,
        line: u64,
        message: String,
    },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Config(_) => ErrorKind::Config,
            Error::Io { .. } => ErrorKind::Io,
            _ => ErrorKind::Input,
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
