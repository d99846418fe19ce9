//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch in {context}: expected {expected}, got {actual}")]
    Shape {
        context: &'static str,
        expected: String,
        actual: String,
    },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("invalid state: {0}")]
    State(String),

    #[error("parse error in {path} at line {line}, column {column}: {message}")]
    CsvParse {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },

    #[error("parse error in {path} at byte offset {offset}: {message}")]
    IdxParse {
        path: String,
        offset: u64,
        message: String,
    },

    #[error("unknown class id {class_id} (dataset has {n_classes} classes)")]
    UnknownClass { class_id: usize, n_classes: usize },

    #[error("non-finite {what} at iteration {iteration}, class {class_id}")]
    NonFinite {
        what: &'static str,
        iteration: usize,
        class_id: usize,
    },

    #[error("checkpoint version mismatch: expected {expected}, found {found}")]
    VersionMismatch { expected: String, found: String },

    #[error("I/O error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn shape(context: &'static str, expected: impl ToString, actual: impl ToString) -> Self {
        Error::Shape {
            context,
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }

    pub(crate) fn io(path: &std::path::Path, source: std::io::Error) -> Self {
        Error::Io {
            path: path.display().to_string(),
            source,
        }
    }

    /// Process exit code for the CLI: 1 config error, 2 numeric failure, 3 I/O error.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::Config(_)
            | Error::Argument(_)
            | Error::CsvParse { .. }
            | Error::IdxParse { .. }
            | Error::VersionMismatch { .. }
            | Error::UnknownClass { .. } => 1,
            Error::Shape { .. } | Error::State(_) | Error::NonFinite { .. } => 2,
            Error::Io { .. } => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
