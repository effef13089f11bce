use thiserror::Error;

/// Errors shared by every module in the crate.
///
/// `Parse` is reserved for malformed input files; everything else reports a
/// violated precondition or an explicitly unsupported request.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("degenerate game: {0}")]
    Degenerate(String),

    #[error("unsupported shape: {0}")]
    UnsupportedShape(String),

    #[error("unsupported size: {0}")]
    UnsupportedSize(String),

    #[error("not classifiable: {0}")]
    NotClassifiable(String),

    #[error("a pure saddle point exists (value {value}); solve it with saddle_points instead")]
    SaddleExists { value: f64 },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
