use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// A closed-form value that must be an integer is not; the candidate is rejected.
    #[error("non-integral value for {0}")]
    NonIntegral(&'static str),

    #[error("overdetermined Hilbert conditions are inconsistent at t = {at}")]
    InconsistentHilbert { at: i64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("classification mismatch at stage `{stage}`: expected {expected}, found {found}")]
    ClassificationMismatch {
        stage: String,
        expected: String,
        found: String,
    },

    #[error("delta mismatch for {row}: stored {stored}, recomputed {computed}")]
    DeltaMismatch {
        row: String,
        stored: i64,
        computed: i64,
    },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
