use thiserror::Error;

/// Crate-wide error type. Variants are grouped by how the CLI maps them to
/// exit codes: usage problems exit 2, constraint/condition failures exit 3,
/// internal invariant violations exit 4.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("arity mismatch: {0}")]
    Arity(String),

    #[error("unknown builtin state `{0}`")]
    UnknownState(String),

    #[error("unknown subgroup label `{0}`")]
    UnknownLabel(String),

    #[error("{0}")]
    Usage(String),

    #[error("Constraint 1 violated: {0}")]
    Constraint1(String),

    #[error("Constraint 2 violated: {0}")]
    Constraint2(String),

    #[error("Condition 2 violated: {0}")]
    Condition2(String),

    #[error("orthogonality check failed: operator {element} has expectation {expectation} on the state")]
    NotOrthogonal { element: String, expectation: String },

    #[error("no codeword matches the received state")]
    NoMatch,

    #[error("ambiguous decode: codewords {0} and {1} both match; codebook invariant is corrupt")]
    Ambiguous(usize, usize),

    #[error("index {index} out of range for a {size}-codeword book")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("message length {len} is not divisible by {t}")]
    ChunkLength { len: usize, t: usize },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Exit code class used by the CLI front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. }
            | Error::Arity(_)
            | Error::UnknownState(_)
            | Error::UnknownLabel(_)
            | Error::Usage(_)
            | Error::Io(_)
            | Error::Json(_) => 2,
            Error::Constraint1(_)
            | Error::Constraint2(_)
            | Error::Condition2(_)
            | Error::NotOrthogonal { .. }
            | Error::NoMatch
            | Error::IndexOutOfRange { .. }
            | Error::ChunkLength { .. } => 3,
            Error::Ambiguous(_, _) | Error::Internal(_) => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
