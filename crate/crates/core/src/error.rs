use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("unknown generator or dual label `{0}`")]
    UnknownLabel(String),

    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),

    #[error("unknown {kind} `{name}`; valid choices: {valid}")]
    UnknownName { kind: &'static str, name: String, valid: String },

    #[error("inadmissible combination: {0}")]
    Inadmissible(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("singular matrix: rank {rank} of {dim}")]
    Singular { rank: usize, dim: usize },

    #[error("degenerate orbit chart `{chart}`: restricted matrix has rank {rank} of {dim}")]
    DegenerateChart { chart: String, rank: usize, dim: usize },

    #[error("non-finite state at step {step}")]
    NonFinite { step: usize },

    #[error("configuration error: {0}")]
    Config(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
