use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid complex: {0}")]
    InvalidComplex(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("mode not applicable: {0}")]
    ModeInapplicable(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("subdivision did not stabilise within {0} rounds")]
    SubdivisionBudget(usize),
    #[error("no admissible {0} found after {1} attempts")]
    DegenerateProbe(&'static str, usize),
    #[error("module too large for the decomposition oracle: total dimension {0} exceeds {1}")]
    OracleSize(usize, usize),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::DimensionMismatch(_) | Error::InvalidComplex(_) | Error::Input(_) | Error::OracleSize(..) => 1,
            Error::ModeInapplicable(_) => 2,
            Error::Invariant(_) | Error::SubdivisionBudget(_) | Error::DegenerateProbe(..) => 3,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
