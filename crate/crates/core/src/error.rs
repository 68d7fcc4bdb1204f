use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("singular matrix")]
    Singular,
    #[error("region is unbounded")]
    Unbounded,
    #[error("region is empty")]
    Empty,
    #[error("degenerate: {0}")]
    Degenerate(String),
    #[error("{0}")]
    Parse(String),
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),
    #[error("Weyl group closure exceeded {0} elements")]
    GroupTooLarge(usize),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("oracle: {0}")]
    Oracle(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
