use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got} ({what})")]
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("index {index} out of range 1..={max} ({what})")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        max: usize,
    },
    #[error("invalid signature: {0}")]
    InvalidSignature(String),
    #[error("invalid group generators: {0}")]
    InvalidGenerators(String),
    #[error("invalid weight: {0}")]
    InvalidWeight(String),
    #[error("invalid module descriptor: {0}")]
    InvalidModule(String),
    #[error("operator term {term} is not in ker(alpha); graded modules only admit x^alpha d with d(alpha) = 0")]
    NotInKernel { term: String },
    #[error("kind mismatch: {0}")]
    KindMismatch(String),
    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_len(what: &'static str, expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            what,
            expected,
            got,
        })
    }
}

pub(crate) fn check_index(what: &'static str, index: usize, max: usize) -> Result<()> {
    if (1..=max).contains(&index) {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { what, index, max })
    }
}
