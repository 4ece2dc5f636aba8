use thiserror::Error;

/// Errors raised by the library.
///
/// `Parse` covers malformed text input; every other variant is a violated
/// mathematical precondition (a "domain error").
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("determinant must be +1 or -1, got {0}")]
    NotUnimodular(String),

    #[error("oriented class requires determinant +1")]
    OrientedNeedsDetOne,

    #[error("not in the derived subgroup")]
    NotInDerivedSubgroup,

    #[error("boundary does not bound")]
    DoesNotBound,

    #[error("psl word is not reduced: adjacent syllables at {0} lie in the same factor")]
    NotReduced(usize),

    #[error("{0}")]
    Domain(String),
}

impl Error {
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
