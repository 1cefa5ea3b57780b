use thiserror::Error;

/// Errors raised anywhere in the library.
///
/// [`Error::Invariant`] marks an internal consistency failure (a broken
/// identity that exact arithmetic guarantees); every other variant is a
/// rejected input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{field}: {message}")]
    Parse {
        field: &'static str,
        message: String,
    },

    #[error("letter {0} is not in the alphabet")]
    UnknownLetter(String),

    #[error("invalid substitution: {0}")]
    InvalidSubstitution(String),

    #[error("seed {0} is not a prefix of its own image")]
    SeedNotPrefix(String),

    #[error("the fixed point starting with {0} is finite")]
    FiniteFixedPoint(String),

    #[error("substitution is not primitive")]
    NotPrimitive,

    #[error("invalid matrix {matrix}: {reason}")]
    InvalidMatrix { matrix: String, reason: String },

    #[error("indeterminate form: infinity divided by infinity")]
    Indeterminate,

    #[error("coefficient sequence exhausted at index {0}")]
    SequenceExhausted(usize),

    #[error("search horizon exceeded: {0}")]
    HorizonExceeded(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn parse(field: &'static str, message: impl Into<String>) -> Self {
        Error::Parse {
            field,
            message: message.into(),
        }
    }

    pub(crate) fn precondition(message: impl Into<String>) -> Self {
        Error::Precondition(message.into())
    }

    pub(crate) fn invariant(message: impl Into<String>) -> Self {
        Error::Invariant(message.into())
    }

    /// True for internal consistency failures, as opposed to bad input.
    pub fn is_invariant_violation(&self) -> bool {
        matches!(self, Error::Invariant(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
