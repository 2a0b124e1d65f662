use thiserror::Error;

/// Errors surfaced by the library. The CLI maps them onto exit codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The numerical function is not the Hilbert function of any quotient.
    #[error("no such ideal: Hilbert function fails Macaulay's bound in degree {degree}")]
    NoSuchIdeal { degree: usize },

    #[error("piece in {vars} variables is not a lex-segment ideal")]
    NotLex { vars: usize },

    /// The Hilbert function cannot be realised by an ideal containing the base ideal.
    #[error("not admissible in degree {degree}: {reason}")]
    NotAdmissible { degree: usize, reason: String },

    #[error("invalid family at degree {degree}: {reason}")]
    InvalidFamily { degree: usize, reason: String },

    #[error("enumeration budget of {budget} exceeded (at least {at_least} ideals)")]
    BudgetExceeded { budget: usize, at_least: usize },

    /// A construction that a theorem guarantees to succeed did not.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidInput(msg.into()))
}
