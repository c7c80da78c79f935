use thiserror::Error;

/// Errors shared by every layer of the crate.
///
/// `Precondition` carries a stable machine-readable code (for example
/// `singular_point`) that the command-line front end echoes verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus is not a monic irreducible polynomial of degree {0}")]
    BadModulus(u32),
    #[error("GF({0}^{1}) exceeds the supported field size")]
    FieldTooLarge(u64, u32),
    #[error("no embedding of GF({p}^{src}) into GF({dst_p}^{dst})")]
    NoEmbedding {
        p: u64,
        src: u32,
        dst_p: u64,
        dst: u32,
    },
    #[error("operands live over different fields or rings")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("singular matrix")]
    SingularMatrix,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("precondition `{code}` violated: {detail}")]
    Precondition { code: &'static str, detail: String },
    #[error("resource cap exceeded: {0}")]
    Cap(String),
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub fn precondition(code: &'static str, detail: impl Into<String>) -> Self {
        Error::Precondition {
            code,
            detail: detail.into(),
        }
    }

    /// Stable short code used in reports and CLI error payloads.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "not_prime",
            Error::BadModulus(_) => "bad_modulus",
            Error::FieldTooLarge(..) => "field_too_large",
            Error::NoEmbedding { .. } => "no_embedding",
            Error::FieldMismatch => "field_mismatch",
            Error::DivisionByZero => "division_by_zero",
            Error::SingularMatrix => "singular_matrix",
            Error::Parse(_) => "parse",
            Error::Precondition { code, .. } => code,
            Error::Cap(_) => "cap_exceeded",
            Error::Inconclusive(_) => "inconclusive",
            Error::Internal(_) => "internal",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
