use thiserror::Error;

/// Errors raised by the library.
///
/// The variants are grouped so the CLI can map them onto exit codes:
/// [`Error::RaisePrecision`] is the only one that asks the caller to retry
/// with more p-adic digits, [`Error::Invariant`] signals a bug.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("{0} is not prime")]
    NotPrime(String),

    #[error("{value} is not a {p}-adic integer")]
    NotPadicInteger { value: String, p: u64 },

    #[error("polynomial is not monic")]
    NotMonic,

    #[error("matrix is singular")]
    Singular,

    #[error("vector is not a member of the group")]
    NotMember,

    #[error("cannot factor {0}: composite cofactor beyond trial division")]
    Unfactored(String),

    #[error("precision insufficient, raise precision: {0}")]
    RaisePrecision(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// Short machine-readable tag used in JSON error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Dimension(_) => "dimension",
            Error::NotPrime(_) => "not_prime",
            Error::NotPadicInteger { .. } => "not_padic_integer",
            Error::NotMonic => "not_monic",
            Error::Singular => "singular",
            Error::NotMember => "not_member",
            Error::Unfactored(_) => "unfactored",
            Error::RaisePrecision(_) => "raise_precision",
            Error::InvalidArgument(_) => "invalid_argument",
            Error::Invariant(_) => "invariant",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
