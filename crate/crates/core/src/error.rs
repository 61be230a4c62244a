use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A denominator parameter vanishes inside the summation range.
    #[error("pole: {0}")]
    Pole(String),
    /// No numerator parameter is a nonpositive integer.
    #[error("non-terminating series: {0}")]
    NonTerminating(String),
    /// The requested combination of exact inputs has no exact value.
    #[error("unsupported regime: {0}")]
    UnsupportedRegime(String),
    #[error("unknown suite `{0}`")]
    NotFound(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Short stable name of the error class, used by the CLI.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Domain(_) => "DomainError",
            Error::Pole(_) => "PoleError",
            Error::NonTerminating(_) => "NonTerminatingError",
            Error::UnsupportedRegime(_) => "UnsupportedRegimeError",
            Error::NotFound(_) => "NotFoundError",
            Error::Parse(_) => "ParseError",
        }
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
