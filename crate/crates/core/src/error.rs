use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("{0}")]
    Domain(String),

    /// Weights `k ≤ 1` need a correction term coming from modular forms of
    /// weight 1/2, which is non-trivial and not computed here.
    #[error(
        "k must be ≥ 2 (got k = {0}); for k ≤ 1 the correction term turns out to be non-trivial and is not computed"
    )]
    UnsupportedWeight(i64),

    /// The requested formula does not apply to the given group.
    #[error("{0}")]
    WrongTheorem(&'static str),

    #[error("invalid branching scheme: {0}")]
    InvalidScheme(String),

    /// A computed value violated a hard postcondition (non-integral or
    /// negative dimension). Always indicates a bug.
    #[error("postcondition violated: {0}")]
    Postcondition(String),
}

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
