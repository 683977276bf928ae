use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("symbol `{0}` is not in the alphabet")]
    UnknownSymbol(String),

    #[error("invalid input: {0}")]
    Input(String),

    /// Complexity of the empty relation is undefined.
    #[error("empty relation")]
    EmptyRelation,

    #[error("size guard exceeded: {what} needs {needed}, limit is {limit}")]
    Guard {
        what: String,
        needed: u128,
        limit: u128,
    },

    /// A verification step failed: a fooling set violation, a commutation
    /// failure, an invalid cover. Carries a human-readable witness.
    #[error("rejected: {0}")]
    Rejected(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn guard(what: impl Into<String>, needed: u128, limit: u128) -> Self {
        Error::Guard {
            what: what.into(),
            needed,
            limit,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
