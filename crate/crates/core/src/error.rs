use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("arc ({u}, {v}) has an endpoint outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },

    #[error("vertex {vertex} is outside 0..{n}")]
    NoSuchVertex { vertex: usize, n: usize },

    #[error("map has length {got}, source has {expected} vertices")]
    LengthMismatch { expected: usize, got: usize },

    #[error("{what}: size {size} exceeds the configured limit {limit}")]
    SizeGuard {
        what: &'static str,
        size: u128,
        limit: u128,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("not an oriented tree: {0}")]
    NotATree(String),

    #[error("digraph has a loop at vertex {0}; its chromatic number is undefined")]
    LoopPresent(usize),

    #[error("search budget of {0} nodes exhausted")]
    BudgetExceeded(u64),

    #[error("cannot parse oriented path: unexpected {0:?}")]
    PathSyntax(char),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Whether the error comes from a resource guard (size limit or search
    /// budget) rather than from bad input.
    pub fn is_guard(&self) -> bool {
        matches!(self, Error::SizeGuard { .. } | Error::BudgetExceeded(_))
    }
}
