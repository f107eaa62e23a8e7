use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,

    #[error("invalid integer token `{0}`")]
    InvalidToken(String),

    #[error("degree {0} is not positive")]
    NonPositiveDegree(String),

    #[error("degree {0} exceeds the 64-bit factorization limit")]
    DegreeTooLarge(String),

    #[error("line {line}: {message}")]
    EdgeList { line: usize, message: String },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("self-loop on vertex {0}")]
    SelfLoop(u64),

    #[error("vertex {0} is not in the graph")]
    UnknownVertex(u64),

    #[error("graph order must be at least 2, got {0}")]
    OrderTooSmall(String),

    #[error("component sizes must be positive")]
    NonPositiveComponent,

    #[error("alpha must be at least 1, got {0}")]
    AlphaTooSmall(u64),

    #[error("alpha {0} is too large to materialize (limit {limit})", limit = crate::counting::MAX_ALPHA)]
    AlphaTooLarge(String),

    #[error("n = {n} is outside the brute-force bound [2, {bound}]")]
    OutsideBruteForceBound { n: String, bound: u64 },

    #[error("unknown format `{0}` (expected json, csv, markdown or plain)")]
    UnknownFormat(String),

    #[error("malformed table document: {0}")]
    TableParse(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}
