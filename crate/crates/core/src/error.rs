use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid order {0}: need at least 2")]
    InvalidOrder(usize),

    #[error("size limit exceeded: {what} would have {size} elements (cap {cap})")]
    SizeLimit { what: String, size: u128, cap: usize },

    #[error("table is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },

    #[error("closure violated: entry {value} at ({row}, {col}) is outside 0..{size}")]
    Closure { row: usize, col: usize, value: u64, size: usize },

    #[error("associativity violated at ({0}, {1}, {2})")]
    Associativity(usize, usize, usize),

    #[error("labels: {0}")]
    Labels(String),

    #[error("parse error at line {line}, offset {offset}: {message}")]
    Parse { line: usize, offset: usize, message: String },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("element {0} is not a member of the group")]
    Membership(usize),

    #[error("subgroup is not contained in the ambient group")]
    Containment,

    #[error("group enumeration limit: H-class at idempotent {idempotent} has order {order} (cap {cap})")]
    EnumerationLimit { idempotent: usize, order: usize, cap: usize },

    #[error("global-identity-only policy requires a semigroup with an identity")]
    NoIdentity,

    #[error("i/o: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
