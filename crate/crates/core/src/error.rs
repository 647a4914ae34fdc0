use thiserror::Error;

/// Errors raised by the library.
///
/// Axiom failures are never errors: they are reported through
/// [`crate::model::ValidationReport`]. Errors cover malformed input, misuse of
/// the API (dimension mismatches, foreign arguments) and internal consistency
/// failures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("subspace is not contained in the enclosing subspace")]
    NotContained,

    #[error("malformed instance: {0}")]
    Structure(String),

    #[error("duplicate {table} entry ({i}, {j}, {k})")]
    DuplicateEntry {
        table: &'static str,
        i: usize,
        j: usize,
        k: usize,
    },

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("invalid scalar {0:?}")]
    InvalidScalar(String),

    #[error("{0} is not a root of the instance")]
    NotARoot(String),

    #[error("{0} is not a weight of the instance")]
    NotAWeight(String),

    #[error("connection class does not belong to this instance")]
    ForeignClass,

    #[error("reports were computed from different instances")]
    ProvenanceMismatch,

    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),

    #[error("internal consistency violation: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
