//! Crate-wide error type.

use thiserror::Error;

/// Errors surfaced by ring construction, ideal arithmetic, parsing, and the
/// scenario runner.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    NonPrimeModulus(u64),

    #[error("quotient has infinite colength: no pure power of variable `{0}` among the relations")]
    InfiniteColength(String),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("ring mismatch: `{0}` vs `{1}`")]
    RingMismatch(String, String),

    #[error("algebra mismatch: operands declare different variables or semigroups")]
    SemigroupMismatch,

    #[error("exponent {0} is not a member of the declared semigroup")]
    SemigroupMembership(String),

    #[error("ring `{0}` is not local")]
    NotLocal(String),

    #[error("operation not supported over ring `{0}`: {1}")]
    UnsupportedRing(String, String),

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("coefficient field mismatch")]
    FieldMismatch,

    #[error("generator `{0}` is not homogeneous")]
    NotHomogeneous(String),

    #[error("ring is Gorenstein (socle dimension 1); construction requires socle dimension >= 2")]
    IsGorenstein,

    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse {
        line: usize,
        col: usize,
        msg: String,
    },

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
