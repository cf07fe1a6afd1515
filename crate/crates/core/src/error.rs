use crate::ring::RingSpec;

/// Errors reported by every fallible operation in this crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),

    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),

    #[error("elements `{0}` and `{1}` are not comparable")]
    NotComparable(String, String),

    #[error("operands live in different algebras")]
    AlgebraMismatch,

    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(RingSpec, RingSpec),

    #[error("invalid ring descriptor `{0}` (expected \"Z\", \"Q\", or \"Z/n\")")]
    RingParse(String),

    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u64),

    #[error("cannot parse `{text}` as a scalar in {ring}")]
    ScalarParse { ring: RingSpec, text: String },

    #[error("{0} is not invertible")]
    NotInvertible(String),

    #[error("ring {0} is not a field; solving requires a field")]
    NotAField(RingSpec),

    #[error("ring {0} has 2-torsion")]
    TwoTorsion(RingSpec),

    #[error("precondition `{name}` failed: {detail}")]
    Precondition { name: String, detail: String },

    #[error("map is not a {class}; first failing instance: {witness}")]
    PredicateFailed { class: String, witness: String },

    #[error("expected {expected} coefficients, got {got}")]
    CoefficientCount { expected: usize, got: usize },

    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
