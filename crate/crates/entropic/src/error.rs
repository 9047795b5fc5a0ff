//! Error types shared across the crate.

use thiserror::Error;

/// Errors from entropy-space arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    /// The empty set has no entropy coordinate; `H(X_∅) = 0` by convention
    /// and callers wanting that value should use `LinForm::zero`.
    #[error("the empty set has no entropy coordinate (H of the empty set is 0 by convention)")]
    EmptySet,

    #[error("variable index {0} out of range 1..=16")]
    IndexOutOfRange(u8),

    #[error("argument sets must be pairwise disjoint")]
    DisjointnessViolated,

    #[error("linear forms disagree on the variable count ({0} vs {1})")]
    ContextMismatch(u8, u8),

    #[error("expected a vector of dimension {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("variable index {index} exceeds the declared count n = {n}")]
    VariableBeyondContext { index: u8, n: u8 },
}

/// Errors from cone-row and constraint-row generation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConeError {
    #[error("variable count {0} out of range {1}..=16")]
    VarCountOutOfRange(u8, u8),

    #[error("a Markov chain needs at least 3 groups, got {0}")]
    ChainTooShort(usize),

    #[error("mutual independence needs at least 2 distinct variables")]
    TooFewVariables,

    #[error("duplicate variable in argument list")]
    DuplicateVariable,

    #[error(transparent)]
    Core(#[from] CoreError),
}
