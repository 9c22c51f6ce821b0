use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Errors raised by the library. Variants fall into three groups that the
/// CLI maps onto exit codes: usage errors, resource errors and internal
/// consistency failures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("weight mismatch: {left} has weight {left_weight}, {right} has weight {right_weight}")]
    WeightMismatch {
        left: String,
        left_weight: usize,
        right: String,
        right_weight: usize,
    },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("{p} is not a prime")]
    NotPrime { p: u64 },

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("field order {p}^{k} exceeds the supported bound 2^16")]
    FieldTooLarge { p: u64, k: u32 },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is singular: {0}")]
    Singular(String),

    #[error("field of order {order} has too few nonzero elements for {needed} distinct eigenvalues")]
    TooFewEigenvalues { order: u64, needed: usize },

    #[error("invalid eigenvalue choice: {0}")]
    InvalidEigenvalues(String),

    #[error("malformed tableau: {0}")]
    MalformedTableau(String),

    #[error("flag enumeration needs {count} flags, budget is {budget}")]
    BudgetExceeded { count: u128, budget: u64 },

    #[error("only {feasible:?} of the requested field sizes fit the budget; {needed} needed")]
    InsufficientSamples { feasible: Vec<u64>, needed: usize },

    #[error("degree bound {degree} violated: held-out sample at Q = {size} counted {observed}, fit predicts {predicted}")]
    DegreeBoundViolated {
        degree: usize,
        size: u64,
        observed: String,
        predicted: String,
    },

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for errors caused by exhausting an enumeration budget.
    pub fn is_resource(&self) -> bool {
        matches!(
            self,
            Error::BudgetExceeded { .. } | Error::InsufficientSamples { .. }
        )
    }
}
