//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("basis has no rows")]
    EmptyBasis,

    #[error("basis rows have inconsistent lengths")]
    RaggedBasis,

    #[error("basis rows are linearly dependent (zero Gram-Schmidt norm at row {0})")]
    DependentRows(usize),

    #[error("cross-section kernel is degenerate on axis {0}")]
    EmptyCrossSection(usize),

    #[error("group order c/p is not a positive integer on axis {axis} (got {value})")]
    NonIntegerOrder { axis: usize, value: String },

    #[error("group order on axis {0} does not fit in 64 bits")]
    OrderOverflow(usize),

    #[error("label coefficient mu/p is not an integer for row {row}, axis {axis}")]
    NonIntegerLabel { row: usize, axis: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("group must have at least one factor")]
    EmptyGroup,

    #[error("group order must be positive on axis {0}")]
    ZeroOrder(usize),

    #[error("component {index} out of range: {value} >= order {order}")]
    ComponentOutOfRange { index: usize, value: u64, order: u64 },

    #[error("invalid variable permutation: {0}")]
    BadPermutation(String),

    #[error("target coordinate {0} is not finite")]
    NonFiniteTarget(usize),

    #[error("spec file: {0}")]
    SpecFile(String),

    #[error("inconsistent lattice data: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
