use crate::triortho::ViolationWitness;
use thiserror::Error;

/// Errors surfaced by fallible operations across the crate.
///
/// Shape preconditions on the low-level `gf2` types (mismatched vector
/// lengths, incompatible matrix shapes) are programmer errors and panic
/// instead; every variant here is a condition a caller can meaningfully
/// handle or report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The matrix fails the triorthogonality predicate; the witness pins
    /// down the offending rows.
    #[error("matrix is not triorthogonal: {0}")]
    NotTriorthogonal(ViolationWitness),

    /// A generator matrix was required to have full row rank.
    #[error("matrix is rank deficient")]
    RankDeficient,

    /// The operation is undefined on the zero code.
    #[error("operation is undefined on the zero code")]
    ZeroCode,

    /// Exhaustive codeword enumeration would exceed the caller's budget.
    #[error("distance enumeration for dimension {dimension} exceeds budget {budget}")]
    DistanceBudget { dimension: usize, budget: u64 },

    /// The backtracking search exceeded its node budget.
    #[error("search limit exhausted after visiting {nodes} nodes")]
    SearchLimit { nodes: u64 },

    /// A square transform matrix was singular.
    #[error("transform matrix is singular")]
    Singular,

    /// A matrix had the wrong shape for the requested operation.
    #[error("expected a {expected_rows}x{expected_cols} matrix, found {found_rows}x{found_cols}")]
    SizeMismatch {
        expected_rows: usize,
        expected_cols: usize,
        found_rows: usize,
        found_cols: usize,
    },

    /// An extension vector was not orthogonal to the Schur square.
    #[error("vector is not in the dual of the Schur square")]
    NotInSquareDual,

    /// Extending by a vector already in the code would be a no-op.
    #[error("vector is already in the code")]
    AlreadyInCode,

    /// A row index was out of range.
    #[error("row index {index} out of range for {count} rows")]
    RowIndex { index: usize, count: usize },

    /// A block length was outside the supported range.
    #[error("length {length} out of supported range 1..={max}")]
    LengthRange { length: usize, max: usize },

    /// A brute-force reference computation was asked to exceed its bounds.
    #[error("{operation}: input size {requested} exceeds the brute-force bound {limit}")]
    ResourceLimit {
        operation: &'static str,
        limit: u64,
        requested: u128,
    },

    /// The queried element is not a member of the supplied ground set.
    #[error("element is not a member of the supplied ground set")]
    NotInGround,

    /// An internal consistency check failed; this indicates a bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
