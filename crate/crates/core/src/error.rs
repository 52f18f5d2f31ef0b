use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("matrix is singular")]
    Singular,

    /// Point set does not affinely span the ambient space.
    #[error("points span an affine subspace of dimension {actual}, expected {expected}")]
    Dimension { expected: usize, actual: usize },

    #[error("expected {expected} values, got {got}")]
    Arity { expected: usize, got: usize },

    #[error("dimension {d} has the wrong parity: {what}")]
    Parity { d: usize, what: &'static str },

    #[error("origin is not in the strict interior of the polytope")]
    Position,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("unsupported size: {0}")]
    Scale(String),

    /// An oracle and a formula (or two oracles) disagree.  This signals a bug,
    /// never bad input.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error("integer overflow: {0}")]
    Overflow(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}
