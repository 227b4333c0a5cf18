//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid mesh parameter: {0}")]
    InvalidParameter(String),

    #[error("mesh parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("non-manifold topology: {0}")]
    NonManifold(String),

    #[error("cell {cell} is not counterclockwise or degenerate")]
    Orientation { cell: usize },

    #[error("zero-length edge in cell {cell}")]
    ZeroLengthEdge { cell: usize },

    #[error("cell {cell} is not star-shaped with respect to its centroid")]
    NotStarShaped { cell: usize },

    #[error("cell {cell} is non-convex or inverted (distortion too large)")]
    NonConvexCell { cell: usize },

    #[error("degenerate geometry: {0}")]
    DegenerateGeometry(String),

    #[error("singular local system on cell {cell}: {msg}")]
    SingularLocal { cell: usize, msg: String },

    #[error("matrix is not positive definite (pivot {pivot} at column {col})")]
    NotPositiveDefinite { col: usize, pivot: f64 },

    #[error("singular bordered system: Schur scalar {0:.3e}")]
    SingularBordered(f64),

    #[error("linear solve failed: {0}")]
    LinearSolve(String),

    #[error("Newton did not converge in {iterations} iterations (last step {last_step:.3e})")]
    NewtonDiverged { iterations: usize, last_step: f64 },

    #[error("non-finite value of f at cell {cell}, point ({x}, {y})")]
    NonFiniteLoad { cell: usize, x: f64, y: f64 },

    #[error("{0}")]
    Invalid(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
