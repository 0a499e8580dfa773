//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CoverError {
    /// Some ground element is covered by no candidate, or a pipeline
    /// produced an instance that cannot be covered.
    #[error("infeasible instance: {0}")]
    InfeasibleInstance(String),

    /// Exact or dense-LP solvers refuse instances above their size cap.
    #[error("size limit exceeded: {0}")]
    SizeLimitExceeded(String),

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("bad parameter: {0}")]
    BadParam(String),

    /// A bound evaluator found no feasible grid point.
    #[error("infeasible: {0}")]
    Infeasible(String),

    #[error("zero volume: {0}")]
    ZeroVolume(String),

    #[error("not convex: {0}")]
    NotConvex(String),

    #[error("points are not contained in an open hemisphere")]
    NotInHemisphere,

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, CoverError>;
