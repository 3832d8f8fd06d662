use thiserror::Error;

/// Errors raised by the algebra, tableau and character routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid composition {0:?}: parts must be positive")]
    InvalidComposition(Vec<usize>),
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),
    #[error("invalid subset: element {element} is not in [1, {max}]")]
    InvalidSubset { element: usize, max: usize },
    #[error("malformed filling: {0}")]
    MalformedFilling(String),
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("basis mismatch: {left} vs {right}")]
    BasisMismatch { left: String, right: String },
    #[error("degree {n} exceeds the group-algebra bound {limit}")]
    ResourceLimit { n: usize, limit: usize },
    #[error("element does not lie in the descent algebra")]
    NotInSpan,
    #[error("element is not homogeneous")]
    Inhomogeneous,
    #[error("internal consistency failure: {0}")]
    InternalConsistency(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown basis {basis:?} for space {space}")]
    UnknownBasis { space: String, basis: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
