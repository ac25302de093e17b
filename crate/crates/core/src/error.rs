use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse scalar `{0}`")]
pub struct ParseScalarError(pub String);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LpError {
    #[error("linear program is infeasible")]
    Infeasible,
    #[error("linear program is unbounded")]
    Unbounded,
    #[error("malformed linear program: {0}")]
    Malformed(String),
    #[error("simplex stopped after {0} pivots")]
    IterationLimit(usize),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("direction must be nonzero")]
    ZeroDirection,
    #[error("linear map is singular")]
    SingularMap,
    #[error("intersection is empty or lower-dimensional")]
    EmptyIntersection,
    #[error("the origin is not an interior point")]
    OriginNotInterior,
    #[error("body is not contained in the container")]
    NotContained,
    #[error("body is centrally symmetric")]
    Symmetric,
    #[error("body is not Minkowski centered")]
    NotCentered,
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("value is not representable in the `{0}` backend")]
    NotRepresentable(&'static str),
    #[error("matrix is not symmetric positive definite")]
    NotPositiveDefinite,
    #[error("malformed polygon document: {0}")]
    Json(String),
    #[error(transparent)]
    Scalar(#[from] ParseScalarError),
    #[error(transparent)]
    Lp(#[from] LpError),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
