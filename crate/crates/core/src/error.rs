use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("matrix is not t-exponentiable: {0}")]
    NotTExponentiable(String),
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("i and n must be coprime (got i = {i}, n = {n})")]
    NotCoprime { i: i64, n: i64 },
    #[error("({i}, {n}) is not a subprime pair: need 0 < i < n, gcd(i, n) = 1 and n = +-1 mod i")]
    NotSubprime { i: i64, n: i64 },
    #[error("functional is not Frobenius on the given subalgebra")]
    NotFrobenius,
    #[error("r-matrix map is degenerate on its carrier")]
    Degenerate,
    #[error("invalid BD-triple: {0}")]
    InvalidTriple(String),
    #[error("subspace is not stable under the given action")]
    NotStable,
    #[error("iteration cap of {0} reached")]
    IterationCap(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
