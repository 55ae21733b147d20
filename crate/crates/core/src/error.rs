use thiserror::Error;

/// Errors raised by the linear-algebra, state, measurement and bound layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("unknown subsystem label `{0}`")]
    UnknownLabel(String),

    #[error("duplicate subsystem label `{0}`")]
    DuplicateLabel(String),

    #[error("invalid layout: {0}")]
    InvalidLayout(String),

    #[error(
        "matrix is not Hermitian: max |m - m^dagger| = {deviation:e} exceeds tolerance {tol:e}"
    )]
    NotHermitian { deviation: f64, tol: f64 },

    #[error("matrix entries must be finite")]
    NonFinite,

    #[error("invalid density matrix: {0}")]
    InvalidState(String),

    #[error("invalid arity: {0}")]
    InvalidArity(String),

    #[error("{name} = {value} is outside its domain {domain}")]
    Domain {
        name: &'static str,
        value: f64,
        domain: &'static str,
    },

    #[error("rank {rank} must lie in 1..={max}")]
    Rank { rank: usize, max: usize },

    #[error("not a probability distribution: {0}")]
    NotADistribution(String),

    #[error("conditioning on every subsystem leaves nothing to condition")]
    EmptyRemainder,

    #[error("invalid measurement basis: {0}")]
    InvalidBasis(String),

    #[error("negative eigenvalue {0:e} below round-off tolerance")]
    NegativeEigenvalue(f64),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
