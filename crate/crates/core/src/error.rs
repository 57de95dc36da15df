use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("weight mismatch: {left} vs {right}")]
    WeightMismatch { left: i64, right: i64 },

    #[error("coefficient ({a},{b},{c}) is outside the known precision a + c <= {trunc}")]
    Precision { a: u32, b: i32, c: u32, trunc: u32 },

    #[error("exponent ({a},{b},{c}) violates the support cone b^2 <= 4ac")]
    SupportCone { a: u32, b: i32, c: u32 },

    #[error("data integrity: {0}")]
    DataIntegrity(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("polynomial is not homogeneous")]
    NonHomogeneous,

    #[error("argument mismatch: {0}")]
    ArgumentMismatch(String),

    #[error("matrix is not symplectic")]
    NotSymplectic,

    #[error("automorphy factor det(CZ + D) vanishes at the sample point")]
    SingularAutomorphy,

    #[error("{0} is not a unit modulo 5")]
    NotAUnit(i64),

    #[error("unsupported weight {0}")]
    UnsupportedWeight(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("denominator vanishes at t = 0")]
    NotExpandable,
}

pub type Result<T> = std::result::Result<T, Error>;
