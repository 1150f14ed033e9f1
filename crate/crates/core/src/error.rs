use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("exponents must satisfy n > m >= 1, got n={n}, m={m}")]
    InvalidExponents { n: u32, m: u32 },

    #[error("coefficient `{0}` is zero")]
    ZeroCoefficient(&'static str),

    /// A zero coefficient reached an operation that requires all three to be
    /// nonzero; such inputs belong to `classify_degenerate`.
    #[error("coefficient `{0}` is zero; route the trinomial through classify_degenerate")]
    DegenerateCoefficient(&'static str),

    #[error("all three coefficients are zero")]
    AllCoefficientsZero,

    #[error("argument of zero is undefined")]
    UndefinedArgument,

    #[error("half-width must be a non-negative finite number, got {0}")]
    InvalidHalfWidth(f64),

    #[error("triangle side `{0}` must be positive")]
    ZeroSide(&'static str),

    #[error("side lengths do not form a triangle")]
    NotATriangle,

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("point does not lie in the projected stability region")]
    NotInProjection,

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("root set has not converged")]
    NotConverged,

    #[error("trajectory is degenerate: {0}")]
    DegenerateTrajectory(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
