//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("substitution arity mismatch: polynomial has {vars} variables, {given} substitutions given")]
    ArityMismatch { vars: usize, given: usize },

    #[error("variable index {index} out of range for {vars} variables")]
    VariableOutOfRange { index: usize, vars: usize },

    #[error("invalid rational literal `{0}`")]
    ParseRational(String),

    #[error("invalid covector: {0}")]
    ParseCovector(String),

    #[error("invalid structure-constants file: {0}")]
    ParseAlgebra(String),

    #[error("not a valid Lie algebra: {0}")]
    InvalidAlgebra(String),

    #[error("operation requires a two-step nilpotent algebra ({0})")]
    NotTwoStep(String),

    #[error("family index d must be at least 2 (got {0})")]
    FamilyIndexTooSmall(usize),

    #[error("covector lies outside the layer: z1 = 0")]
    OutOfLayer,

    #[error("target covector is not in the cortex variety: {0}")]
    NotCortexMember(String),

    #[error("degenerate stratum: target has y{0} = 0; perturb the target or use the numeric perturbation mode")]
    DegenerateStratum(usize),

    #[error("scale values must be positive (got {0})")]
    NonpositiveEpsilon(String),
}
