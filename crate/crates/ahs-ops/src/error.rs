//! Error type shared across the library.

use thiserror::Error;

/// Errors surfaced by catalog construction, decompositions and operator data
/// extraction. Contract violations that indicate a caller bug (mismatched
/// weight owners, out-of-range indices) panic instead.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: char, rank: u32 },

    #[error("invalid parameters for {family}: {reason}")]
    InvalidParameters { family: String, reason: String },

    #[error("weight {0} is not dominant integral")]
    NotDominant(String),

    #[error("lambda + {j}*theta is not dominant; the operator of order {k} does not exist")]
    ChainNotDominant { j: u32, k: u32 },

    #[error("direction {0} is not an extremal weight of g1")]
    NotExtremal(String),

    #[error("direction is the zero weight of g1; the exceptional middle operators are not of the standard form and are rejected")]
    ExceptionalOperator,

    #[error("representation dimension {dim} exceeds the configured cap {cap}")]
    DimensionCap { dim: String, cap: u64 },

    #[error("unexpected multiplicity {mult} at component {weight} in a g1 tensor decomposition")]
    UnexpectedMultiplicity { weight: String, mult: i64 },

    #[error("{0} is not a positive root of the ambient algebra")]
    NotAPositiveRoot(String),

    #[error("the root pairs to {0} with the grading dual, so it does not lie in g1")]
    NotAGradingOneRoot(String),

    #[error("order parameter {0} is not a positive integer")]
    BadOrder(String),

    #[error("normalization system is singular; catalog data is inconsistent")]
    SingularNormalization,

    #[error("coefficient constraint violated: j + ord(s) = {0} exceeds the order {1}")]
    CoefficientConstraint(u32, u32),

    #[error("nonzero obstruction coefficient at j={j}, s={s}: {value}")]
    NonzeroObstruction { j: u32, s: String, value: String },

    #[error("cannot parse weight spec '{0}'")]
    ParseWeight(String),

    #[error("cannot parse structure spec '{0}'")]
    ParseStructure(String),

    #[error("unknown output format '{0}'")]
    UnknownFormat(String),
}

pub type Result<T> = std::result::Result<T, Error>;
