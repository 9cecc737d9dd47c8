use thiserror::Error;

use crate::gca::GenRef;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("generator {gen} is not defined on a {family} module")]
    UndefinedGenerator { gen: GenRef, family: &'static str },

    #[error("invalid module specification: {0}")]
    InvalidSpec(String),

    #[error("the zero vector has no degree")]
    ZeroVector,

    #[error("vector already has degree (0,0,0,0)")]
    NothingToReduce,

    #[error("no m in the search range of case {case} reaches the target degree")]
    NoReductionWitness { case: u8 },

    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),

    #[error("submodule witness rejected: {0}")]
    WitnessRejected(String),

    #[error("verdict disagrees with the intertwiner solver: {0}")]
    CrossCheckFailed(String),

    #[error("invalid scalar literal {0:?}")]
    ParseScalar(String),
}
