use thiserror::Error;

/// Errors raised while reading or validating problem inputs.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("missing vertex count on the first line")]
    MissingHeader,
    #[error("invalid vertex count {0:?}")]
    BadVertexCount(String),
    #[error("instance needs at least 2 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("expected {expected} weights, found {found}")]
    WrongEntryCount { expected: usize, found: usize },
    #[error("non-numeric weight token {0:?}")]
    NonNumeric(String),
    #[error("negative weight {0:?}")]
    NegativeWeight(String),
    #[error("diagonal entry w[{0}][{0}] must be 0")]
    NonzeroDiagonal(usize),
    #[error("weight {0:?} overflows the internal fixed-point range")]
    Overflow(String),
}

/// Errors raised by solver components on contract violations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error("tour is not a permutation of the vertices")]
    NotAPermutation,
    #[error("graph admits no perfect matching")]
    NoPerfectMatching,
    #[error("instance too large for exact oracle (n = {n}, limit = {limit})")]
    OracleTooLarge { n: usize, limit: usize },
    #[error("assignment is infeasible")]
    InfeasibleAssignment,
    #[error("path set is not vertex-disjoint")]
    NotVertexDisjoint,
    #[error("no nice marking found: {0}")]
    MarkingFailed(String),
    #[error("coloring could not be completed: {0}")]
    ColoringIncomplete(String),
    #[error("search budget exhausted")]
    BudgetExhausted,
}
