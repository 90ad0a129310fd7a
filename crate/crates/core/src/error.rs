use thiserror::Error;

use crate::monomial::Monomial;

/// Errors raised by the algebra kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("the zero polynomial has no leading monomial")]
    LeadingMonomialOfZero,
    #[error("the degree of the zero polynomial is undefined")]
    DegreeOfZero,
    #[error("weight of generator {index} is {weight}; weights must be positive")]
    NonPositiveWeight { index: usize, weight: i64 },
    #[error("degree computation overflowed")]
    DegreeOverflow,
    #[error("rewrite step budget of {0} exceeded")]
    BudgetExceeded(u64),
    #[error("target level {level} is below the degree {degree}")]
    LevelTooLow { level: u64, degree: u64 },
    #[error("presentation is not filtered: term {term:?} of relation ({i},{j}) has degree {degree} > {bound}")]
    NotFiltered { i: usize, j: usize, term: Monomial, degree: u64, bound: u64 },
    #[error("relation ({i},{j}) has a zero commutation scalar")]
    ZeroLambda { i: usize, j: usize },
    #[error("relation index ({i},{j}) is invalid for {n} generators")]
    BadRelationIndex { i: usize, j: usize, n: usize },
    #[error("generator name {0} is declared twice")]
    DuplicateGenerator(String),
    #[error("scalars from different fields were combined")]
    FieldMismatch,
    #[error("{0} is not a prime modulus")]
    NotPrime(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid ordering: {0}")]
    InvalidOrdering(String),
    #[error("ordering is not graded with respect to the degree function")]
    OrderingNotGraded,
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
