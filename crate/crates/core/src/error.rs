use alloc::string::String;

use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("invalid partition syntax: {0:?}")]
    Partition(String),
    #[error("invalid rational function syntax: {0:?}")]
    RatFunc(String),
    #[error("invalid beta polynomial syntax: {0:?}")]
    BetaPoly(String),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("not a polynomial: denominator is {denominator}")]
    NotPolynomial { denominator: String },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OperatorError {
    #[error("degree {requested} exceeds the truncation bound {bound}")]
    DegreeOverflow { requested: usize, bound: usize },
    #[error("operators shift degree differently ({left} vs {right})")]
    ShiftMismatch { left: isize, right: isize },
    #[error("no closed form for Omega_{0}; only k = 1, 2, 3")]
    NoClosedForm(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EngineError {
    #[error("{nu:?} is not a partition of {n}")]
    NotAPartitionOf { nu: Partition, n: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(&'static str),
    #[error("{0:?} has more than one part larger than 3")]
    OutOfScope(Partition),
    #[error(transparent)]
    Operator(#[from] OperatorError),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EnumerationError {
    #[error("size {n} exceeds the enumeration budget {budget}")]
    BudgetExceeded { n: usize, budget: usize },
    #[error("no cycle of half-length {0} to delete")]
    NoSuchCycle(usize),
    #[error("{0:?} has more than one part larger than 3")]
    OutOfScope(Partition),
    #[error("root edge is not a handle")]
    NotAHandle,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(&'static str),
}
