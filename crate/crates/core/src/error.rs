use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("InvalidPeriod: period must be positive, got {0}")]
    InvalidPeriod(i64),
    #[error("NotMonotone: {0}")]
    NotMonotone(String),
    #[error("PeriodMismatch: {0} vs {1}")]
    PeriodMismatch(usize, usize),
    #[error("NotDivisible: period {from} does not divide {to}")]
    NotDivisible { from: usize, to: usize },
    #[error("NotPeriodic: map is not {0}-periodic")]
    NotPeriodic(usize),
    #[error("EmptyPSet: no shift of the map is positive at 0")]
    EmptyPSet,
    #[error("NotFlat: map has no fixed point")]
    NotFlat,
    #[error("NotPositive: map is not above the identity")]
    NotPositive,
    #[error("NoWitness: no l with a(l+{0}) < a(l)+{0}")]
    NoWitness(usize),
    #[error("NotProperPeriodicity: periodicity {per} differs from the period {n}")]
    NotProperPeriodicity { per: usize, n: usize },
    #[error("SearchExhausted: no word of length <= {0} evaluates to the target")]
    SearchExhausted(usize),
    #[error("PreconditionFailed: {0}")]
    PreconditionFailed(String),
    #[error("SyntaxError at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("UnboundVariable: {0}")]
    UnboundVariable(String),
    #[error("EmptySet: an axiom over an empty index set is undefined")]
    EmptySet,
    #[error("BoundsTooLarge: {size} assignments exceed the ceiling {ceiling}")]
    BoundsTooLarge { size: u128, ceiling: u128 },
    #[error("ShapeMismatch: {0}")]
    ShapeMismatch(String),
    #[error("EmptySignature: the trivial variety has no axiom of this shape")]
    EmptySignature,
    #[error("Literal: {0}")]
    Literal(String),
}
