use thiserror::Error;

/// Errors raised by constructions and parsers.  A check that runs to completion
/// and finds a violated equation is reported through its result type instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("unresolved reference `{0}`")]
    Unresolved(String),
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("not semisimple: {0}")]
    NotSemisimple(String),
    #[error("does not split over {field}: minimal polynomial {min_poly} has no root; try a cyclotomic field with a larger conductor")]
    NotSplitOverField { min_poly: String, field: String },
    #[error("grading violation: {0}")]
    Grading(String),
    #[error("no solution: {0}")]
    Infeasible(String),
    #[error("malformed data: {0}")]
    Malformed(String),
    #[error("axiom `{equation}` fails: {detail}")]
    AxiomViolation { equation: String, detail: String },
    #[error("search exhausted: {0}")]
    SearchExhausted(String),
}

pub type Result<T> = std::result::Result<T, Error>;
