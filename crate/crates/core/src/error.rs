use thiserror::Error;

/// Errors raised by semigroup construction and analysis.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    #[error("a semigroup must have at least one element")]
    Empty,
    #[error("table is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("entry {value} at ({row}, {col}) is out of range for order {order}")]
    IndexOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("element index {index} is out of range for order {order}")]
    ElementOutOfRange { index: usize, order: usize },
    #[error("not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NonAssociative { a: usize, b: usize, c: usize },
    #[error("expected {order} labels, got {got}")]
    LabelCount { order: usize, got: usize },
    #[error("map has length {got}, expected {expected}")]
    MapLength { got: usize, expected: usize },
    #[error("subset is not closed: {a}*{b} leaves it")]
    NotClosed { a: usize, b: usize },
    #[error("subset is not an ideal: {by} times {element} leaves it")]
    NotAnIdeal { element: usize, by: usize },
    #[error("an ideal must be nonempty")]
    EmptyIdeal,
    #[error("partition is not a congruence: classes of {a} and {b} disagree on products with {c}")]
    NotACongruence { a: usize, b: usize, c: usize },
    #[error("element {0} is not idempotent")]
    NotIdempotent(usize),
    #[error("semigroup is not idempotent covered: element {0} is not")]
    NotIdempotentCovered(usize),
    #[error("semigroup is not regular: element {0} has no inverse")]
    NotRegular(usize),
    #[error("semigroup is not completely regular: element {0} lies in no subgroup")]
    NotCompletelyRegular(usize),
    #[error("semigroup has no zero element")]
    NoZeroElement,
    #[error("semigroup has no identity element")]
    NotAMonoid,
    #[error("isomorphism search is capped at order {cap}, got order {order}")]
    SearchBudgetExceeded { order: usize, cap: usize },
    #[error("degree {degree} exceeds the cap {cap}")]
    DegreeTooLarge { degree: usize, cap: usize },
    #[error("order {order} exceeds the cap {cap}")]
    OrderTooLarge { order: usize, cap: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T, E = SemigroupError> = std::result::Result<T, E>;
