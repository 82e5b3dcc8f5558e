use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid sign character {0:?}, expected '+' or '-'")]
    InvalidSign(char),
    #[error("element {element} is outside 1..={n}")]
    OutOfRange { element: usize, n: usize },
    #[error("element {0} appears more than once")]
    Duplicate(usize),
    #[error("ground set of size {got} is too small, need at least {min}")]
    GroundSetTooSmall { got: usize, min: usize },
    #[error("arguments must be pairwise distinct")]
    NotDistinct,
    #[error("word of length {got} is too short, need at least {min}")]
    WordTooShort { got: usize, min: usize },
    #[error("operator indices ({a},{b},{c}) are invalid for {vars} variables")]
    InvalidOperator {
        a: usize,
        b: usize,
        c: usize,
        vars: usize,
    },
    #[error("polynomials have incompatible shapes: {0}")]
    ShapeMismatch(String),
    #[error("class index {0} is outside 1..=6")]
    InvalidAlpha(usize),
    #[error("oracle size n={n} is outside the guarded range 3..={max}")]
    OracleRange { n: usize, max: usize },
    #[error("triangular source is malformed: {0}")]
    RaggedArray(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
