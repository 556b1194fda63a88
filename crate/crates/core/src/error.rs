use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("polynomial is not symmetric in the a-variables")]
    NotSymmetric,
    #[error("partition {0:?} has more than {1} parts")]
    TooManyParts(Vec<i64>, usize),
    #[error("size mismatch: |{0:?}| != |{1:?}|")]
    SizeMismatch(Vec<i64>, Vec<i64>),
    #[error("inner shape {inner:?} is not contained in {outer:?}")]
    NotContained { outer: Vec<i64>, inner: Vec<i64> },
    #[error("row {0:?} is not admissible for N={1}, n={2}, k={3}")]
    NotAdmissible(Vec<i64>, usize, usize, i64),
    #[error("row {0:?} is not cuttable")]
    NotCuttable(Vec<i64>),
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("semi-infinite data required")]
    NeedsTail,
    #[error("finite data required")]
    NeedsFinite,
    #[error("tail does not match the vacuum pattern")]
    BadTail,
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("no stabilization at degree {degree} up to L = {cap}")]
    NoStabilization { degree: usize, cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
