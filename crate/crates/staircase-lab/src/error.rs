use thiserror::Error;

/// Errors shared by every layer of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parts must be weakly decreasing and positive: {0}")]
    InvalidPartition(String),
    #[error("shifted diagrams require a strict partition")]
    ShiftedOfNonStrict,
    #[error("cell ({0}, {1}) lies outside the diagram")]
    CellOutOfShape(u32, u32),
    #[error("inner diagram is not contained in the container")]
    NotContained,
    #[error("container must be a rectangle (ordinary) or a staircase (shifted)")]
    UnsupportedContainer,
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("operation requires a non-empty shape")]
    EmptyShape,
    #[error("word is not a 132-avoiding sorting network (or a prefix of one)")]
    NotA132Network,
    #[error("tableau does not have the required shape")]
    WrongShape,
    #[error("tableau is not standard: {0}")]
    NotStandard(String),
    #[error("largest entry lies in column {0} which is not right of column {1}")]
    MaxEntryTooFarLeft(u32, u32),
    #[error("two exact computation routes disagree: {0}")]
    InternalMismatch(String),
    #[error("point outside the function domain: {0}")]
    OutOfDomain(String),
    #[error("curve is not 1-Lipschitz (max slope {0})")]
    NotLipschitz(f64),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
