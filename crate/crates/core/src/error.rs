use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("no last part: composition is empty")]
    NoLastPart,
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("W is undefined for the empty partition")]
    EmptyPartition,
    #[error("sorting condition violated in row {row}: columns {first} and {second} differ")]
    SortingCondition { row: String, first: String, second: String },
    #[error("invalid abacus operation: {0}")]
    Abacus(String),
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("invalid filling: {0}")]
    InvalidFilling(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("{content} does not refine {shape}")]
    NotRefinement { content: String, shape: String },
    #[error("invalid marking: {0}")]
    InvalidMarking(String),
    #[error("invalid choice sequence: {0}")]
    InvalidChoice(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_sizes(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::SizeMismatch { left, right })
    }
}
