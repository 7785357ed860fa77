use thiserror::Error;

/// Errors raised by the combinatorial and cohomological routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("sequence {0:?} is not non-increasing")]
    NotDominant(Vec<i64>),

    #[error("sequence {0:?} has a negative entry and is not a partition")]
    NotPartition(Vec<i64>),

    #[error("rank mismatch for {what}: expected {expected}, found {found}")]
    RankMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("partition {partition:?} does not fit in a {rows}x{width} box")]
    OutsideBox {
        partition: Vec<u32>,
        rows: usize,
        width: u32,
    },

    #[error("{name} = {value} is out of range; valid range is {range}")]
    OutOfRange {
        name: &'static str,
        value: i64,
        range: String,
    },

    #[error("malformed shape: {0}")]
    MalformedShape(String),

    #[error("operation not available for {0}")]
    UnsupportedSpace(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn out_of_range(name: &'static str, value: i64, range: impl Into<String>) -> Error {
    Error::OutOfRange {
        name,
        value,
        range: range.into(),
    }
}
