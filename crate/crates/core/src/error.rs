use std::fmt;

use thiserror::Error;

/// A row or column of a matrix, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Line {
    Row(usize),
    Column(usize),
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Line::Row(i) => write!(f, "row {i}"),
            Line::Column(j) => write!(f, "column {j}"),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("undefined degree: zero polynomial")]
    UndefinedDegree,

    #[error("matrix is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },

    #[error("empty matrix")]
    EmptyMatrix,

    #[error("entry {value} at ({row},{col}) is outside {{-1,0,1}}")]
    EntryOutOfRange { row: usize, col: usize, value: i64 },

    #[error("nonzero entries of {0} do not alternate in sign")]
    SignAlternation(Line),

    #[error("{line} sums to {sum}")]
    LineSum { line: Line, sum: i64 },

    #[error("first nonzero entry of {0} is -1")]
    FirstNonzero(Line),

    #[error("corner sum violates r(i,n)=r(n,i)=i at index {0}")]
    CornerSumBoundary(usize),

    #[error("corner sum step at ({row},{col}) is not 0 or 1")]
    CornerSumStep { row: usize, col: usize },

    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),

    #[error("not a permutation of 1..{0}")]
    InvalidPermutation(usize),

    #[error("invalid simple transposition index {0}")]
    InvalidLetter(usize),

    #[error("partition {partition} does not fit in a {rows}x{cols} box")]
    PartitionDoesNotFit {
        partition: String,
        rows: usize,
        cols: usize,
    },

    #[error("partition is not weakly decreasing")]
    NotAPartition,

    #[error("descent {d} is smaller than the partition length {len}")]
    DescentTooSmall { d: usize, len: usize },

    #[error("shape tuple has {0} partitions but {1} descents")]
    ShapeLengthMismatch(usize, usize),

    #[error("invalid biGrassmannian triple ({i},{j},{r}) in size {n}")]
    InvalidBiGrassmannian {
        i: usize,
        j: usize,
        r: usize,
        n: usize,
    },

    #[error("cell ({row},{col}) lies outside the {n}x{n} grid")]
    OutsideGrid { row: usize, col: usize, n: usize },

    #[error("grid size {0} exceeds the supported maximum of {1}")]
    GridTooLarge(usize, usize),

    #[error("invalid tableau filling: {0}")]
    InvalidTableau(String),

    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
