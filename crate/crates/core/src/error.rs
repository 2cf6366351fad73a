use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("mosaic dimensions must be positive, got {rows}x{cols}")]
    EmptyDimension { rows: usize, cols: usize },

    #[error("expected {expected} cells for a {rows}x{cols} mosaic, got {actual}")]
    CellCount {
        rows: usize,
        cols: usize,
        expected: usize,
        actual: usize,
    },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("input is not a knot mosaic")]
    NotKnotMosaic,

    #[error("size limit exceeded: {0}")]
    SizeLimit(String),

    #[error("out of domain: {0}")]
    Domain(String),

    #[error("cross-check failed: {0}")]
    CrossCheck(String),
}

/// What went wrong while reading a mosaic grid.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("invalid tile {0:?} (expected an integer in 0..=10)")]
    InvalidTile(String),
    #[error("row has {actual} cells, expected {expected}")]
    RaggedRow { expected: usize, actual: usize },
    #[error("no rows in input")]
    Empty,
}

/// A grid parse failure. `line` is the 1-based line in the input and
/// `column` the 1-based cell position within the row (0 when the error
/// concerns the whole row or input).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}
