use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("inner partition does not fit inside outer: {0}")]
    InnerNotContained(String),

    #[error("parse error at byte {pos} in {input:?}: {msg}")]
    Parse {
        input: String,
        pos: usize,
        msg: String,
    },

    #[error("no diagonal with content {0} in this shape")]
    NoSuchDiagonal(i32),

    #[error("shape is not edgewise connected")]
    NotConnected,

    #[error("operation undefined for the empty shape")]
    EmptyShape,

    #[error("box set is not a valid skew diagram: {0}")]
    NotSkew(String),

    #[error("not a border strip: {0}")]
    NotBorderStrip(String),

    #[error("segment [{p},{q}] out of range for strip spanning [{lo},{hi}]")]
    SegmentOutOfRange { p: i32, q: i32, lo: i32, hi: i32 },

    #[error("not an outside decomposition: {0}")]
    NotOutside(String),

    #[error("direction word has length {got}, expected {expected}")]
    WordLength { got: usize, expected: usize },

    #[error("cutting strip mismatch: {0}")]
    StripMismatch(String),

    #[error("twist content {content} outside legal range [{lo},{hi})")]
    TwistOutOfRange { content: i32, lo: i32, hi: i32 },

    #[error("duplicate entries in pair sequence: {0}")]
    DuplicatePairs(String),

    #[error("negative argument: {0}")]
    NegativeArgument(String),

    #[error("variable count mismatch: {0} vs {1}")]
    NvarsMismatch(usize, usize),

    #[error("matrix is not square: {rows} rows, {cols} columns in row {row}")]
    NotSquare { rows: usize, cols: usize, row: usize },

    #[error("Giambelli cutting strip requires a straight shape (empty inner partition)")]
    GiambelliSkew,

    #[error("trace verification failed at step {step} ({op}): {msg}")]
    TraceVerification {
        step: usize,
        op: String,
        msg: String,
    },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
