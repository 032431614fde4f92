use crate::board::Position;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("board must be non-empty, got {rows}x{cols}")]
    EmptyBoard { rows: u16, cols: u16 },

    #[error("position {pos} out of bounds on a {rows}x{cols} board")]
    OutOfBounds { pos: Position, rows: u16, cols: u16 },

    #[error("bad board spec `{0}` (expected `square:M1xM2` or `hex:M1xM2`)")]
    BadBoardSpec(String),

    #[error("{0}")]
    Precondition(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("illegal step: {0}")]
    IllegalStep(String),

    #[error("trace invalid at step {step}: {report}")]
    InvalidTrace { step: usize, report: String },

    #[error("state space too large: estimated {estimate} states exceeds cap {cap}")]
    CapExceeded { estimate: u64, cap: u64 },

    #[error("configurations lie in different components")]
    Unreachable,

    #[error("all holes are isolated; configuration is outside the large connected component")]
    IsolatedHoles,

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
