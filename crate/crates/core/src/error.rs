use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("invalid diagram: {0}")]
    Validation(String),

    #[error("unknown crossing id {0}")]
    UnknownCrossing(u32),

    #[error("invalid position: {0}")]
    InvalidPosition(String),

    #[error("state does not match diagram: {0}")]
    StateMismatch(String),

    #[error("{crossings} crossings exceeds the cap of {cap}")]
    CrossingCap { crossings: usize, cap: usize },

    #[error("operation requires h = 0")]
    NonZeroH,

    #[error("global labels must differ in the two-cycle case (got {0} twice)")]
    EqualLabels(usize),

    #[error("expected a knot (one component), got {0} components")]
    NotAKnot(usize),

    #[error("diagram has a negative crossing; a positive diagram is required")]
    NotPositive,

    #[error("colouring failed: {0}")]
    Colouring(&'static str),

    #[error("unknown catalog entry {0:?}")]
    UnknownEntry(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
