use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid rational {0:?}")]
    BadRational(String),

    #[error("undefined on unit⊗unit: {0}")]
    UnitProduct(&'static str),

    #[error("braid relation fails at ({i},{j},{k}): {lhs} != {rhs}")]
    BraidRelation {
        i: usize,
        j: usize,
        k: usize,
        lhs: String,
        rhs: String,
    },

    #[error("invalid braiding: {0}")]
    BadBraiding(String),

    #[error("invalid algebra: {0}")]
    BadAlgebra(String),

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("slot {slot} out of range for word of length {len}")]
    SlotOutOfRange { slot: usize, len: usize },

    #[error("letter e{letter} outside alphabet of dimension {dim}")]
    LetterOutOfRange { letter: usize, dim: usize },

    #[error("invalid permutation {0:?}")]
    BadPermutation(Vec<usize>),

    #[error("map undefined on {0}")]
    UndefinedTerm(String),

    #[error("tree is not lush: {0}")]
    NotLush(String),

    #[error("kind mismatch: {0}")]
    KindMismatch(String),

    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
