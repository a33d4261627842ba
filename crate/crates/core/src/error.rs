use thiserror::Error;

use crate::segment::Segment;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("`{0}` is not an integer or half-integer")]
    NotHalfInteger(String),

    #[error("segment [{b}..{e}] is empty or has a non-integral length")]
    BadSegment { b: String, e: String },

    #[error("line {0} has unit degree 0")]
    ZeroUnitDegree(u32),

    #[error("line {id} is used with unit degrees {first} and {second}")]
    InconsistentLine { id: u32, first: u32, second: u32 },

    #[error("segments {0} and {1} lie on different lines")]
    LineMismatch(Segment, Segment),

    #[error("segments {0} and {1} are not linked")]
    NotLinked(Segment, Segment),

    #[error("segment {0} does not precede {1}")]
    NotPreceding(Segment, Segment),

    #[error("margins have different totals ({0} and {1})")]
    MarginMismatch(u64, u64),

    #[error("composition {composition:?} does not have total degree {total}")]
    IncompatibleComposition { composition: Vec<u32>, total: u64 },

    #[error("expected a vector with {expected} tensor slots, found {found}")]
    Arity { expected: usize, found: usize },

    #[error("multisegment has degree {actual}, expected {expected}")]
    DegreeMismatch { expected: u64, actual: u64 },

    #[error("theta index {target} is smaller than the degree {n}")]
    ThetaIndex { n: u64, target: u64 },

    #[error("theta transport works on the default character line only")]
    NotOnCharacterLine,

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("unknown property suite `{0}`")]
    UnknownProperty(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
