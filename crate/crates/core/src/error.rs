use thiserror::Error;

use crate::graph::{PortIndex, VertexId};

pub type Result<T, E = WalkError> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum WalkError {
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),

    #[error("vertex {vertex} has no port {port}")]
    InvalidPort { vertex: VertexId, port: PortIndex },

    #[error("coin dimension must be at least 1")]
    ZeroDimension,

    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not unitary (max |U^dag U - I| = {defect:e})")]
    NonUnitary { defect: f64 },

    #[error("coin at vertex {vertex} has dimension {found}, vertex degree is {expected}")]
    DimensionMismatch {
        vertex: VertexId,
        expected: usize,
        found: usize,
    },

    #[error("coin list covers {found} vertices, graph has {expected}")]
    CoinCountMismatch { expected: usize, found: usize },

    #[error("tensor product dimension {0} exceeds the supported maximum")]
    DimensionOverflow(usize),

    #[error("not a permutation of 0..{0}")]
    NotAPermutation(usize),

    #[error("state has {found} amplitudes, walk has {expected} ports")]
    StateSizeMismatch { expected: usize, found: usize },

    #[error("{ports} ports exceed the dense oracle limit of {limit}")]
    SpaceTooLarge { ports: usize, limit: usize },

    #[error("word has length {found}, machine expects {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("words of a quantum input differ in length ({0} vs {1})")]
    UnequalWordLengths(usize, usize),

    #[error("|eta| = {0} exceeds 1")]
    EtaOutOfRange(f64),

    #[error("empty word")]
    EmptyWord,

    #[error("invalid symbol {0:?}; words are over {{a, b}}")]
    InvalidSymbol(char),

    #[error("cut-point {0} outside [0, 1)")]
    InvalidCutpoint(f64),

    #[error("error margin {0} must be positive")]
    InvalidMargin(f64),

    #[error("{0} must be at least 1")]
    ZeroSize(&'static str),

    #[error("no member word for length {0}")]
    NoReferenceWord(usize),

    #[error("{word} is not a member of the machine's language")]
    NotAMember { word: String },

    #[error("machine uses {found} encoding, {expected} was requested")]
    WrongEncoding {
        expected: &'static str,
        found: &'static str,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid machine: {0}")]
    InvalidMachine(String),
}

impl WalkError {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        WalkError::Parse {
            line,
            message: message.into(),
        }
    }
}
