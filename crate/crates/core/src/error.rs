use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero quaternion")]
    DivisionByZero,

    #[error("complex adjoint rank {0} is odd; tolerance too loose or too tight")]
    ParityViolation(usize),

    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("gain on edge {u}-{v} is not a unit quaternion")]
    NonUnitGain { u: usize, v: usize },

    #[error("vertex sequence is not a cycle: {0}")]
    NotACycle(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph is acyclic")]
    Acyclic,

    #[error("cycle type {ty:?} is inconsistent with length {len}")]
    ParityMismatch { len: usize, ty: crate::graph::CycleType },

    #[error("float decision is ambiguous (magnitude {0:e} lies between 1e-9 and 1e-6)")]
    AmbiguousFloat(f64),

    #[error("wrong structural family: expected {expected}")]
    WrongFamily { expected: String },

    #[error("graph has pendant twins")]
    PendantTwins,

    /// A computed rank contradicts a predicted one.
    #[error("falsified: {0}")]
    Falsified(String),
    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid token {0:?}")]
    Token(String),
}
