use thiserror::Error;

use crate::mpinv::Method;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("zero matrix has no rank factorization")]
    ZeroMatrix,

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid edge: {0}")]
    InvalidEdge(String),
    #[error("not an incidence matrix: {0}")]
    NotIncidence(String),
    #[error("edge index {index} out of range (graph has {edges} edges)")]
    EdgeOutOfRange { index: usize, edges: usize },

    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is unbalanced")]
    Unbalanced,
    #[error("graph is balanced")]
    Balanced,
    #[error("graph is not a tree")]
    NotATree,
    #[error("graph is not unicyclic")]
    NotUnicyclic,
    #[error("{edges} edges exceeds the enumeration cap of {cap}")]
    EdgeCapExceeded { edges: usize, cap: usize },

    #[error("{method} result failed verification: {detail}")]
    FormulaVerification { method: Method, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
