use thiserror::Error;

use crate::report::{AxiomReport, ImbeddingViolation};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("vector {index} has length {found}, ambient dimension is {expected}")]
    VectorLength {
        index: usize,
        expected: usize,
        found: usize,
    },

    #[error("matrix is not invertible")]
    NotInvertible,

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("bracket is not skew symmetric at basis indices {indices:?}")]
    SkewViolation { indices: Vec<usize> },

    #[error("{0} is not a homomorphism")]
    NotHomomorphism(&'static str),

    #[error("structure is not regular: {0}")]
    NotRegular(&'static str),

    #[error("axioms fail: {0}")]
    AxiomFailure(AxiomReport),

    #[error("{0} is ill-defined")]
    IllDefined(&'static str),

    #[error("map is not an imbedding: {0}")]
    NotImbedding(ImbeddingViolation),

    #[error("zeta does not kill A(T^T)")]
    ZetaNonzero,

    #[error("invalid scalar {0:?}")]
    ParseScalar(String),
}
