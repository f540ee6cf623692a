//! Error type shared by every module of the crate.

use crate::scalar::Field;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("subspace is not contained in the other")]
    SubspaceNotContained,
    #[error("subspace is not a two-sided ideal")]
    NotAnIdeal,
    #[error("algebra is not nilpotent")]
    NotNilpotent,
    #[error("algebra is not abelian")]
    NotAbelian,
    #[error("ideal is not central")]
    IdealNotCentral,
    #[error("ideal is not central in the pair")]
    NotCentralInPair,
    #[error("subspace is not an ideal complement")]
    NotAComplement,
    #[error("chain-space dimension {0} exceeds cap {1}")]
    DimensionCapExceeded(usize, usize),
    #[error("induced bracket is not well defined on the quotient")]
    BracketNotWellDefined,
    #[error("a relation is not killed by the commutator map")]
    RelationNotKilled,
    #[error("input shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("unknown catalog algebra: {0}")]
    UnknownCatalog(String),
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("invalid crossed module: {0}")]
    InvalidCrossedModule(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("scalar is not invertible")]
    NotInvertible,
}

pub type Result<T> = std::result::Result<T, Error>;
