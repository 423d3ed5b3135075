use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("schema error: {0}")]
    Schema(String),

    #[error("multiplication is not associative on basis triple ({i}, {j}, {k})")]
    NotAssociative { i: usize, j: usize, k: usize },

    #[error("unit is not a two-sided identity at basis element {0}")]
    NotUnital(usize),

    #[error("not a representation: {0}")]
    NotRepresentation(String),

    #[error("acting algebras differ: {0}")]
    BaseMismatch(String),

    #[error("induced map is not well defined: {context}")]
    IllDefined { context: String },

    #[error("not a module map: {0}")]
    NotModuleMap(String),

    #[error("not an algebra map: {0}")]
    NotAlgebraMap(String),

    #[error("precondition {equation} violated at {witness}")]
    Precondition { equation: String, witness: String },

    #[error("matrix is not invertible: {0}")]
    Singular(String),

    #[error("invalid T-algebra: {0}")]
    InvalidAlgebra(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("enumeration of {size} candidates exceeds the cap {cap}")]
    CapExceeded { size: String, cap: u128 },
}
