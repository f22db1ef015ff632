use thiserror::Error;

use crate::liealg::JacobiViolation;
use crate::repmod::HomomorphismViolation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("Jacobi identity fails: {0}")]
    Jacobi(JacobiViolation),

    #[error("not a representation: {0}")]
    Homomorphism(HomomorphismViolation),

    #[error("module {module} is not a representation: {violation}")]
    NotAModule {
        module: String,
        violation: HomomorphismViolation,
    },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("constraint violated: {0}")]
    Constraint(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("resource limit: {0}")]
    Resource(String),

    #[error("unknown name: {0}")]
    Lookup(String),

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },

    #[error("internal invariant failure: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
