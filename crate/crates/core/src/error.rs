//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Input outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A builder could not produce an object satisfying its invariants.
    #[error("construction error: {0}")]
    Construction(String),

    /// Config file syntax error with a 1-based line number.
    #[error("config syntax error at line {line}: {msg}")]
    ConfigSyntax { line: usize, msg: String },

    /// Config value rejected by validation; names the offending key.
    #[error("config constraint violated for `{key}`: {msg}")]
    ConfigConstraint { key: String, msg: String },

    /// Time step violates a stability bound.
    #[error("step size error: {0}")]
    StepSize(String),

    /// Non-finite values appeared in the solution.
    #[error("blow-up detected: {0}")]
    BlowUp(String),

    /// Eigenvalue or factorization routine failed to converge.
    #[error("solver failure: {0}")]
    Solver(String),

    #[error("checkpoint error: {0}")]
    Checkpoint(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
