use thiserror::Error;

/// Errors raised by the arithmetic kernels and the function evaluators.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A p-adic computation ran out of significant digits.
    #[error("precision exhausted: {0}")]
    Precision(String),
    /// A certified series did not reach its tail bound within the term budget.
    #[error("series did not converge: tail bound {tail_bound:e} > epsilon {epsilon:e} after {terms} terms")]
    Convergence {
        terms: usize,
        tail_bound: f64,
        epsilon: f64,
    },
    /// The requested combination is well defined but not supported here.
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// A textual value could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
