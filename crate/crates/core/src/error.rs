use thiserror::Error;

/// Errors raised by the evaluation, zero-finding and quadrature routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A parameter lies outside the domain where the quantity is defined.
    #[error("parameter out of domain: {0}")]
    Domain(String),
    /// The request is well-formed but exceeds what double precision supports here.
    #[error("unsupported request: {0}")]
    Capability(String),
    /// The request does not match the operation (wrong family, i >= n, ...).
    #[error("invalid request: {0}")]
    Usage(String),
    /// An iterative method failed to converge.
    #[error("numerical failure: {0}")]
    Numerical(String),
}

pub type Result<T> = std::result::Result<T, Error>;
