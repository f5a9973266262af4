use thiserror::Error;

/// Errors produced by the core library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A vertex index or vertex set does not fit the graph it was used with.
    #[error("vertex {vertex} out of range for graph of order {order}")]
    Range { vertex: usize, order: usize },

    /// An input exceeds a configured size cap (enumeration, isomorphism, graph6).
    #[error("{what}: {actual} exceeds the limit of {limit}")]
    Limit {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    /// Power iteration ran out of iterations.
    #[error("power iteration did not converge after {iterations} iterations (rho ~ {rho}, residual {residual:e})")]
    Convergence {
        rho: f64,
        residual: f64,
        iterations: usize,
    },

    /// Exact integer arithmetic would overflow.
    #[error("integer overflow while computing {what} at level {level}")]
    Overflow { what: &'static str, level: usize },

    /// Parameters outside the range the construction supports.
    #[error("unsupported parameter: {0}")]
    UnsupportedParameter(String),

    /// Structurally invalid input.
    #[error("invalid input: {0}")]
    Validation(String),

    /// The requested order is too small for the extremal plan to have nonnegative counts.
    #[error("n = {n} is too small: {reason}")]
    NTooSmall { n: usize, reason: String },

    /// A closed-form bound is undefined for these arguments.
    #[error("domain error: {0}")]
    Domain(String),

    /// Malformed text input.
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
