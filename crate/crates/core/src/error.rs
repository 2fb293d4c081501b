use thiserror::Error;

/// Errors produced by the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SyrtError {
    /// Text input that could not be parsed (shapes, tableau JSON).
    #[error("parse error: {0}")]
    Parse(String),
    /// Arguments outside the domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A filling that is not a bijection onto `1..=n`, or whose rows do not match the shape.
    #[error("malformed tableau: {0}")]
    Malformed(String),
    /// A well-formed filling that violates one of the row-strict axioms.
    #[error("not a row-strict tableau: {0}")]
    NotSyrt(crate::tableau::Violation),
    /// A size cap was exceeded before any work was done.
    #[error("{what}: size {size} exceeds limit {limit}")]
    Resource {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    /// A proven invariant failed to hold. Never expected.
    #[error("internal invariant failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, SyrtError>;

pub(crate) fn check_limit(what: &'static str, size: usize, limit: usize) -> Result<()> {
    if size > limit {
        Err(SyrtError::Resource { what, size, limit })
    } else {
        Ok(())
    }
}
