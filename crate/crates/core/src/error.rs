use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Arguments outside an operation's domain (empty input, zero size,
    /// colour out of range, and the like).
    #[error("domain error: {0}")]
    Domain(String),

    /// A structural precondition failed on otherwise well-typed data.  The
    /// message names the violated condition so callers can report it.
    #[error("invariant violation: {0}")]
    Invariant(String),

    /// An enumeration would exceed the configured item cap.
    #[error("resource cap exceeded: {what} needs {needed} items, cap is {cap}")]
    Resource { what: String, needed: String, cap: u64 },

    /// The rewrite engine ran out of fuel.  Diagnostic: desk-scale inputs
    /// terminate far below the default budget.
    #[error("rewrite fuel exhausted after {steps} steps")]
    Fuel { steps: u64 },

    /// Text input did not match the word grammar.  `position` is a 0-based
    /// character offset into the input line, suitable for a caret marker.
    #[error("parse error at offset {position}: {message}")]
    Parse { position: usize, message: String },

    /// An operation that requires a charge-homogeneous Fock element was
    /// handed a mixture.
    #[error("charge mixing: {0}")]
    ChargeMixing(String),
}
