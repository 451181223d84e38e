use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error)]
pub enum Error {
    /// A brute-force or materializing operation was asked to exceed its hard cap.
    #[error("{what} too large: {value} exceeds limit {limit}")]
    TooLarge {
        what: &'static str,
        value: u128,
        limit: u128,
    },

    /// The upset is empty because the weight denominator exceeds the edge count.
    #[error("upset is empty: r = {r} exceeds edge count d = {d}")]
    EmptyUpset { r: String, d: u64 },

    /// Construction-time validation failure on an instance or subset.
    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    /// Parameter violation on a numeric primitive or checker.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// Malformed instance file or report payload.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
