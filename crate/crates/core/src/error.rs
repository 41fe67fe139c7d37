use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The blocks do not form a set partition of `1..=n`.
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    /// Two blocks cross: `a < b < c < d` with `a, c` in one block and `b, d` in another.
    #[error(
        "partition is crossing: {a} < {b} < {c} < {d} with {a},{c} and {b},{d} in different blocks"
    )]
    Crossing {
        a: usize,
        b: usize,
        c: usize,
        d: usize,
    },

    #[error("invalid Dyck word: {0}")]
    InvalidDyckWord(String),

    #[error("invalid matching: {0}")]
    InvalidMatching(String),

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("argument out of domain: {0}")]
    Domain(String),

    #[error("n = {n} exceeds the enumeration cap of {cap}")]
    ResourceLimit { n: usize, cap: usize },

    /// An exact division left a remainder. Always a bug, never bad input.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error("parse error: {0}")]
    Parse(String),
}
