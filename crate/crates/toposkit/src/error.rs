//! Errors and the enumeration size guard.

use thiserror::Error;

/// Library-wide error type.
///
/// Validation of user-supplied structures reports rich per-module reports
/// instead of erroring; `TkError` covers usage errors (mismatched bases,
/// ill-typed compositions), guard trips, and file problems.
#[derive(Debug, Error)]
pub enum TkError {
    /// An enumeration would visit more candidates than the configured bound.
    #[error("resource guard: {what} needs {needed} candidates, limit is {limit}")]
    Resource {
        what: String,
        needed: u128,
        limit: u64,
    },

    /// Two values that must live over the same base category do not.
    #[error("base category mismatch: {0}")]
    BaseMismatch(String),

    /// Ill-typed data: sizes, indices or sources/targets do not line up.
    #[error("shape error: {0}")]
    Shape(String),

    /// A structure failed its defining laws; the message carries a witness.
    #[error("invalid {kind}: {msg}")]
    Invalid { kind: &'static str, msg: String },

    /// A map that must be mono is not.
    #[error("not a monomorphism: components at {at} identify elements {x} and {y}")]
    NotMono { at: String, x: usize, y: usize },

    /// A functor that must preserve finite limits does not.
    #[error("not left exact: {0}")]
    NotLex(String),

    /// Parse error with source position.
    #[error("{file}:{line}: {msg}")]
    Parse {
        file: String,
        line: usize,
        msg: String,
    },

    /// A name used in a file or on the command line does not resolve.
    #[error("unresolved {kind} `{name}`")]
    Unresolved { kind: &'static str, name: String },

    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl TkError {
    pub fn invalid(kind: &'static str, msg: impl Into<String>) -> Self {
        TkError::Invalid {
            kind,
            msg: msg.into(),
        }
    }

    pub fn shape(msg: impl Into<String>) -> Self {
        TkError::Shape(msg.into())
    }
}

/// Bound on the number of candidates an enumeration may visit.
///
/// Operations whose candidate space exceeds the bound refuse up front with
/// [`TkError::Resource`] rather than starting a search that cannot finish.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guard {
    limit: u64,
}

pub const DEFAULT_GUARD_LIMIT: u64 = 10_000_000;

impl Default for Guard {
    fn default() -> Self {
        Guard {
            limit: DEFAULT_GUARD_LIMIT,
        }
    }
}

impl Guard {
    pub fn new(limit: u64) -> Self {
        Guard { limit }
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Accept or refuse an enumeration of `needed` candidates.
    pub fn check(&self, what: &str, needed: u128) -> Result<(), TkError> {
        if needed > self.limit as u128 {
            Err(TkError::Resource {
                what: what.to_string(),
                needed,
                limit: self.limit,
            })
        } else {
            Ok(())
        }
    }
}

/// Product of counts with saturation, for guard checks.
pub fn checked_product(counts: impl IntoIterator<Item = u128>) -> u128 {
    let mut acc: u128 = 1;
    for c in counts {
        acc = acc.saturating_mul(c);
        if acc > u64::MAX as u128 {
            return acc;
        }
    }
    acc
}

/// `base^exp` with saturation, for guard checks.
pub fn checked_pow(base: u128, exp: u128) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base);
        if acc > u64::MAX as u128 {
            return acc;
        }
    }
    acc
}
