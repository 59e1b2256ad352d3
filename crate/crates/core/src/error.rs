use thiserror::Error;

use crate::report::ValidationReport;

/// Errors raised by searches and constructions over finite structures.
///
/// Negative mathematical answers are never errors; they come back as
/// `false`, `None`, or a failing verdict. These variants signal that a
/// computation could not be carried out at all.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("search space of {candidates} candidates exceeds the enumeration limit of {limit}")]
    SizeLimitExceeded { candidates: u128, limit: u64 },

    #[error("morphism `{morphism}` has no two-sided inverse")]
    NotInvertible { morphism: String },

    #[error("invariant violated: {0}")]
    InvariantViolated(String),

    #[error("missing structure: {0}")]
    MissingStructure(String),

    #[error("malformed table: {0}")]
    Malformed(String),

    #[error("structure fails its laws:\n{0}")]
    Law(ValidationReport),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Upper bound on the number of candidates an exhaustive search may visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimit(pub u64);

impl SearchLimit {
    pub const DEFAULT: SearchLimit = SearchLimit(10_000_000);

    /// Fails with `SizeLimitExceeded` when `candidates` is above the bound.
    pub fn admit(self, candidates: u128) -> Result<()> {
        if candidates > self.0 as u128 {
            Err(Error::SizeLimitExceeded {
                candidates,
                limit: self.0,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for SearchLimit {
    fn default() -> Self {
        Self::DEFAULT
    }
}
