use latrad_core::LatticeError;
use latrad_rel::RelError;
use thiserror::Error;

/// Errors produced by instance generators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    /// A generator parameter exceeds its documented budget.
    #[error("too many {what}: {n} (limit {max})")]
    SizeLimit {
        what: &'static str,
        n: usize,
        max: usize,
    },

    /// Subspace lattices are only built over the four smallest fields.
    #[error("no field with {0} elements is available (choose 2, 3, 4 or 5)")]
    UnsupportedField(u64),

    /// A generator parameter must be at least one.
    #[error("{0} must be at least 1")]
    ZeroParameter(&'static str),

    /// A codimension bound of zero would relate no pair at all, not even
    /// an element to itself.
    #[error("a codimension bound of 0 relates nothing; bounds start at 1")]
    ZeroCodim,

    /// A rank table does not fit its host lattice.
    #[error("rank table does not fit the host: {0}")]
    BadRank(String),

    /// Pairs handed to a poset constructor order some element both ways.
    #[error("not a partial order: {0}")]
    BadPoset(String),

    /// A generator spec string does not name a known kind.
    #[error("unknown generator kind `{0}`")]
    UnknownKind(String),

    /// A generator spec string has malformed parameters.
    #[error("bad parameters for `{kind}`: {reason}")]
    BadSpec { kind: String, reason: String },

    /// An underlying lattice operation failed.
    #[error(transparent)]
    Lattice(#[from] LatticeError),

    /// An underlying relation operation failed.
    #[error(transparent)]
    Rel(#[from] RelError),
}
