//! Error type for relation construction and queries.

use thiserror::Error;

/// Errors raised while building or operating on a [`crate::Rel`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RelError {
    /// A pair `(a, b)` with `a` not below `b` in the host lattice.
    #[error("pair (`{a}`, `{b}`) violates the host order: relations must be stronger than <=")]
    NotStronger { a: String, b: String },

    /// A pair list without the diagonal while `reflexive_implicit` is off.
    #[error("relation is missing the reflexive pair for `{0}`")]
    NotReflexive(String),

    /// A pair mentioned an id that is not in the host lattice.
    #[error("unknown element id `{0}` in pair list")]
    UnknownElement(String),

    /// Two relations on different host lattices were combined.
    #[error("relations live on different host lattices")]
    HostMismatch,

    /// No ascending chain of related steps joins the two elements.
    #[error("`{a}` does not reach `{b}` through related steps")]
    NoWitness { a: String, b: String },

    /// Two provably equivalent computations disagreed; always a bug.
    #[error("internal consistency check failed: {0}")]
    InternalInconsistency(String),

    /// A serialized relation referenced its lattice by path, which only the
    /// I/O layer can resolve.
    #[error("lattice reference `{0}` is a file path; resolve it before building the relation")]
    UnresolvedPath(String),
}
