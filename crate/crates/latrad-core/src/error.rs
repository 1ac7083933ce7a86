//! Error type for lattice construction and queries.

use thiserror::Error;

/// Errors raised while building or querying a [`crate::Lattice`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    /// The element list was empty.
    #[error("a lattice needs at least one element")]
    Empty,

    /// More elements than the fixed bitset capacity supports.
    #[error("too many elements: {n} (limit {max})")]
    SizeLimit { n: usize, max: usize },

    /// The same id appeared twice in the element list.
    #[error("duplicate element id `{0}`")]
    DuplicateElement(String),

    /// A cover pair mentioned an id that is not in the element list.
    #[error("unknown element id `{0}` in cover list")]
    UnknownElement(String),

    /// The cover relation contains a directed cycle.
    #[error("cover relation has a cycle through `{0}`")]
    CyclicCovers(String),

    /// A relation handed to `from_leq` is not a partial order.
    #[error("not a partial order: {0}")]
    NotAPartialOrder(String),

    /// The poset lacks a unique bottom or top element.
    #[error("no unique {which} element (extremal candidates: {candidates:?})")]
    NoBound {
        which: &'static str,
        candidates: Vec<String>,
    },

    /// Some pair has no unique greatest lower / least upper bound.
    #[error("not a lattice: `{a}` and `{b}` have no unique {op}")]
    NotALattice {
        a: String,
        b: String,
        op: &'static str,
    },

    /// An interval `[a, b]` was requested for incomparable endpoints.
    #[error("`{a}` and `{b}` are not comparable")]
    NotComparable { a: String, b: String },
}
