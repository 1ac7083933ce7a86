//! Errors for radical computations.

use latrad_core::LatticeError;
use latrad_rel::RelError;
use thiserror::Error;

/// Everything that can go wrong while computing radicals, radical maps,
/// decompositions or invariance reports.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RadicalError {
    /// The operation is only defined for relations with a stronger
    /// property profile than the one supplied.
    #[error("operation needs a relation that is {required}")]
    PreconditionFailed { required: &'static str },

    /// Interval decomposition needs a relation that is contiguous,
    /// expanded and transitive in both directions.
    #[error("relation is not a contiguous expanded order in both directions")]
    NotTTOrder,

    /// Two intervals of a proposed block decomposition share an element.
    #[error("blocks [{0}] and [{1}] overlap")]
    BlocksOverlap(String, String),

    /// A proposed block decomposition misses part of the lattice.
    #[error("blocks do not cover element {0}")]
    BlocksIncomplete(String),

    /// The permutation does not preserve the lattice order.
    #[error("not an automorphism: {0}")]
    NotAutomorphism(String),

    /// The automorphism moves some related pair out of the relation.
    #[error("the automorphism does not preserve the relation")]
    NotPreserving,

    /// The automorphism moves the element under inspection.
    #[error("the automorphism does not fix element {0}")]
    NotFixed(String),

    /// A map table has the wrong number of entries for its host.
    #[error("map table has {got} entries but the lattice has {want} elements")]
    TableSize { got: usize, want: usize },

    /// A map table entry points outside the host.
    #[error("map table entry {0} is out of range")]
    TableRange(usize),

    /// Two objects live on different lattices.
    #[error("objects live on different lattices")]
    HostMismatch,

    #[error(transparent)]
    Lattice(#[from] LatticeError),

    #[error(transparent)]
    Rel(#[from] RelError),
}
