use latrad_core::LatticeError;
use latrad_radical::RadicalError;
use latrad_rel::RelError;
use thiserror::Error;

/// Errors produced by closure constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClosureError {
    /// A family operation was asked of a family of the wrong kind.
    #[error("family is not {expected}")]
    WrongKind { expected: &'static str },

    /// The subset cannot be turned into a family of any kind.
    #[error("subset is neither enveloping nor inscribing")]
    NotAFamily,

    /// A superposition input is not a closure map (or not a kernel map,
    /// for the dual construction).
    #[error("map at index {0} is not a closure map of the requested kind")]
    NotRadical(usize),

    /// The topology bridge needs a map that preserves joins as well.
    #[error("map is not an idempotent inflationary join homomorphism")]
    NotTRadical,

    /// A closure operator on subsets must leave the empty set fixed.
    #[error("map does not fix the bottom element")]
    EmptyNotFixed,

    /// The topology bridge only works over Boolean lattices.
    #[error("host lattice is not Boolean")]
    NotBoolean,

    /// The requested witness chain does not exist.
    #[error("no gap chain connects {0} to {1}")]
    NotBarRelated(String, String),

    /// Two arguments live on different host lattices.
    #[error("arguments are defined over different host lattices")]
    HostMismatch,

    /// An underlying lattice operation failed.
    #[error(transparent)]
    Lattice(#[from] LatticeError),

    /// An underlying relation operation failed.
    #[error(transparent)]
    Rel(#[from] RelError),

    /// An underlying map operation failed.
    #[error(transparent)]
    Radical(#[from] RadicalError),
}
