//! Instance generators for the lattice toolkit: the factory behind every
//! test corpus.
//!
//! Four families of hosts come out of this crate:
//!
//! - **Named lattices** ([`make_named`]): chains, Boolean lattices, the
//!   diamond and pentagon, partition lattices, numeric divisor chains with
//!   their divisibility relation, and binary products.
//! - **Subspace lattices** ([`subspace_lattice`]): all subspaces of a small
//!   vector space over a 2-, 3-, 4- or 5-element field, with dimension data
//!   ([`RankedLattice`]) and the codimension-bounded relations
//!   ([`rel_codim`], [`rel_codim_perp`]).
//! - **Downset lattices** ([`downset_lattice`]): the distributive lattices
//!   of downsets of a small poset.
//! - **Completions** ([`dm_completion`]): the smallest complete lattice a
//!   poset order-embeds into, by cut enumeration.
//!
//! Everything is deterministic — the same parameters (and seeds, for
//! [`Poset::random`]) always produce the same elements in the same order.

mod downset;
mod error;
mod field;
mod named;
mod poset;
mod subspace;

pub use error::GenError;

pub use named::{divisor_rel, make_named, product, NamedKind};

pub use poset::{all_posets, Poset};

pub use downset::{dm_completion, downset_lattice};

pub use subspace::{rel_codim, rel_codim_perp, subspace_lattice, Codim, RankedLattice};
