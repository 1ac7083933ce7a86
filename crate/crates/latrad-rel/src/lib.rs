//! Reflexive relations on a finite lattice, and the operators that
//! classify, complement and close them.
//!
//! A [`Rel`] is a reflexive relation contained in the order of its host
//! [`latrad_core::Lattice`]. The crate provides:
//!
//! - construction from pairs, rows or JSON, plus the intrinsic relations
//!   every host carries ([`BuiltinRel`]);
//! - [`Rel::classify`], computing the contiguity, expandedness,
//!   transitivity and stability properties of a relation
//!   ([`PropertyProfile`]) with cross-checked characterizations;
//! - complements and the derived interval orders
//!   ([`Rel::upper_complement`], [`Rel::lower_order`], …);
//! - chain closures and witnesses ([`Rel::chain_closure_up`],
//!   [`Rel::gap_dense`], [`Rel::witness_path`]);
//! - contiguity closures ([`Rel::contiguous_closure_up`], …);
//! - enumeration and sampling of all relations over a small host
//!   ([`all_rels`], [`random_rels`]).

mod classify;
mod complements;
mod contiguity;
mod enumerate;
mod error;
mod rel;
mod triangles;

pub use classify::PropertyProfile;
pub use enumerate::{all_rels, random_rels, rel_from_mask, strict_leq_pairs};
pub use error::RelError;
pub use rel::{BuiltinRel, LatticeSource, Rel, RelJson};
