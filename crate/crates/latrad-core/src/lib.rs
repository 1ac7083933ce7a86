//! Finite complete lattices with explicit order tables.
//!
//! This crate is the foundation of the workspace: a [`Lattice`] is built
//! once from cover pairs (or a full order matrix), validated, and frozen
//! with precomputed up/down sets, covers, bottom/top and meet/join tables.
//! On top of that sit:
//!
//! - interval and gap queries, maximal chains, order duals;
//! - [`StructureProfile`]: modularity (checked two independent ways),
//!   distributivity, the subset- and chain-quantified distributive
//!   identities, gradedness with ranks;
//! - automorphism enumeration and a canonical isomorphism key, both behind
//!   explicit size limits.
//!
//! Elements are indexed `0..n` with `n <= 128`, so element sets are single
//! `u128` bitmasks ([`ElemSet`]).

pub mod automorphism;
pub mod elemset;
pub mod error;
pub mod json;
pub mod lattice;
pub mod profile;

pub use automorphism::{MAX_AUTOMORPHISM_ELEMENTS, MAX_CANONICAL_ELEMENTS};
pub use elemset::{ElemSet, MAX_ELEMENTS};
pub use error::LatticeError;
pub use json::LatticeJson;
pub use lattice::Lattice;
pub use profile::StructureProfile;
