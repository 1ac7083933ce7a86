//! Hulls, kernels and superposition limits for maps and relations on
//! finite lattices.
//!
//! Everything here revolves around one mechanism: a subset of a complete
//! lattice that is closed under meets and contains the top gives every
//! element a least majorant, and the map sending elements to their least
//! majorants is a closure map. This crate implements that correspondence
//! and the constructions stacked on it:
//!
//! - [`SubsetFamily`] classifies a subset by which hulls it supports and
//!   converts it to maps via [`SubsetFamily::envelope_map`] and
//!   [`SubsetFamily::kernel_map`]; [`SubsetFamily::from_fixpoints`] goes
//!   the other way.
//! - [`pointwise_join`] / [`pointwise_meet`] compute in the lattice of
//!   all maps on a host; [`rad_meet`] and [`rad_join`] stay inside the
//!   closure maps, the latter by round-robin superposition recorded in a
//!   [`SuperpositionTrace`]. [`dual_rad_join`] and [`dual_rad_meet`]
//!   are the kernel-map duals.
//! - [`RefOp`] names the closure and interior operators on the space of
//!   reflexive relations — chain, contiguity, expansion and order
//!   closures plus the join/meet-stable hulls and cores — and [`tilde`]
//!   and [`bar`] superpose them: the least doubly contiguous, doubly
//!   expanded order containing a relation, and the limit of alternating
//!   chain closures. [`gd_witness`] materializes membership in the
//!   latter as an explicit chain.
//! - [`closed_sets_of`] / [`closure_operator_of`] bridge join-preserving
//!   closure maps on Boolean hosts and the closed-set families of
//!   topologies.

mod error;
mod family;
mod mapops;
mod refspace;
mod topology;

pub use error::ClosureError;
pub use family::{FamilyKind, SubsetFamily};
pub use mapops::{
    dual_rad_join, dual_rad_meet, map_leq, pointwise_join, pointwise_meet, rad_join, rad_meet,
    Step, SuperpositionTrace,
};
pub use refspace::{
    bar, chain_down, chain_up, contiguous_down, contiguous_up, expanded_down, expanded_up,
    gd_witness, join_stable_core, join_stable_hull, meet_stable_core, meet_stable_hull,
    order_closure, tilde, RefOp,
};
pub use topology::{closed_sets_of, closure_operator_of, is_boolean};
