//! Radicals, radical maps and interval decompositions for relations on
//! finite lattices.
//!
//! Built on top of [`latrad_rel`], this crate answers the structural
//! questions that a classified relation makes well-posed:
//!
//! - [`radicals_in`] / [`dual_radicals_in`] enumerate the radicals of an
//!   interval — the elements a relation cannot push further inside it.
//! - [`join_radical`] / [`meet_dual_radical`] compute the canonical
//!   radical of an interval in closed form for expanded transitive
//!   relations, verifying uniqueness when the relation is contiguous.
//! - [`radical_maps`] packages the radical and dual radical of every
//!   element into [`LatticeMap`]s when the relation admits them, and
//!   [`sigma_s`] produces the hull maps that exist unconditionally.
//! - [`LatticeMap::classify`] sorts a map into the interpolating,
//!   monotone and join/meet-homomorphic closure classes; maps and
//!   relations convert into each other via [`LatticeMap::induced_rel`]
//!   and [`radical_maps`].
//! - [`decompose`] slices the host into the disjoint intervals that a
//!   doubly contiguous expanded order defines, and [`rel_from_blocks`]
//!   rebuilds the relation from any such slicing.
//! - [`automorphism_invariance`] verifies that automorphisms fixing an
//!   element also fix all the canonical elements attached to it.

mod decompose;
mod error;
mod invariance;
mod map;
mod radicals;

pub use decompose::{decompose, rel_from_blocks, Decomposition};
pub use error::RadicalError;
pub use invariance::{automorphism_invariance, InvarianceReport};
pub use map::{all_maps, LatticeMap, MapJson, MapProfile};
pub use radicals::{
    dual_radicals_in, join_radical, meet_dual_radical, radical_maps, radicals_in, sigma_s,
};
