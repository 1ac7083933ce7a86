//! Closure maps on Boolean lattices as topologies.
//!
//! When the host lattice is Boolean — the lattice of all subsets of its
//! atoms — a closure map that preserves joins and fixes the bottom is
//! exactly a topological closure operator, and its fixpoints are the
//! closed sets of the topology. Both directions of that correspondence
//! are implemented and check each other.

use latrad_core::Lattice;
use latrad_radical::LatticeMap;

use crate::error::ClosureError;
use crate::family::SubsetFamily;

/// Whether the host is a Boolean lattice: distributive and complemented.
pub fn is_boolean(host: &Lattice) -> bool {
    let n = host.n();
    let distributive = (0..n).all(|x| {
        (0..n).all(|y| {
            (0..n).all(|z| {
                host.meet(x, host.join(y, z)) == host.join(host.meet(x, y), host.meet(x, z))
            })
        })
    });
    let complemented = (0..n).all(|x| {
        (0..n).any(|y| host.meet(x, y) == host.bottom() && host.join(x, y) == host.top())
    });
    distributive && complemented
}

/// The closed sets of the topology whose closure operator is `map`.
///
/// The map must live on a Boolean host, preserve joins on top of being a
/// closure map, and fix the bottom. The resulting family is checked to
/// satisfy the closed-set axioms: it contains the empty set and the whole
/// space and is stable under binary unions and all intersections.
pub fn closed_sets_of(map: &LatticeMap) -> Result<SubsetFamily, ClosureError> {
    let host = map.host();
    if !is_boolean(host) {
        return Err(ClosureError::NotBoolean);
    }
    let profile = map.classify();
    if !profile.t_radical {
        return Err(ClosureError::NotTRadical);
    }
    if map.apply(host.bottom()) != host.bottom() {
        return Err(ClosureError::EmptyNotFixed);
    }
    let family = SubsetFamily::from_fixpoints(map)?;
    let members = family.members();
    assert!(
        family.is_enveloping(),
        "closed-set families support least closed supersets"
    );
    assert!(
        members.contains(host.bottom()) && members.contains(host.top()),
        "closed sets include the empty set and the whole space"
    );
    assert!(
        family.is_sublattice(),
        "closed sets are stable under binary unions and all intersections"
    );
    Ok(family)
}

/// The closure operator of the topology whose closed sets are `family`.
///
/// The family must live on a Boolean host, be enveloping and stable
/// under binary unions, and contain the empty set. The resulting map is
/// checked to be a join-preserving closure map that fixes the bottom,
/// and the closed sets recovered from it are checked to be the input.
pub fn closure_operator_of(family: &SubsetFamily) -> Result<LatticeMap, ClosureError> {
    let host = family.host().clone();
    if !is_boolean(&host) {
        return Err(ClosureError::NotBoolean);
    }
    if !family.is_enveloping() {
        return Err(ClosureError::WrongKind {
            expected: "enveloping",
        });
    }
    if !family.is_sublattice() {
        return Err(ClosureError::WrongKind {
            expected: "closed under binary unions",
        });
    }
    if !family.members().contains(host.bottom()) {
        return Err(ClosureError::EmptyNotFixed);
    }
    let map = family.envelope_map()?;
    assert!(
        map.classify().t_radical,
        "closure operators of topologies preserve joins"
    );
    assert_eq!(
        map.apply(host.bottom()),
        host.bottom(),
        "closure operators of topologies fix the empty set"
    );
    let back = closed_sets_of(&map)?;
    assert_eq!(
        back.members(),
        family.members(),
        "round-tripping a closed-set family through its operator is lossless"
    );
    Ok(map)
}
