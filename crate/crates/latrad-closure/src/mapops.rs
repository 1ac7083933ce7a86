//! The lattice of maps on a host, and iterated superposition of closure
//! maps.

use std::sync::Arc;

use latrad_core::{ElemSet, Lattice};
use latrad_radical::LatticeMap;
use latrad_rel::Rel;

use crate::error::ClosureError;
use crate::family::SubsetFamily;

/// One stage of an iterated superposition run.
#[derive(Clone, Debug)]
pub enum Step {
    /// A stage of a map superposition.
    Map(LatticeMap),
    /// A stage of a relation superposition.
    Rel(Rel),
}

/// The history of an iterated superposition: every distinct stage in the
/// order it was reached, ending in the stage that no generator changes.
#[derive(Clone, Debug)]
pub struct SuperpositionTrace {
    steps: Vec<Step>,
    fixpoint: Step,
}

impl SuperpositionTrace {
    pub(crate) fn of_maps(steps: Vec<LatticeMap>, fixpoint: LatticeMap) -> SuperpositionTrace {
        SuperpositionTrace {
            steps: steps.into_iter().map(Step::Map).collect(),
            fixpoint: Step::Map(fixpoint),
        }
    }

    pub(crate) fn of_rels(steps: Vec<Rel>, fixpoint: Rel) -> SuperpositionTrace {
        SuperpositionTrace {
            steps: steps.into_iter().map(Step::Rel).collect(),
            fixpoint: Step::Rel(fixpoint),
        }
    }

    /// Every distinct stage, starting from the seed.
    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// The stable final stage.
    pub fn fixpoint(&self) -> &Step {
        &self.fixpoint
    }

    /// The final stage of a map superposition.
    pub fn fixpoint_map(&self) -> Option<&LatticeMap> {
        match &self.fixpoint {
            Step::Map(map) => Some(map),
            Step::Rel(_) => None,
        }
    }

    /// The final stage of a relation superposition.
    pub fn fixpoint_rel(&self) -> Option<&Rel> {
        match &self.fixpoint {
            Step::Rel(rel) => Some(rel),
            Step::Map(_) => None,
        }
    }
}

fn same_host(a: &Arc<Lattice>, b: &Arc<Lattice>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

fn ensure_hosts(host: &Arc<Lattice>, maps: &[LatticeMap]) -> Result<(), ClosureError> {
    if maps.iter().any(|m| !same_host(host, m.host())) {
        return Err(ClosureError::HostMismatch);
    }
    Ok(())
}

/// Whether `f` lies below `g` pointwise.
pub fn map_leq(f: &LatticeMap, g: &LatticeMap) -> Result<bool, ClosureError> {
    if !same_host(f.host(), g.host()) {
        return Err(ClosureError::HostMismatch);
    }
    Ok((0..f.host().n()).all(|x| f.host().leq(f.apply(x), g.apply(x))))
}

/// The pointwise join of a set of maps; the empty join is the constant
/// bottom map, the least element of the map lattice.
pub fn pointwise_join(
    host: &Arc<Lattice>,
    maps: &[LatticeMap],
) -> Result<LatticeMap, ClosureError> {
    ensure_hosts(host, maps)?;
    let table: Vec<usize> = (0..host.n())
        .map(|x| host.join_set(maps.iter().map(|m| m.apply(x)).collect()))
        .collect();
    Ok(LatticeMap::from_table(host.clone(), table).expect("joins stay inside the host"))
}

/// The pointwise meet of a set of maps; the empty meet is the constant
/// top map, the greatest element of the map lattice.
pub fn pointwise_meet(
    host: &Arc<Lattice>,
    maps: &[LatticeMap],
) -> Result<LatticeMap, ClosureError> {
    ensure_hosts(host, maps)?;
    let table: Vec<usize> = (0..host.n())
        .map(|x| host.meet_set(maps.iter().map(|m| m.apply(x)).collect()))
        .collect();
    Ok(LatticeMap::from_table(host.clone(), table).expect("meets stay inside the host"))
}

/// Closes a subset under binary meets and adds the top, producing the
/// smallest enveloping family containing the subset.
pub(crate) fn meet_closure(host: &Lattice, start: ElemSet) -> ElemSet {
    let mut closed = start.with(host.top());
    loop {
        let mut next = closed;
        let list: Vec<usize> = closed.iter().collect();
        for (i, &a) in list.iter().enumerate() {
            for &b in &list[i + 1..] {
                next.insert(host.meet(a, b));
            }
        }
        if next == closed {
            return closed;
        }
        closed = next;
    }
}

/// Closes a subset under binary joins and adds the bottom, producing the
/// smallest inscribing family containing the subset.
pub(crate) fn join_closure(host: &Lattice, start: ElemSet) -> ElemSet {
    let mut closed = start.with(host.bottom());
    loop {
        let mut next = closed;
        let list: Vec<usize> = closed.iter().collect();
        for (i, &a) in list.iter().enumerate() {
            for &b in &list[i + 1..] {
                next.insert(host.join(a, b));
            }
        }
        if next == closed {
            return closed;
        }
        closed = next;
    }
}

/// All meets of one fixpoint chosen from each map's fixpoint family.
fn selection_meets(host: &Lattice, fixpoint_sets: &[ElemSet]) -> ElemSet {
    let mut meets = match fixpoint_sets.first() {
        Some(&first) => first,
        None => return ElemSet::singleton(host.top()),
    };
    for &fixes in &fixpoint_sets[1..] {
        let mut next = ElemSet::EMPTY;
        for a in meets.iter() {
            for b in fixes.iter() {
                next.insert(host.meet(a, b));
            }
        }
        meets = next;
    }
    meets
}

/// All joins of one fixpoint chosen from each map's fixpoint family.
fn selection_joins(host: &Lattice, fixpoint_sets: &[ElemSet]) -> ElemSet {
    let mut joins = match fixpoint_sets.first() {
        Some(&first) => first,
        None => return ElemSet::singleton(host.bottom()),
    };
    for &fixes in &fixpoint_sets[1..] {
        let mut next = ElemSet::EMPTY;
        for a in joins.iter() {
            for b in fixes.iter() {
                next.insert(host.join(a, b));
            }
        }
        joins = next;
    }
    joins
}

/// The meet of a set of closure maps, which is again a closure map.
///
/// Its fixpoints are checked two independent ways: they must equal the
/// union of the input fixpoint families together with all meets of
/// selections from them, and they must be the smallest enveloping family
/// containing that union.
pub fn rad_meet(host: &Arc<Lattice>, maps: &[LatticeMap]) -> Result<LatticeMap, ClosureError> {
    ensure_hosts(host, maps)?;
    for (i, map) in maps.iter().enumerate() {
        if !map.classify().radical {
            return Err(ClosureError::NotRadical(i));
        }
    }
    let meet = pointwise_meet(host, maps)?;
    assert!(
        meet.classify().radical,
        "pointwise meets of closure maps are closure maps"
    );
    let fixpoint_sets: Vec<ElemSet> = maps.iter().map(|m| m.fixpoints()).collect();
    let union = fixpoint_sets
        .iter()
        .fold(ElemSet::EMPTY, |acc, &f| acc.union(f));
    let expected = union.union(selection_meets(host, &fixpoint_sets));
    assert_eq!(
        meet.fixpoints(),
        expected,
        "fixpoints of the meet are the input fixpoints plus their selection meets"
    );
    assert_eq!(
        meet.fixpoints(),
        meet_closure(host, union),
        "fixpoints of the meet form the smallest enveloping family over the inputs"
    );
    Ok(meet)
}

/// The join of a set of kernel maps; the order dual of [`rad_meet`].
pub fn dual_rad_join(host: &Arc<Lattice>, maps: &[LatticeMap]) -> Result<LatticeMap, ClosureError> {
    ensure_hosts(host, maps)?;
    for (i, map) in maps.iter().enumerate() {
        if !map.classify().dual_radical {
            return Err(ClosureError::NotRadical(i));
        }
    }
    let join = pointwise_join(host, maps)?;
    assert!(
        join.classify().dual_radical,
        "pointwise joins of kernel maps are kernel maps"
    );
    let fixpoint_sets: Vec<ElemSet> = maps.iter().map(|m| m.fixpoints()).collect();
    let union = fixpoint_sets
        .iter()
        .fold(ElemSet::EMPTY, |acc, &f| acc.union(f));
    let expected = union.union(selection_joins(host, &fixpoint_sets));
    assert_eq!(
        join.fixpoints(),
        expected,
        "fixpoints of the join are the input fixpoints plus their selection joins"
    );
    assert_eq!(
        join.fixpoints(),
        join_closure(host, union),
        "fixpoints of the join form the smallest inscribing family over the inputs"
    );
    Ok(join)
}

/// One round-robin superposition run; returns every distinct stage and
/// the stable limit.
fn superpose(maps: &[LatticeMap], seed: LatticeMap) -> (Vec<LatticeMap>, LatticeMap) {
    let mut steps = vec![seed.clone()];
    let mut current = seed;
    loop {
        let mut stable = true;
        for map in maps {
            let next = map
                .compose(&current)
                .expect("superposition inputs share a host");
            if next != current {
                steps.push(next.clone());
                current = next;
                stable = false;
            }
        }
        if stable {
            return (steps, current);
        }
    }
}

/// The join of a set of closure maps inside the closure maps, computed
/// by composing the maps round-robin until no generator changes the
/// result.
///
/// The limit is checked against an independent description: it must be
/// the hull map of the intersection of the input fixpoint families, a
/// description that does not mention the iteration order at all. A
/// second run with the generators reversed must reach the same limit.
/// The empty join is the identity, the least closure map.
pub fn rad_join(
    host: &Arc<Lattice>,
    maps: &[LatticeMap],
) -> Result<SuperpositionTrace, ClosureError> {
    ensure_hosts(host, maps)?;
    for (i, map) in maps.iter().enumerate() {
        if !map.classify().radical {
            return Err(ClosureError::NotRadical(i));
        }
    }
    if maps.is_empty() {
        let identity = LatticeMap::identity(host.clone());
        return Ok(SuperpositionTrace::of_maps(vec![], identity));
    }
    let (steps, limit) = superpose(maps, maps[0].clone());

    let common = maps
        .iter()
        .fold(ElemSet::full(host.n()), |acc, m| acc.inter(m.fixpoints()));
    let family = SubsetFamily::enveloping(host.clone(), common)
        .expect("intersections of closure-map fixpoint families are enveloping");
    let hull = family.envelope_map()?;
    assert!(
        limit == hull,
        "the superposition limit is the hull map of the common fixpoints"
    );

    let reversed: Vec<LatticeMap> = maps.iter().rev().cloned().collect();
    let (_, limit_reversed) = superpose(&reversed, reversed[0].clone());
    assert!(
        limit == limit_reversed,
        "the superposition limit does not depend on generator order"
    );

    Ok(SuperpositionTrace::of_maps(steps, limit))
}

/// The meet of a set of kernel maps inside the kernel maps; the order
/// dual of [`rad_join`]. The empty meet is the identity, the greatest
/// kernel map.
pub fn dual_rad_meet(
    host: &Arc<Lattice>,
    maps: &[LatticeMap],
) -> Result<SuperpositionTrace, ClosureError> {
    ensure_hosts(host, maps)?;
    for (i, map) in maps.iter().enumerate() {
        if !map.classify().dual_radical {
            return Err(ClosureError::NotRadical(i));
        }
    }
    if maps.is_empty() {
        let identity = LatticeMap::identity(host.clone());
        return Ok(SuperpositionTrace::of_maps(vec![], identity));
    }
    let (steps, limit) = superpose(maps, maps[0].clone());

    let common = maps
        .iter()
        .fold(ElemSet::full(host.n()), |acc, m| acc.inter(m.fixpoints()));
    let family = SubsetFamily::inscribing(host.clone(), common)
        .expect("intersections of kernel-map fixpoint families are inscribing");
    let kernel = family.kernel_map()?;
    assert!(
        limit == kernel,
        "the superposition limit is the kernel map of the common fixpoints"
    );

    let reversed: Vec<LatticeMap> = maps.iter().rev().cloned().collect();
    let (_, limit_reversed) = superpose(&reversed, reversed[0].clone());
    assert!(
        limit == limit_reversed,
        "the superposition limit does not depend on generator order"
    );

    Ok(SuperpositionTrace::of_maps(steps, limit))
}
