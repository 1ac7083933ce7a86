//! Interval decompositions of doubly contiguous expanded orders.
//!
//! A relation that is contiguous, expanded and transitive in both
//! directions slices its host into disjoint intervals `[p(λ), λ]`, one per
//! radical fixpoint `λ`, and the relation is exactly the order restricted
//! to the slices. [`decompose`] produces the slices (and proves the
//! claimed structure on the way); [`rel_from_blocks`] goes the other way,
//! turning any disjoint interval cover into such a relation.

use std::sync::Arc;

use latrad_core::{ElemSet, Lattice};
use latrad_rel::Rel;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::RadicalError;
use crate::radicals::radical_maps;

/// The interval slices induced by a doubly contiguous expanded order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    host: Arc<Lattice>,
    blocks: Vec<(usize, usize)>,
    radical_fixpoints: ElemSet,
    dual_fixpoints: ElemSet,
}

impl Decomposition {
    /// The slices as `(bottom, top)` pairs, ordered by their tops.
    pub fn blocks(&self) -> &[(usize, usize)] {
        &self.blocks
    }

    /// Elements equal to their own radical (the block tops).
    pub fn radical_fixpoints(&self) -> ElemSet {
        self.radical_fixpoints
    }

    /// Elements equal to their own dual radical (the block bottoms).
    pub fn dual_fixpoints(&self) -> ElemSet {
        self.dual_fixpoints
    }

    pub fn host(&self) -> &Arc<Lattice> {
        &self.host
    }

    /// The slice containing `x`.
    pub fn block_of(&self, x: usize) -> (usize, usize) {
        *self
            .blocks
            .iter()
            .find(|&&(lo, hi)| self.host.leq(lo, x) && self.host.leq(x, hi))
            .expect("blocks cover the host")
    }
}

impl Serialize for Decomposition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let id = |x: usize| self.host.id(x).to_owned();
        let blocks: Vec<(String, String)> =
            self.blocks.iter().map(|&(lo, hi)| (id(lo), id(hi))).collect();
        let tops: Vec<String> = self.radical_fixpoints.iter().map(id).collect();
        let bottoms: Vec<String> = self.dual_fixpoints.iter().map(id).collect();
        let mut s = serializer.serialize_struct("Decomposition", 3)?;
        s.serialize_field("blocks", &blocks)?;
        s.serialize_field("radical_fixpoints", &tops)?;
        s.serialize_field("dual_fixpoints", &bottoms)?;
        s.end()
    }
}

/// Slices the host along the given relation.
///
/// Fails with [`RadicalError::NotTTOrder`] unless the relation is
/// contiguous, expanded and transitive in both directions. On success the
/// result is verified to be a genuine partition matching the relation:
/// two elements relate exactly when they are comparable within one slice,
/// and the radical maps exchange the slice ends bijectively.
pub fn decompose(rel: &Rel) -> Result<Decomposition, RadicalError> {
    let profile = rel.classify()?;
    if !profile.tt_order {
        return Err(RadicalError::NotTTOrder);
    }
    let host = rel.host();
    let (r, p) = radical_maps(rel)?;
    let r = r.expect("a doubly contiguous expanded order has a radical map");
    let p = p.expect("a doubly contiguous expanded order has a dual radical map");

    let q_r = r.fixpoints();
    let q_p = p.fixpoints();
    let blocks: Vec<(usize, usize)> = q_r.iter().map(|top| (p.apply(top), top)).collect();

    // The slices partition the host…
    let mut covered = ElemSet::EMPTY;
    for &(lo, hi) in &blocks {
        let slice = host.interval(lo, hi).expect("slice ends are comparable");
        assert!(
            !covered.intersects(slice),
            "slices of a doubly contiguous expanded order cannot overlap"
        );
        covered = covered.union(slice);
    }
    assert_eq!(covered, host.all(), "slices must cover the host");

    // …and the relation is comparability within a slice.
    for a in 0..host.n() {
        for b in 0..host.n() {
            let same_slice = host.leq(a, b) && r.apply(a) == r.apply(b);
            assert_eq!(
                rel.related(a, b),
                same_slice,
                "the relation must match in-slice comparability"
            );
        }
    }

    // The maps exchange slice ends as mutually inverse bijections. (They
    // need not preserve comparability between different slices, so no
    // stronger claim is made.)
    for top in q_r.iter() {
        let bottom = p.apply(top);
        assert!(q_p.contains(bottom));
        assert_eq!(r.apply(bottom), top);
    }
    for bottom in q_p.iter() {
        let top = r.apply(bottom);
        assert!(q_r.contains(top));
        assert_eq!(p.apply(top), bottom);
    }

    Ok(Decomposition {
        host: host.clone(),
        blocks,
        radical_fixpoints: q_r,
        dual_fixpoints: q_p,
    })
}

/// Builds the relation whose slices are the given intervals.
///
/// The intervals must be pairwise disjoint and cover the host; the
/// resulting relation relates `a` to `b` exactly when both sit in one
/// interval with `a ≤ b`. The output is always a doubly contiguous
/// expanded order (this is checked).
pub fn rel_from_blocks(
    host: &Arc<Lattice>,
    blocks: &[(usize, usize)],
) -> Result<Rel, RadicalError> {
    let n = host.n();
    let mut covered = ElemSet::EMPTY;
    let mut rows: Vec<ElemSet> = (0..n).map(ElemSet::singleton).collect();
    for &(lo, hi) in blocks {
        let slice = host.interval(lo, hi)?;
        if covered.intersects(slice) {
            let overlap = covered.inter(slice).first().expect("nonempty overlap");
            return Err(RadicalError::BlocksOverlap(
                format!("{}, {}", host.id(lo), host.id(hi)),
                host.id(overlap).to_owned(),
            ));
        }
        covered = covered.union(slice);
        for x in slice.iter() {
            rows[x] = rows[x].union(host.up_set(x).inter(slice));
        }
    }
    if covered != host.all() {
        let missing = host.all().minus(covered).first().expect("nonempty gap");
        return Err(RadicalError::BlocksIncomplete(host.id(missing).to_owned()));
    }
    let rel = Rel::from_rows(host.clone(), rows)
        .expect("in-slice comparability respects the order");
    assert!(
        rel.classify()?.tt_order,
        "a disjoint interval cover must induce a doubly contiguous expanded order"
    );
    Ok(rel)
}

#[cfg(test)]
mod tests {
    use latrad_rel::BuiltinRel;

    use super::*;

    fn chain4() -> Arc<Lattice> {
        Arc::new(
            Lattice::from_covers(
                vec!["0".into(), "a".into(), "b".into(), "1".into()],
                &[("0", "a"), ("a", "b"), ("b", "1")],
            )
            .unwrap(),
        )
    }

    #[test]
    fn equality_decomposes_into_singletons() {
        let host = chain4();
        let eq = Rel::builtin(host.clone(), BuiltinRel::Eq);
        let d = decompose(&eq).unwrap();
        assert_eq!(d.blocks(), &[(0, 0), (1, 1), (2, 2), (3, 3)]);
        assert_eq!(d.radical_fixpoints(), host.all());
    }

    #[test]
    fn order_relation_is_one_block() {
        let host = chain4();
        let leq = Rel::builtin(host.clone(), BuiltinRel::Leq);
        let d = decompose(&leq).unwrap();
        assert_eq!(d.blocks(), &[(0, 3)]);
        assert_eq!(d.block_of(2), (0, 3));
    }

    #[test]
    fn slices_roundtrip_through_the_relation() {
        let host = chain4();
        let rel = rel_from_blocks(&host, &[(0, 1), (2, 3)]).unwrap();
        assert!(rel.related(0, 1) && rel.related(2, 3));
        assert!(!rel.related(1, 2) && !rel.related(0, 3));
        let d = decompose(&rel).unwrap();
        assert_eq!(d.blocks(), &[(0, 1), (2, 3)]);
    }

    #[test]
    fn bad_block_lists_are_rejected() {
        let host = chain4();
        assert!(matches!(
            rel_from_blocks(&host, &[(0, 2), (1, 3)]),
            Err(RadicalError::BlocksOverlap(_, _))
        ));
        assert_eq!(
            rel_from_blocks(&host, &[(0, 1)]).unwrap_err(),
            RadicalError::BlocksIncomplete("b".into())
        );
        assert!(matches!(
            rel_from_blocks(&Arc::new(host.dual()), &[(0, 3)]),
            Err(RadicalError::Lattice(_))
        ));
    }

    #[test]
    fn non_tt_relations_are_refused() {
        let host = chain4();
        // Relating 0 to b while skipping a breaks contiguity.
        let skipping = Rel::from_pairs(host.clone(), &[(0, 2)]).unwrap();
        match decompose(&skipping) {
            Err(RadicalError::NotTTOrder) => {}
            other => panic!("expected a refusal, got {other:?}"),
        }
    }

    #[test]
    fn serialization_names_elements() {
        let host = chain4();
        let d = decompose(&rel_from_blocks(&host, &[(0, 1), (2, 3)]).unwrap()).unwrap();
        let v = serde_json::to_value(&d).unwrap();
        assert_eq!(v["blocks"][0][0], "0");
        assert_eq!(v["blocks"][1][1], "1");
        assert_eq!(v["radical_fixpoints"], serde_json::json!(["a", "1"]));
    }
}
