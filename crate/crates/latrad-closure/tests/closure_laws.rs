//! Law-level checks for hull and kernel constructions: extremality of the
//! relation operators against exhaustive enumeration, superposition limits,
//! the family/map correspondences and the topology bridge.

use std::sync::Arc;

use latrad_closure::{
    bar, closed_sets_of, closure_operator_of, gd_witness, map_leq, pointwise_meet, rad_join,
    rad_meet, tilde, ClosureError, FamilyKind, RefOp, SubsetFamily,
};
use latrad_core::{ElemSet, Lattice};
use latrad_radical::{all_maps, LatticeMap};
use latrad_rel::{all_rels, BuiltinRel, PropertyProfile, Rel};

fn chain(n: usize) -> Arc<Lattice> {
    let ids: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let covers: Vec<(String, String)> = (1..n).map(|i| ((i - 1).to_string(), i.to_string())).collect();
    Arc::new(Lattice::from_covers(ids, &covers).unwrap())
}

fn diamond() -> Arc<Lattice> {
    Arc::new(
        Lattice::from_covers(
            vec!["0".into(), "a".into(), "b".into(), "1".into()],
            &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")],
        )
        .unwrap(),
    )
}

fn m3() -> Arc<Lattice> {
    Arc::new(
        Lattice::from_covers(
            vec!["0".into(), "a".into(), "b".into(), "c".into(), "1".into()],
            &[
                ("0", "a"),
                ("0", "b"),
                ("0", "c"),
                ("a", "1"),
                ("b", "1"),
                ("c", "1"),
            ],
        )
        .unwrap(),
    )
}

fn n5() -> Arc<Lattice> {
    Arc::new(
        Lattice::from_covers(
            vec!["0".into(), "a".into(), "b".into(), "c".into(), "1".into()],
            &[("0", "a"), ("a", "1"), ("0", "b"), ("b", "c"), ("c", "1")],
        )
        .unwrap(),
    )
}

/// The lattice of subsets of three points, ordered by inclusion.
fn cube() -> Arc<Lattice> {
    let ids = ["e", "x", "y", "z", "xy", "xz", "yz", "xyz"];
    let bits = [0b000u8, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111];
    let mut covers = Vec::new();
    for (i, &a) in bits.iter().enumerate() {
        for (j, &b) in bits.iter().enumerate() {
            if a & b == a && (b ^ a).count_ones() == 1 {
                covers.push((ids[i], ids[j]));
            }
        }
    }
    Arc::new(Lattice::from_covers(ids.iter().map(|s| s.to_string()).collect(), &covers).unwrap())
}

fn set(elems: &[usize]) -> ElemSet {
    let mut s = ElemSet::EMPTY;
    for &e in elems {
        s.insert(e);
    }
    s
}

fn all_subsets(host: &Lattice) -> impl Iterator<Item = ElemSet> {
    (0..(1u128 << host.n())).map(ElemSet::from_bits)
}

/// The property each operator closes under (for hulls) or selects (for
/// cores). The chain closures target transitivity: on a finite host a
/// relation is stable under chain completion exactly when it is
/// transitive.
fn op_property(op: RefOp, p: &PropertyProfile) -> bool {
    match op {
        RefOp::ChainUp | RefOp::ChainDown | RefOp::Order => p.transitive,
        RefOp::ContiguousUp => p.up_contiguous,
        RefOp::ContiguousDown => p.down_contiguous,
        RefOp::ExpandedUp => p.up_expanded,
        RefOp::ExpandedDown => p.down_expanded,
        RefOp::JoinStableHull | RefOp::JoinStableCore => p.h_relation,
        RefOp::MeetStableHull | RefOp::MeetStableCore => p.dual_h_relation,
    }
}

#[test]
fn hull_operators_are_least_among_property_holders() {
    for host in [chain(3), chain(4), diamond()] {
        let rels: Vec<Rel> = all_rels(&host).collect();
        for rel in &rels {
            for op in RefOp::ALL.into_iter().filter(|op| op.is_hull()) {
                let closed = op.apply(rel);
                let profile = closed.classify().unwrap();
                assert!(op_property(op, &profile), "{} closes its property", op.name());
                assert!(rel.is_subrel(&closed).unwrap());
                assert_eq!(op.apply(&closed), closed, "{} is idempotent", op.name());
                for other in &rels {
                    let op_holds = op_property(op, &other.classify().unwrap());
                    if op_holds && rel.is_subrel(other).unwrap() {
                        assert!(
                            closed.is_subrel(other).unwrap(),
                            "{} lies under every property holder over the input",
                            op.name()
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn core_operators_are_greatest_among_property_holders() {
    for host in [chain(3), chain(4), diamond()] {
        let rels: Vec<Rel> = all_rels(&host).collect();
        for rel in &rels {
            for op in [RefOp::JoinStableCore, RefOp::MeetStableCore] {
                let core = op.apply(rel);
                let profile = core.classify().unwrap();
                assert!(op_property(op, &profile));
                assert!(core.is_subrel(rel).unwrap());
                assert_eq!(op.apply(&core), core);
                for other in &rels {
                    let op_holds = op_property(op, &other.classify().unwrap());
                    if op_holds && other.is_subrel(rel).unwrap() {
                        assert!(
                            other.is_subrel(&core).unwrap(),
                            "{} lies over every property holder inside the input",
                            op.name()
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn operators_are_monotone() {
    for host in [chain(3), diamond()] {
        let rels: Vec<Rel> = all_rels(&host).collect();
        for r1 in &rels {
            for r2 in &rels {
                if !r1.is_subrel(r2).unwrap() {
                    continue;
                }
                for op in RefOp::ALL {
                    assert!(
                        op.apply(r1).is_subrel(&op.apply(r2)).unwrap(),
                        "{} preserves inclusion",
                        op.name()
                    );
                }
            }
        }
    }
}

#[test]
fn tilde_is_the_least_doubly_closed_order() {
    for host in [chain(3), chain(4), diamond()] {
        let rels: Vec<Rel> = all_rels(&host).collect();
        for rel in &rels {
            let trace = tilde(rel);
            let limit = trace.fixpoint_rel().unwrap();
            // Stages grow monotonically from the seed.
            for pair in trace.steps().windows(2) {
                match (&pair[0], &pair[1]) {
                    (latrad_closure::Step::Rel(a), latrad_closure::Step::Rel(b)) => {
                        assert!(a.is_subrel(b).unwrap())
                    }
                    _ => unreachable!("relation superpositions only hold relations"),
                }
            }
            let profile = rel.classify().unwrap();
            if profile.tt_order {
                assert_eq!(limit, rel, "doubly closed orders are fixed");
            }
            for other in &rels {
                if other.classify().unwrap().tt_order && rel.is_subrel(other).unwrap() {
                    assert!(
                        limit.is_subrel(other).unwrap(),
                        "the combined closure lies under every doubly closed order over the input"
                    );
                }
            }
        }
    }
}

#[test]
fn bar_stays_inside_tilde_and_fixes_orders() {
    for host in [chain(3), chain(4), diamond(), m3()] {
        for rel in all_rels(&host) {
            let bar_limit = bar(&rel).fixpoint_rel().unwrap().clone();
            let tilde_limit = tilde(&rel).fixpoint_rel().unwrap().clone();
            assert!(bar_limit.is_subrel(&tilde_limit).unwrap());
            if bar_limit.classify().unwrap().tt_order {
                assert_eq!(bar_limit, tilde_limit);
            }
            // On a finite host the chain-closure limit is the transitive
            // closure, so orders — expanded or not — are already stable.
            assert_eq!(bar_limit == rel, rel.classify().unwrap().transitive);
        }
    }
}

#[test]
fn bar_can_end_up_neither_contiguous_nor_expanded() {
    // A bare jump across a middle element survives the chain closures
    // without becoming contiguous.
    let host = chain(3);
    let jump = Rel::from_pairs(host, &[(0, 2)]).unwrap();
    let limit = bar(&jump).fixpoint_rel().unwrap().clone();
    assert_eq!(limit, jump);
    let profile = limit.classify().unwrap();
    assert!(!profile.up_contiguous);
    assert!(!profile.down_contiguous);

    // Both atoms of the diamond jumping to the top forms an order whose
    // chain-closure limit is itself, yet the top's column is not
    // meet-closed.
    let host = diamond();
    let atoms_up = Rel::from_pairs(host, &[(1, 3), (2, 3)]).unwrap();
    let limit = bar(&atoms_up).fixpoint_rel().unwrap().clone();
    assert_eq!(limit, atoms_up);
    assert!(!limit.classify().unwrap().down_expanded);
}

#[test]
fn join_and_meet_stable_relations_superpose_to_doubly_stable_orders() {
    // Over any finite host, a relation stable under joint translations in
    // both directions has a chain-closure limit that is already the least
    // doubly closed order and is translation-stable on top of it.
    for host in [chain(4), diamond(), m3(), n5()] {
        for rel in all_rels(&host) {
            if !rel.classify().unwrap().hh_relation {
                continue;
            }
            let bar_limit = bar(&rel).fixpoint_rel().unwrap().clone();
            let tilde_limit = tilde(&rel).fixpoint_rel().unwrap().clone();
            assert_eq!(bar_limit, tilde_limit);
            assert!(bar_limit.classify().unwrap().rr_order);
        }
    }
}

#[test]
fn chain_hosts_preserve_directional_contiguity_in_the_limit() {
    let host = chain(4);
    for rel in all_rels(&host) {
        let profile = rel.classify().unwrap();
        let limit = bar(&rel).fixpoint_rel().unwrap().clone();
        let limit_profile = limit.classify().unwrap();
        if profile.up_contiguous {
            assert!(limit_profile.up_contiguous);
        }
        if profile.down_contiguous {
            assert!(limit_profile.down_contiguous);
        }
    }
}

#[test]
fn relation_families_close_under_the_operations_their_kind_allows() {
    let host = diamond();
    let rels: Vec<Rel> = all_rels(&host).collect();
    for r1 in &rels {
        let p1 = r1.classify().unwrap();
        for r2 in &rels {
            let p2 = r2.classify().unwrap();
            let meet = r1.meet(r2).unwrap().classify().unwrap();
            let join = r1.join(r2).unwrap().classify().unwrap();

            // Contiguity and translation stability survive both meets and
            // joins of relations; transitivity and expandedness survive
            // meets only.
            if p1.up_contiguous && p2.up_contiguous {
                assert!(meet.up_contiguous && join.up_contiguous);
            }
            if p1.down_contiguous && p2.down_contiguous {
                assert!(meet.down_contiguous && join.down_contiguous);
            }
            if p1.h_relation && p2.h_relation {
                assert!(meet.h_relation && join.h_relation);
            }
            if p1.dual_h_relation && p2.dual_h_relation {
                assert!(meet.dual_h_relation && join.dual_h_relation);
            }
            if p1.transitive && p2.transitive {
                assert!(meet.transitive);
            }
            if p1.up_expanded && p2.up_expanded {
                assert!(meet.up_expanded);
            }
            if p1.down_expanded && p2.down_expanded {
                assert!(meet.down_expanded);
            }
        }
    }

    // Joins do not preserve transitivity or expandedness; two frozen
    // counterexamples.
    let host = chain(3);
    let lower = Rel::from_pairs(host.clone(), &[(0, 1)]).unwrap();
    let upper = Rel::from_pairs(host, &[(1, 2)]).unwrap();
    let join = lower.join(&upper).unwrap();
    assert!(!join.classify().unwrap().transitive);

    let host = diamond();
    let left = Rel::from_pairs(host.clone(), &[(0, 1)]).unwrap();
    let right = Rel::from_pairs(host, &[(0, 2)]).unwrap();
    let join = left.join(&right).unwrap();
    assert!(!join.classify().unwrap().up_expanded);
}

#[test]
fn family_counts_match_map_classes() {
    for host in [chain(3), chain(4), diamond(), m3()] {
        let mut enveloping = 0usize;
        let mut enveloping_sublattices = 0usize;
        let mut inscribing = 0usize;
        let mut inscribing_sublattices = 0usize;
        for members in all_subsets(&host) {
            let family = match SubsetFamily::new(host.clone(), members) {
                Ok(family) => family,
                Err(_) => continue,
            };
            if family.is_enveloping() {
                enveloping += 1;
                if family.is_sublattice() {
                    enveloping_sublattices += 1;
                }
            }
            if family.is_inscribing() {
                inscribing += 1;
                if family.is_sublattice() {
                    inscribing_sublattices += 1;
                }
            }
        }

        let mut radical = 0usize;
        let mut t_radical = 0usize;
        let mut dual_radical = 0usize;
        let mut dual_t_radical = 0usize;
        for map in all_maps(&host) {
            let profile = map.classify();
            if profile.radical {
                radical += 1;
                // Exercise the fixpoint round trip on every closure map.
                let family = SubsetFamily::from_fixpoints(&map).unwrap();
                assert_eq!(family.members(), map.fixpoints());
            }
            if profile.t_radical {
                t_radical += 1;
            }
            if profile.dual_radical {
                dual_radical += 1;
            }
            if profile.dual_t_radical {
                dual_t_radical += 1;
            }
        }

        assert_eq!(enveloping, radical, "families with least majorants pair with closure maps");
        assert_eq!(enveloping_sublattices, t_radical);
        assert_eq!(inscribing, dual_radical);
        assert_eq!(inscribing_sublattices, dual_t_radical);
    }
}

/// Every closure map on the host, via the family correspondence.
fn closure_maps(host: &Arc<Lattice>) -> Vec<LatticeMap> {
    all_subsets(host)
        .filter_map(|members| SubsetFamily::enveloping(host.clone(), members).ok())
        .map(|family| family.envelope_map().unwrap())
        .collect()
}

#[test]
fn superposition_join_is_the_least_upper_bound_among_closure_maps() {
    for host in [chain(4), diamond(), m3()] {
        let maps = closure_maps(&host);
        for f in &maps {
            for g in &maps {
                let trace = rad_join(&host, &[f.clone(), g.clone()]).unwrap();
                let limit = trace.fixpoint_map().unwrap();
                assert!(map_leq(f, limit).unwrap());
                assert!(map_leq(g, limit).unwrap());
                for other in &maps {
                    if map_leq(f, other).unwrap() && map_leq(g, other).unwrap() {
                        assert!(
                            map_leq(limit, other).unwrap(),
                            "the superposition limit lies under every joint upper bound"
                        );
                    }
                }

                // Comparability, composition collapse and fixpoint
                // inclusion characterize each other for closure maps.
                let composed_fixed = (0..host.n()).all(|x| f.apply(g.apply(x)) == f.apply(x));
                assert_eq!(map_leq(g, f).unwrap(), composed_fixed);
                assert_eq!(
                    map_leq(g, f).unwrap(),
                    f.fixpoints().is_subset(g.fixpoints())
                );
            }
        }
    }
}

#[test]
fn pointwise_meet_is_the_greatest_lower_bound_among_closure_maps() {
    for host in [chain(4), diamond(), m3()] {
        let maps = closure_maps(&host);
        for f in &maps {
            for g in &maps {
                let meet = rad_meet(&host, &[f.clone(), g.clone()]).unwrap();
                assert!(map_leq(&meet, f).unwrap());
                assert!(map_leq(&meet, g).unwrap());
                assert_eq!(
                    meet,
                    pointwise_meet(&host, &[f.clone(), g.clone()]).unwrap(),
                    "the closure-map meet is already the pointwise meet"
                );
                for other in &maps {
                    if map_leq(other, f).unwrap() && map_leq(other, g).unwrap() {
                        assert!(map_leq(other, &meet).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn topologies_on_three_points_number_twenty_nine() {
    let host = cube();
    let mut closed_set_families = 0usize;
    for members in all_subsets(&host) {
        let family = match SubsetFamily::new(host.clone(), members) {
            Ok(family) => family,
            Err(_) => continue,
        };
        match closure_operator_of(&family) {
            Ok(operator) => {
                closed_set_families += 1;
                let back = closed_sets_of(&operator).unwrap();
                assert_eq!(back.members(), members);
            }
            Err(
                ClosureError::WrongKind { .. } | ClosureError::EmptyNotFixed,
            ) => {}
            Err(other) => panic!("unexpected failure: {other}"),
        }
    }
    // The closed-set families of topologies on three labeled points are
    // in bijection with the topologies themselves, and there are 29 of
    // those.
    assert_eq!(closed_set_families, 29);
}

#[test]
fn gap_witnesses_exist_exactly_inside_the_chain_closure_limit() {
    for host in [chain(4), diamond()] {
        for rel in all_rels(&host) {
            let limit = rel.transitive_closure();
            for a in 0..host.n() {
                for b in 0..host.n() {
                    match gd_witness(&rel, a, b) {
                        Ok(path) => {
                            assert!(limit.related(a, b));
                            assert!(path.windows(2).all(|p| rel.related(p[0], p[1])));
                        }
                        Err(ClosureError::NotBarRelated(ia, ib)) => {
                            assert!(!limit.related(a, b));
                            assert_eq!(ia, host.id(a));
                            assert_eq!(ib, host.id(b));
                        }
                        Err(other) => panic!("unexpected failure: {other}"),
                    }
                }
            }
        }
    }
}

#[test]
fn enveloping_families_intersect_to_enveloping_families() {
    // The common fixpoints of finitely many closure maps support a hull
    // map again; rad_join checks this internally, so here it is driven
    // across triples as well as pairs.
    let host = diamond();
    let maps = closure_maps(&host);
    for f in &maps {
        for g in &maps {
            for h in &maps {
                let triple = [f.clone(), g.clone(), h.clone()];
                let trace = rad_join(&host, &triple).unwrap();
                let limit = trace.fixpoint_map().unwrap();
                let common = f
                    .fixpoints()
                    .inter(g.fixpoints())
                    .inter(h.fixpoints());
                assert_eq!(limit.fixpoints(), common);
            }
        }
    }
}

#[test]
fn kernel_maps_mirror_hulls_on_small_hosts() {
    let host = diamond();
    for members in all_subsets(&host) {
        if let Ok(family) = SubsetFamily::new(host.clone(), members) {
            if family.kind() == FamilyKind::Both {
                let hull = family.envelope_map().unwrap();
                let kernel = family.kernel_map().unwrap();
                assert_eq!(hull.fixpoints(), kernel.fixpoints());
                assert!(map_leq(&kernel, &hull).unwrap());
                // Hull after kernel lands on members, as does kernel
                // after hull; both are identity exactly on members.
                for x in 0..host.n() {
                    assert!(members.contains(hull.apply(kernel.apply(x))));
                    assert!(members.contains(kernel.apply(hull.apply(x))));
                }
            }
        }
    }
}

#[test]
fn the_whole_relation_space_collapses_under_full_set_checks() {
    // Applying each hull to the equality relation and each core to the
    // full order pins the extreme points of the operator family.
    let host = diamond();
    let eq = Rel::builtin(host.clone(), BuiltinRel::Eq);
    let leq = Rel::builtin(host.clone(), BuiltinRel::Leq);
    for op in RefOp::ALL {
        if op.is_hull() {
            assert_eq!(op.apply(&eq), eq, "{} fixes equality", op.name());
        } else {
            assert_eq!(op.apply(&leq), leq, "{} fixes the full order", op.name());
        }
    }
    assert_eq!(tilde(&eq).fixpoint_rel().unwrap(), &eq);
    assert_eq!(bar(&leq).fixpoint_rel().unwrap(), &leq);
    assert_eq!(set(&[0]), ElemSet::singleton(0));
}
