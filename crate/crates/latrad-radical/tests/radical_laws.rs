//! Law-level checks for radicals, radical maps, decompositions and their
//! interaction with closures and automorphisms, run over exhaustive
//! relation and map corpora on small hosts.

use std::sync::Arc;

use latrad_core::{ElemSet, Lattice};
use latrad_radical::{
    all_maps, automorphism_invariance, decompose, dual_radicals_in, join_radical,
    meet_dual_radical, radical_maps, radicals_in, rel_from_blocks, sigma_s, LatticeMap,
};
use latrad_rel::{all_rels, random_rels, Rel};

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

fn hosts() -> Vec<Arc<Lattice>> {
    vec![chain(1), chain(2), chain(3), chain(4), diamond(), m3()]
}

/// Every comparable pair, in both roles.
fn intervals(host: &Lattice) -> Vec<(usize, usize)> {
    let n = host.n();
    (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .filter(|&(a, b)| host.leq(a, b))
        .collect()
}

#[test]
fn every_interval_has_a_radical_and_expanded_orders_take_the_join() {
    for host in hosts() {
        for rel in all_rels(&host) {
            let profile = rel.classify().unwrap();
            for (a, b) in intervals(&host) {
                let rads = radicals_in(&rel, a, b).unwrap();
                let duals = dual_radicals_in(&rel, a, b).unwrap();
                if profile.transitive {
                    // A greedy climb from the interval bottom ends at a
                    // radical; transitivity keeps the bottom related to
                    // the climbing point.
                    assert!(!rads.is_empty());
                    assert!(!duals.is_empty());
                }

                if profile.up_expanded && profile.transitive {
                    let r = join_radical(&rel, a, b).unwrap();
                    assert!(
                        rads.iter().all(|&other| host.leq(other, r)),
                        "the join formula must dominate every radical"
                    );
                    if profile.up_contiguous {
                        assert_eq!(rads, vec![r]);
                    }
                }
                if profile.down_expanded && profile.transitive {
                    let p = meet_dual_radical(&rel, a, b).unwrap();
                    assert!(duals.iter().all(|&other| host.leq(p, other)));
                    if profile.down_contiguous {
                        assert_eq!(duals, vec![p]);
                    }
                }
            }
        }
    }
}

#[test]
fn unique_radicals_characterize_expandedness_for_transitive_relations() {
    for host in hosts() {
        for rel in all_rels(&host) {
            let profile = rel.classify().unwrap();
            if !profile.transitive {
                continue;
            }
            let unique_up = intervals(&host)
                .iter()
                .all(|&(a, b)| radicals_in(&rel, a, b).unwrap().len() == 1);
            // Unique radicals everywhere force up-expandedness…
            if unique_up {
                assert!(profile.up_expanded);
            }
            // …and for contiguous relations the two are equivalent.
            if profile.up_contiguous {
                assert_eq!(unique_up, profile.up_expanded);
            }

            let unique_down = intervals(&host)
                .iter()
                .all(|&(a, b)| dual_radicals_in(&rel, a, b).unwrap().len() == 1);
            if unique_down {
                assert!(profile.down_expanded);
            }
            if profile.down_contiguous {
                assert_eq!(unique_down, profile.down_expanded);
            }
        }
    }
}

#[test]
fn radical_maps_agree_with_interval_radicals() {
    for host in hosts() {
        let top = host.top();
        let bottom = host.bottom();
        for rel in all_rels(&host) {
            let (r, p) = radical_maps(&rel).unwrap();
            if let Some(r) = &r {
                for a in 0..host.n() {
                    assert_eq!(r.apply(a), join_radical(&rel, a, top).unwrap());
                }
            }
            if let Some(p) = &p {
                for b in 0..host.n() {
                    assert_eq!(p.apply(b), meet_dual_radical(&rel, bottom, b).unwrap());
                }
            }
            // For doubly contiguous expanded orders the two maps see the
            // same slices: each determines the other's value.
            if let (Some(r), Some(p)) = (&r, &p) {
                if rel.classify().unwrap().tt_order {
                    for x in 0..host.n() {
                        assert_eq!(r.apply(p.apply(x)), r.apply(x));
                        assert_eq!(p.apply(r.apply(x)), p.apply(x));
                        // Inside a slice, order and relation coincide.
                        let lo = p.apply(x);
                        let hi = r.apply(x);
                        for a in host.interval(lo, hi).unwrap().iter() {
                            for b in host.interval(lo, hi).unwrap().iter() {
                                if host.leq(a, b) {
                                    assert!(rel.related(a, b));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn compatibility_pushes_radicals_through_meets_and_joins() {
    for host in hosts() {
        for rel in all_rels(&host) {
            let profile = rel.classify().unwrap();
            let (r, p) = radical_maps(&rel).unwrap();

            if let Some(p) = &p {
                if profile.dual_r_order {
                    for a in 0..host.n() {
                        for b in 0..host.n() {
                            let lhs = p.apply(host.meet(a, b));
                            let mid = host.meet(p.apply(a), p.apply(b));
                            assert!(rel.related(lhs, mid));
                            assert!(rel.related(mid, host.meet(a, b)));
                        }
                    }
                }
                // Join-compatibility lets the dual radical slide through
                // joins, with equality under full meet-compatibility.
                if profile.h_relation && profile.dual_t_order {
                    for a in 0..host.n() {
                        for b in 0..host.n() {
                            let lhs = p.apply(host.join(a, b));
                            let mid = host.join(p.apply(a), p.apply(b));
                            assert!(rel.related(lhs, mid));
                            if profile.dual_r_order {
                                assert_eq!(lhs, mid);
                            }
                        }
                    }
                }
            }
            if let Some(r) = &r {
                if profile.r_order {
                    for a in 0..host.n() {
                        for b in 0..host.n() {
                            let mid = host.join(r.apply(a), r.apply(b));
                            let rhs = r.apply(host.join(a, b));
                            assert!(rel.related(host.join(a, b), mid));
                            assert!(rel.related(mid, rhs));
                        }
                    }
                }
                if profile.dual_h_relation && profile.t_order {
                    for a in 0..host.n() {
                        for b in 0..host.n() {
                            let mid = host.meet(r.apply(a), r.apply(b));
                            let rhs = r.apply(host.meet(a, b));
                            assert!(rel.related(mid, rhs));
                            if profile.r_order {
                                assert_eq!(mid, rhs);
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn monotonicity_of_the_maps_characterizes_compatibility() {
    for host in hosts() {
        for rel in all_rels(&host) {
            let profile = rel.classify().unwrap();
            if !profile.tt_order {
                continue;
            }
            let (r, p) = radical_maps(&rel).unwrap();
            let r = r.unwrap();
            let p = p.unwrap();
            let n = host.n();
            let monotone = |g: &LatticeMap| {
                (0..n).all(|a| (0..n).all(|b| !host.leq(a, b) || host.leq(g.apply(a), g.apply(b))))
            };

            let p_mono = monotone(&p);
            let p_sub = (0..n).all(|a| {
                (0..n).all(|b| {
                    host.leq(
                        p.apply(host.meet(a, b)),
                        host.meet(p.apply(a), p.apply(b)),
                    )
                })
            });
            let p_fix = (0..n).all(|a| {
                (0..n).all(|b| {
                    p.apply(host.meet(a, b)) == p.apply(host.meet(p.apply(a), p.apply(b)))
                })
            });
            assert_eq!(profile.dual_r_order, p_mono);
            assert_eq!(p_mono, p_sub);
            assert_eq!(p_sub, p_fix);

            let r_mono = monotone(&r);
            let r_super = (0..n).all(|a| {
                (0..n).all(|b| {
                    host.leq(
                        host.join(r.apply(a), r.apply(b)),
                        r.apply(host.join(a, b)),
                    )
                })
            });
            let r_fix = (0..n).all(|a| {
                (0..n).all(|b| {
                    r.apply(host.join(a, b)) == r.apply(host.join(r.apply(a), r.apply(b)))
                })
            });
            assert_eq!(profile.r_order, r_mono);
            assert_eq!(r_mono, r_super);
            assert_eq!(r_super, r_fix);

            assert_eq!(profile.rr_order, p_mono && r_mono);
        }
    }
}

/// All ways to cover the host by pairwise disjoint intervals. Relies on
/// element indices being sorted compatibly with the order, which the
/// fixture lattices satisfy.
fn interval_partitions(host: &Arc<Lattice>) -> Vec<Vec<(usize, usize)>> {
    fn go(
        host: &Lattice,
        covered: ElemSet,
        acc: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if covered == host.all() {
            out.push(acc.clone());
            return;
        }
        let x = host.all().minus(covered).first().unwrap();
        for hi in host.up_set(x).iter() {
            let slice = host.interval(x, hi).unwrap();
            if slice.intersects(covered) {
                continue;
            }
            acc.push((x, hi));
            go(host, covered.union(slice), acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(host, ElemSet::EMPTY, &mut Vec::new(), &mut out);
    out
}

#[test]
fn interval_slicings_and_doubly_contiguous_orders_correspond() {
    for host in [chain(4), diamond(), m3()] {
        let mut tt_rels: Vec<Rel> = Vec::new();
        for rel in all_rels(&host) {
            if rel.classify().unwrap().tt_order {
                // `decompose` internally proves the partition structure.
                let d = decompose(&rel).unwrap();
                assert_eq!(d.blocks().len(), d.radical_fixpoints().len());
                tt_rels.push(rel);
            }
        }
        let partitions = interval_partitions(&host);
        assert_eq!(
            partitions.len(),
            tt_rels.len(),
            "interval partitions and doubly contiguous orders must biject"
        );
        for blocks in &partitions {
            let rel = rel_from_blocks(&host, blocks).unwrap();
            let d = decompose(&rel).unwrap();
            let mut expected = blocks.clone();
            expected.sort_by_key(|&(_, hi)| hi);
            assert_eq!(d.blocks(), &expected[..]);
            assert!(tt_rels.contains(&rel));
        }
    }
}

#[test]
fn interpolating_maps_and_contiguous_orders_biject() {
    for host in [chain(2), chain(3), chain(4), diamond()] {
        let mut dual_pre_count = 0usize;
        let mut pre_count = 0usize;
        for g in all_maps(&host) {
            let class = g.classify();
            if class.dual_pre_radical {
                dual_pre_count += 1;
                let induced = g.induced_rel();
                let profile = induced.classify().unwrap();
                assert!(profile.dual_t_order && profile.up_contiguous);
                let (_, p) = radical_maps(&induced).unwrap();
                assert_eq!(p.unwrap(), g, "the dual radical of the induced order is the map");
                // Monotone interpolating maps correspond to the
                // meet-compatible orders.
                assert_eq!(class.dual_radical, profile.dual_r_order);
            }
            if class.pre_radical {
                pre_count += 1;
                let induced = g.induced_rel();
                let profile = induced.classify().unwrap();
                assert!(profile.t_order && profile.down_contiguous);
                let (r, _) = radical_maps(&induced).unwrap();
                assert_eq!(r.unwrap(), g);
                assert_eq!(class.radical, profile.r_order);
            }
        }

        let mut contiguous_dual_t = 0usize;
        let mut contiguous_t = 0usize;
        for rel in all_rels(&host) {
            let profile = rel.classify().unwrap();
            if profile.dual_t_order && profile.up_contiguous {
                contiguous_dual_t += 1;
                let (_, p) = radical_maps(&rel).unwrap();
                assert_eq!(p.unwrap().induced_rel(), rel);
            }
            if profile.t_order && profile.down_contiguous {
                contiguous_t += 1;
                let (r, _) = radical_maps(&rel).unwrap();
                assert_eq!(r.unwrap().induced_rel(), rel);
            }
        }
        assert_eq!(dual_pre_count, contiguous_dual_t);
        assert_eq!(pre_count, contiguous_t);
    }
}

#[test]
fn hull_maps_bound_the_chain_closure_radicals() {
    for host in hosts() {
        for rel in all_rels(&host) {
            let profile = rel.classify().unwrap();
            let (sigma, s) = sigma_s(&rel);
            if profile.h_relation {
                let up = rel.chain_closure_up();
                let (r, _) = radical_maps(&up).unwrap();
                let r = r.expect("closing up a join-compatible relation yields an expanded contiguous order");
                for a in 0..host.n() {
                    assert!(host.leq(s.apply(a), r.apply(a)));
                }
            }
            if profile.dual_h_relation {
                let down = rel.chain_closure_down();
                let (_, p) = radical_maps(&down).unwrap();
                let p = p.expect("closing down a meet-compatible relation yields an expanded contiguous order");
                for a in 0..host.n() {
                    assert!(host.leq(p.apply(a), sigma.apply(a)));
                }
            }
        }
    }
}

#[test]
fn automorphisms_fix_all_attached_elements() {
    for host in [diamond(), m3()] {
        let autos = host.automorphisms().unwrap();
        assert!(autos.len() > 1, "fixtures have nontrivial symmetries");
        let mut rels: Vec<Rel> = if host.n() == 4 {
            all_rels(&host).collect()
        } else {
            random_rels(&host, 60, 0xbeef)
        };
        rels.push(Rel::builtin(host.clone(), latrad_rel::BuiltinRel::Leq));
        for rel in &rels {
            for theta in &autos {
                let preserves = (0..host.n()).all(|x| {
                    (0..host.n())
                        .all(|y| rel.related(x, y) == rel.related(theta[x], theta[y]))
                });
                for a in 0..host.n() {
                    let outcome = automorphism_invariance(rel, theta, a);
                    if !preserves {
                        assert!(outcome.is_err());
                    } else if theta[a] != a {
                        assert!(outcome.is_err());
                    } else {
                        // Internal assertions prove the fixedness claims.
                        let report = outcome.unwrap();
                        let (r, p) = radical_maps(rel).unwrap();
                        assert_eq!(report.radical, r.map(|g| g.apply(a)));
                        assert_eq!(report.dual_radical, p.map(|g| g.apply(a)));
                    }
                }
            }
        }
    }
}
