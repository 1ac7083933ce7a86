//! Radicals of intervals and the radical maps of a relation.
//!
//! For a relation `≪` and an interval `[a, b]`, a *radical* is an element
//! `r` of the interval with `a ≪ r` that no further `≪`-step inside the
//! interval can leave: everything `r` relates to within `[a, b]` is `r`
//! itself. A *dual radical* is the mirror image at the bottom of the
//! interval. Expanded transitive relations have a canonical radical — the
//! join of everything the interval bottom relates to — and when the
//! relation is also contiguous that canonical radical is the only one.

use latrad_core::ElemSet;
use latrad_rel::Rel;

use crate::error::RadicalError;
use crate::map::LatticeMap;

/// All radicals of the interval `[a, b]`: elements `r` with
/// `a ≪ r ≤ b` such that `r ≪ x ≤ b` forces `x = r`.
pub fn radicals_in(rel: &Rel, a: usize, b: usize) -> Result<Vec<usize>, RadicalError> {
    let host = rel.host();
    let interval = host.interval(a, b)?;
    let blocked = rel.upper_complement();
    Ok(interval
        .iter()
        .filter(|&r| rel.related(a, r) && blocked.related(r, b))
        .collect())
}

/// All dual radicals of `[a, b]`: elements `p` with `a ≤ p ≪ b` such that
/// `a ≤ x ≪ p` forces `x = p`.
pub fn dual_radicals_in(rel: &Rel, a: usize, b: usize) -> Result<Vec<usize>, RadicalError> {
    let host = rel.host();
    let interval = host.interval(a, b)?;
    let blocked = rel.lower_complement();
    Ok(interval
        .iter()
        .filter(|&p| blocked.related(a, p) && rel.related(p, b))
        .collect())
}

/// The canonical radical of `[a, b]` for an up-expanded transitive
/// relation: the join of everything in the interval that `a` relates to.
///
/// Demands up-expandedness and transitivity; under those hypotheses the
/// value is checked to really be a radical, and when the relation is also
/// up-contiguous it is checked to be the only one.
pub fn join_radical(rel: &Rel, a: usize, b: usize) -> Result<usize, RadicalError> {
    let profile = rel.classify()?;
    if !(profile.up_expanded && profile.transitive) {
        return Err(RadicalError::PreconditionFailed {
            required: "an up-expanded transitive relation",
        });
    }
    let host = rel.host();
    let interval = host.interval(a, b)?;
    let r = host.join_set(interval.inter(rel.row(a)));

    let all = radicals_in(rel, a, b)?;
    assert!(
        all.contains(&r),
        "the join of the reachable part of the interval must be a radical"
    );
    if profile.up_contiguous {
        assert_eq!(
            all,
            vec![r],
            "a contiguous expanded order admits exactly one radical per interval"
        );
        // The part of the interval reachable from `a` is exactly the
        // lower section of the radical's column.
        let below_r = host.interval(a, r).expect("a ≪ r implies a ≤ r");
        let reaching_r: ElemSet = interval.iter().filter(|&x| rel.related(x, r)).collect();
        assert_eq!(below_r, interval.inter(reaching_r));
    }
    Ok(r)
}

/// The canonical dual radical of `[a, b]` for a down-expanded transitive
/// relation: the meet of everything in the interval that relates to `b`.
pub fn meet_dual_radical(rel: &Rel, a: usize, b: usize) -> Result<usize, RadicalError> {
    let profile = rel.classify()?;
    if !(profile.down_expanded && profile.transitive) {
        return Err(RadicalError::PreconditionFailed {
            required: "a down-expanded transitive relation",
        });
    }
    let host = rel.host();
    let interval = host.interval(a, b)?;
    let p = host.meet_set(interval.inter(rel.col(b)));

    let all = dual_radicals_in(rel, a, b)?;
    assert!(all.contains(&p));
    if profile.down_contiguous {
        assert_eq!(all, vec![p]);
        let above_p = host.interval(p, b).expect("p ≪ b implies p ≤ b");
        let reached: ElemSet = interval.iter().filter(|&x| rel.related(p, x)).collect();
        assert_eq!(above_p, interval.inter(reached));
    }
    Ok(p)
}

/// The radical maps of a relation, where they exist.
///
/// Returns `(r, p)` where `r(a)` — the join of the full row of `a` — is
/// present when the relation is a contiguous up-expanded order, and
/// `p(b)` — the meet of the full column of `b` — is present when it is a
/// contiguous down-expanded order. Each map is checked against the laws
/// its hypotheses promise: `a ≪ r(a)`, idempotence, constancy of `r` on
/// `[a, r(a)]`, the interpolation class of the map, and monotonicity when
/// the relation is additionally compatible with joins (resp. meets).
pub fn radical_maps(
    rel: &Rel,
) -> Result<(Option<LatticeMap>, Option<LatticeMap>), RadicalError> {
    let profile = rel.classify()?;
    let host = rel.host();
    let n = host.n();

    let r_map = if profile.t_order {
        let g = LatticeMap::from_fn(host.clone(), |a| host.join_set(rel.row(a)));
        for a in 0..n {
            let ra = g.apply(a);
            assert!(rel.related(a, ra), "an element must relate to its radical");
            assert_eq!(g.apply(ra), ra, "the radical map must be idempotent");
            for b in 0..n {
                if rel.related(a, b) {
                    assert!(rel.related(b, ra) && g.apply(b) == ra);
                }
                if host.leq(a, b) && host.leq(b, ra) {
                    assert!(rel.related(b, g.apply(b)) && g.apply(b) == ra);
                }
            }
        }
        let mp = g.classify();
        assert!(
            mp.pre_radical,
            "the radical map of a contiguous expanded order interpolates"
        );
        if profile.r_order {
            assert!(
                mp.radical,
                "join-compatibility of the order makes the radical map monotone"
            );
        }
        Some(g)
    } else {
        None
    };

    let p_map = if profile.dual_t_order {
        let cols = rel.cols();
        let g = LatticeMap::from_fn(host.clone(), |b| host.meet_set(cols[b]));
        for b in 0..n {
            let pb = g.apply(b);
            assert!(rel.related(pb, b), "a dual radical must relate to its element");
            assert_eq!(g.apply(pb), pb);
            for a in 0..n {
                if rel.related(a, b) {
                    assert!(rel.related(pb, a) && g.apply(a) == pb);
                }
                if host.leq(pb, a) && host.leq(a, b) {
                    assert!(rel.related(g.apply(a), a) && g.apply(a) == pb);
                }
            }
        }
        let mp = g.classify();
        assert!(mp.dual_pre_radical);
        if profile.dual_r_order {
            assert!(mp.dual_radical);
        }
        Some(g)
    } else {
        None
    };

    Ok((r_map, p_map))
}

/// The outer hull maps of a relation, defined for every relation: `σ(a)`
/// is the meet of everything relating to `a`, and `s(a)` the join of
/// everything `a` relates to. For well-behaved relations these bound the
/// dual radical and radical respectively.
pub fn sigma_s(rel: &Rel) -> (LatticeMap, LatticeMap) {
    let host = rel.host();
    let cols = rel.cols();
    let sigma = LatticeMap::from_fn(host.clone(), |a| host.meet_set(cols[a]));
    let s = LatticeMap::from_fn(host.clone(), |a| host.join_set(rel.row(a)));
    (sigma, s)
}
