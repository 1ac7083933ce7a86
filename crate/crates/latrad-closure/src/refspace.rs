//! Closure and interior operators on the space of reflexive relations.
//!
//! The space of reflexive subrelations of a host order is itself a
//! complete lattice, and each property tracked by
//! [`PropertyProfile`](latrad_rel::PropertyProfile) carves out a subset
//! of it that supports a hull (for the closure operators here) or a
//! kernel (for the interior operators). Every operator asserts that its
//! result has the property it closes under and sits on the right side of
//! the input; the extremal claims — that the results are least or
//! greatest among relations with the property — are exercised by
//! exhaustive enumeration in the tests.

use latrad_core::ElemSet;
use latrad_rel::Rel;

use crate::error::ClosureError;
use crate::mapops::SuperpositionTrace;

/// The closure and interior operators on reflexive relations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RefOp {
    /// Close under ascending chains of related pairs.
    ChainUp,
    /// Close under descending chains of related pairs.
    ChainDown,
    /// Close intervals under absorption from below.
    ContiguousUp,
    /// Close intervals under absorption from above.
    ContiguousDown,
    /// Close each row under joins.
    ExpandedUp,
    /// Close each column under meets.
    ExpandedDown,
    /// Close under composition of related pairs.
    Order,
    /// The least join-stable relation containing the input.
    JoinStableHull,
    /// The least meet-stable relation containing the input.
    MeetStableHull,
    /// The greatest join-stable relation inside the input.
    JoinStableCore,
    /// The greatest meet-stable relation inside the input.
    MeetStableCore,
}

impl RefOp {
    /// Every operator, hulls before cores.
    pub const ALL: [RefOp; 11] = [
        RefOp::ChainUp,
        RefOp::ChainDown,
        RefOp::ContiguousUp,
        RefOp::ContiguousDown,
        RefOp::ExpandedUp,
        RefOp::ExpandedDown,
        RefOp::Order,
        RefOp::JoinStableHull,
        RefOp::MeetStableHull,
        RefOp::JoinStableCore,
        RefOp::MeetStableCore,
    ];

    /// The command-line name of the operator.
    pub fn name(self) -> &'static str {
        match self {
            RefOp::ChainUp => "chain-up",
            RefOp::ChainDown => "chain-down",
            RefOp::ContiguousUp => "contiguous-up",
            RefOp::ContiguousDown => "contiguous-down",
            RefOp::ExpandedUp => "expanded-up",
            RefOp::ExpandedDown => "expanded-down",
            RefOp::Order => "order",
            RefOp::JoinStableHull => "join-hull",
            RefOp::MeetStableHull => "meet-hull",
            RefOp::JoinStableCore => "join-core",
            RefOp::MeetStableCore => "meet-core",
        }
    }

    /// Whether the operator grows its input (a hull) or shrinks it (a core).
    pub fn is_hull(self) -> bool {
        !matches!(self, RefOp::JoinStableCore | RefOp::MeetStableCore)
    }

    /// Applies the operator.
    pub fn apply(self, rel: &Rel) -> Rel {
        match self {
            RefOp::ChainUp => chain_up(rel),
            RefOp::ChainDown => chain_down(rel),
            RefOp::ContiguousUp => contiguous_up(rel),
            RefOp::ContiguousDown => contiguous_down(rel),
            RefOp::ExpandedUp => expanded_up(rel),
            RefOp::ExpandedDown => expanded_down(rel),
            RefOp::Order => order_closure(rel),
            RefOp::JoinStableHull => join_stable_hull(rel),
            RefOp::MeetStableHull => meet_stable_hull(rel),
            RefOp::JoinStableCore => join_stable_core(rel),
            RefOp::MeetStableCore => meet_stable_core(rel),
        }
    }
}

impl std::str::FromStr for RefOp {
    type Err = String;

    fn from_str(s: &str) -> Result<RefOp, String> {
        RefOp::ALL
            .into_iter()
            .find(|op| op.name() == s)
            .ok_or_else(|| format!("unknown relation operator `{s}`"))
    }
}

fn assert_contains(result: &Rel, rel: &Rel, what: &str) {
    assert!(
        rel.is_subrel(result).expect("results live on the input host"),
        "{what} contains its input"
    );
}

fn assert_within(result: &Rel, rel: &Rel, what: &str) {
    assert!(
        result.is_subrel(rel).expect("results live on the input host"),
        "{what} stays inside its input"
    );
}

/// Closure under ascending chains of related pairs.
pub fn chain_up(rel: &Rel) -> Rel {
    let result = rel.chain_closure_up();
    assert_contains(&result, rel, "the ascending chain closure");
    result
}

/// Closure under descending chains of related pairs.
pub fn chain_down(rel: &Rel) -> Rel {
    let result = rel.chain_closure_down();
    assert_contains(&result, rel, "the descending chain closure");
    result
}

/// The least up-contiguous relation containing the input.
pub fn contiguous_up(rel: &Rel) -> Rel {
    let result = rel.contiguous_closure_up();
    assert!(
        result
            .classify()
            .expect("closure results classify cleanly")
            .up_contiguous,
        "the up-contiguity closure is up-contiguous"
    );
    assert_contains(&result, rel, "the up-contiguity closure");
    result
}

/// The least down-contiguous relation containing the input.
pub fn contiguous_down(rel: &Rel) -> Rel {
    let result = rel.contiguous_closure_down();
    assert!(
        result
            .classify()
            .expect("closure results classify cleanly")
            .down_contiguous,
        "the down-contiguity closure is down-contiguous"
    );
    assert_contains(&result, rel, "the down-contiguity closure");
    result
}

/// Closes one set under binary joins taken in the host.
fn join_saturate(rel: &Rel, mut set: ElemSet) -> ElemSet {
    let host = rel.host();
    loop {
        let mut next = set;
        let list: Vec<usize> = set.iter().collect();
        for (i, &x) in list.iter().enumerate() {
            for &y in &list[i + 1..] {
                next.insert(host.join(x, y));
            }
        }
        if next == set {
            return set;
        }
        set = next;
    }
}

/// Closes one set under binary meets taken in the host.
fn meet_saturate(rel: &Rel, mut set: ElemSet) -> ElemSet {
    let host = rel.host();
    loop {
        let mut next = set;
        let list: Vec<usize> = set.iter().collect();
        for (i, &x) in list.iter().enumerate() {
            for &y in &list[i + 1..] {
                next.insert(host.meet(x, y));
            }
        }
        if next == set {
            return set;
        }
        set = next;
    }
}

/// The least up-expanded relation containing the input: each row is
/// closed under joins. Rows grow independently, so saturating every row
/// is already the least such relation.
pub fn expanded_up(rel: &Rel) -> Rel {
    let host = rel.host();
    let rows: Vec<ElemSet> = (0..host.n()).map(|a| join_saturate(rel, rel.row(a))).collect();
    let result =
        Rel::from_rows(host.clone(), rows).expect("joins of a row stay above the row's element");
    assert!(
        result
            .classify()
            .expect("closure results classify cleanly")
            .up_expanded,
        "the up-expansion closure is up-expanded"
    );
    assert_contains(&result, rel, "the up-expansion closure");
    result
}

/// The least down-expanded relation containing the input: each column is
/// closed under meets.
pub fn expanded_down(rel: &Rel) -> Rel {
    let host = rel.host();
    let cols: Vec<ElemSet> = rel
        .cols()
        .into_iter()
        .map(|col| meet_saturate(rel, col))
        .collect();
    let rows: Vec<ElemSet> = (0..host.n())
        .map(|a| (0..host.n()).filter(|&b| cols[b].contains(a)).collect())
        .collect();
    let result =
        Rel::from_rows(host.clone(), rows).expect("meets of a column stay below the column's element");
    assert!(
        result
            .classify()
            .expect("closure results classify cleanly")
            .down_expanded,
        "the down-expansion closure is down-expanded"
    );
    assert_contains(&result, rel, "the down-expansion closure");
    result
}

/// The least order containing the input: the transitive closure.
pub fn order_closure(rel: &Rel) -> Rel {
    let result = rel.transitive_closure();
    assert!(
        result
            .classify()
            .expect("closure results classify cleanly")
            .transitive,
        "the order closure is transitive"
    );
    assert_contains(&result, rel, "the order closure");
    result
}

/// The least join-stable relation containing the input: `x` related to
/// `y` forces `a` related to `a ∨ y` for every `a` above `x`.
pub fn join_stable_hull(rel: &Rel) -> Rel {
    let host = rel.host();
    let n = host.n();
    let mut rows: Vec<ElemSet> = (0..n).map(ElemSet::singleton).collect();
    for x in 0..n {
        for y in rel.row(x).iter() {
            for a in host.up_set(x).iter() {
                rows[a].insert(host.join(a, y));
            }
        }
    }
    let result =
        Rel::from_rows(host.clone(), rows).expect("joining upward stays inside the host order");
    assert!(
        result
            .classify()
            .expect("closure results classify cleanly")
            .h_relation,
        "the join-stable hull is join-stable"
    );
    assert_contains(&result, rel, "the join-stable hull");
    result
}

/// The least meet-stable relation containing the input: `x` related to
/// `y` forces `b ∧ x` related to `b` for every `b` below `y`.
pub fn meet_stable_hull(rel: &Rel) -> Rel {
    let host = rel.host();
    let n = host.n();
    let mut rows: Vec<ElemSet> = (0..n).map(ElemSet::singleton).collect();
    for x in 0..n {
        for y in rel.row(x).iter() {
            for b in host.down_set(y).iter() {
                rows[host.meet(b, x)].insert(b);
            }
        }
    }
    let result =
        Rel::from_rows(host.clone(), rows).expect("meeting downward stays inside the host order");
    assert!(
        result
            .classify()
            .expect("closure results classify cleanly")
            .dual_h_relation,
        "the meet-stable hull is meet-stable"
    );
    assert_contains(&result, rel, "the meet-stable hull");
    result
}

/// The greatest join-stable relation inside the input: pairs whose every
/// joint translation upward stays related.
pub fn join_stable_core(rel: &Rel) -> Rel {
    let host = rel.host();
    let n = host.n();
    let rows: Vec<ElemSet> = (0..n)
        .map(|a| {
            rel.row(a)
                .iter()
                .filter(|&b| (0..n).all(|x| rel.related(host.join(a, x), host.join(b, x))))
                .collect()
        })
        .collect();
    let result = Rel::from_rows(host.clone(), rows).expect("cores select existing pairs");
    assert!(
        result
            .classify()
            .expect("interior results classify cleanly")
            .h_relation,
        "the join-stable core is join-stable"
    );
    assert_within(&result, rel, "the join-stable core");
    result
}

/// The greatest meet-stable relation inside the input: pairs whose every
/// joint translation downward stays related.
pub fn meet_stable_core(rel: &Rel) -> Rel {
    let host = rel.host();
    let n = host.n();
    let rows: Vec<ElemSet> = (0..n)
        .map(|a| {
            rel.row(a)
                .iter()
                .filter(|&b| (0..n).all(|x| rel.related(host.meet(a, x), host.meet(b, x))))
                .collect()
        })
        .collect();
    let result = Rel::from_rows(host.clone(), rows).expect("cores select existing pairs");
    assert!(
        result
            .classify()
            .expect("interior results classify cleanly")
            .dual_h_relation,
        "the meet-stable core is meet-stable"
    );
    assert_within(&result, rel, "the meet-stable core");
    result
}

/// Round-robin superposition of relation operators from a seed relation.
fn superpose_rels(ops: &[RefOp], seed: &Rel) -> (Vec<Rel>, Rel) {
    let mut steps = vec![seed.clone()];
    let mut current = seed.clone();
    loop {
        let mut stable = true;
        for op in ops {
            let next = op.apply(&current);
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

/// The smallest doubly contiguous, doubly expanded order containing the
/// relation, reached by superposing the five directed closures until none
/// of them moves the result.
///
/// The limit is asserted to have the full combined property and to be
/// independent of the order in which the closures are applied; that it
/// is the least such extension is checked against exhaustive enumeration
/// in the tests.
pub fn tilde(rel: &Rel) -> SuperpositionTrace {
    const GENERATORS: [RefOp; 5] = [
        RefOp::ContiguousUp,
        RefOp::ContiguousDown,
        RefOp::ExpandedUp,
        RefOp::ExpandedDown,
        RefOp::Order,
    ];
    let (steps, limit) = superpose_rels(&GENERATORS, rel);
    assert!(
        limit
            .classify()
            .expect("superposition limits classify cleanly")
            .tt_order,
        "the combined closure is a doubly contiguous, doubly expanded order"
    );
    assert_contains(&limit, rel, "the combined closure");
    let mut reversed = GENERATORS;
    reversed.reverse();
    let (_, limit_reversed) = superpose_rels(&reversed, rel);
    assert!(
        limit == limit_reversed,
        "the combined closure does not depend on generator order"
    );
    SuperpositionTrace::of_rels(steps, limit)
}

/// The limit of alternately closing under ascending and descending
/// chains. On a finite host each chain closure is already reachability
/// through related pairs, so the limit is asserted to coincide with the
/// transitive closure — an independent description of the same relation.
pub fn bar(rel: &Rel) -> SuperpositionTrace {
    const GENERATORS: [RefOp; 2] = [RefOp::ChainUp, RefOp::ChainDown];
    let (steps, limit) = superpose_rels(&GENERATORS, rel);
    assert!(
        limit == rel.transitive_closure(),
        "alternating chain closures stabilize at the transitive closure"
    );
    assert_contains(&limit, rel, "the chain-closure limit");
    SuperpositionTrace::of_rels(steps, limit)
}

/// A chain witnessing membership in the chain-closure limit: consecutive
/// entries are related by the input relation, so every finite interval of
/// the chain is a related gap of it.
///
/// Fails with [`ClosureError::NotBarRelated`] when `a` and `b` are not
/// connected.
pub fn gd_witness(rel: &Rel, a: usize, b: usize) -> Result<Vec<usize>, ClosureError> {
    let host = rel.host();
    let limit = bar(rel).fixpoint_rel().expect("bar superposes relations").clone();
    if !limit.related(a, b) {
        return Err(ClosureError::NotBarRelated(
            host.id(a).to_owned(),
            host.id(b).to_owned(),
        ));
    }
    let path = rel.witness_path(a, b)?;
    assert_eq!(path.first(), Some(&a), "witness chains start at the source");
    assert_eq!(path.last(), Some(&b), "witness chains end at the target");
    for pair in path.windows(2) {
        assert!(
            rel.related(pair[0], pair[1]),
            "consecutive witness entries are related by the input"
        );
        assert!(
            host.lt(pair[0], pair[1]),
            "witness chains ascend strictly"
        );
    }
    for (i, &x) in path.iter().enumerate() {
        for &y in &path[i + 1..] {
            assert!(
                limit.related(x, y),
                "all pairs along a witness chain land in the closure"
            );
        }
    }
    Ok(path)
}
