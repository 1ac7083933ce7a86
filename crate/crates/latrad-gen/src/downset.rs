//! Lattices grown from posets: downset lattices (always distributive, with
//! both infinite-distributive identities) and Dedekind–MacNeille
//! completions (the smallest complete lattice a poset order-embeds into).

use latrad_core::{ElemSet, Lattice};

use crate::error::GenError;
use crate::poset::Poset;

/// Downset lattices live on the powerset, so six points (64 downset
/// candidates) keeps construction and profiling exhaustive.
const MAX_DOWNSET_POINTS: usize = 6;
/// Completion candidates are also subsets; eight points = 256 candidates.
const MAX_COMPLETION_POINTS: usize = 8;
/// Cut systems can still overflow the element capacity in principle.
const MAX_CUTS: usize = latrad_core::MAX_ELEMENTS;

fn subset_id(poset: &Poset, members: ElemSet) -> String {
    let names: Vec<&str> = members.iter().map(|i| poset.id(i)).collect();
    format!("({})", names.join(","))
}

/// Sorts subsets by size and then by bit pattern — a deterministic linear
/// extension of inclusion, so the empty set (bottom) comes first.
fn canonical_subset_order(mut sets: Vec<ElemSet>) -> Vec<ElemSet> {
    sets.sort_by_key(|s| (s.len(), s.bits()));
    sets
}

fn lattice_of_subsets(poset: &Poset, sets: Vec<ElemSet>) -> Result<Lattice, GenError> {
    let sets = canonical_subset_order(sets);
    let ids: Vec<String> = sets.iter().map(|&s| subset_id(poset, s)).collect();
    let up: Vec<ElemSet> = sets
        .iter()
        .map(|&s| {
            sets.iter()
                .enumerate()
                .filter(|(_, &t)| s.is_subset(t))
                .map(|(j, _)| j)
                .collect()
        })
        .collect();
    Ok(Lattice::from_leq(ids, up)?)
}

/// The lattice of downsets of a poset, ordered by inclusion.
///
/// Meet and join are intersection and union, so the result is always
/// distributive and satisfies the join- and meet-infinite-distributive
/// identities; both facts are asserted on every call.
pub fn downset_lattice(poset: &Poset) -> Result<Lattice, GenError> {
    let n = poset.n();
    if n > MAX_DOWNSET_POINTS {
        return Err(GenError::SizeLimit {
            what: "poset points for a downset lattice",
            n,
            max: MAX_DOWNSET_POINTS,
        });
    }
    let mut downsets = Vec::new();
    for bits in 0..(1u128 << n) {
        let candidate = ElemSet::from_bits(bits);
        if candidate
            .iter()
            .all(|i| poset.down_set(i).is_subset(candidate))
        {
            downsets.push(candidate);
        }
    }
    let lattice = lattice_of_subsets(poset, downsets)?;
    let profile = lattice.structure_profile(0);
    assert!(
        profile.distributive && profile.jid && profile.mid,
        "downset lattices are distributive models of both identities"
    );
    Ok(lattice)
}

/// The Dedekind–MacNeille completion of a poset.
///
/// Elements are the cuts: subsets equal to the lower bounds of their upper
/// bounds. The poset order-embeds via principal ideals, which is asserted
/// on every call (order preserved and reflected).
pub fn dm_completion(poset: &Poset) -> Result<Lattice, GenError> {
    let n = poset.n();
    if n > MAX_COMPLETION_POINTS {
        return Err(GenError::SizeLimit {
            what: "poset points for a completion",
            n,
            max: MAX_COMPLETION_POINTS,
        });
    }
    let full = ElemSet::full(n);
    let upper = |set: ElemSet| {
        set.iter()
            .fold(full, |acc, i| acc.inter(poset.up_set(i)))
    };
    let lower = |set: ElemSet| {
        set.iter()
            .fold(full, |acc, i| acc.inter(poset.down_set(i)))
    };

    let mut cuts = Vec::new();
    for bits in 0..(1u128 << n) {
        let candidate = ElemSet::from_bits(bits);
        if lower(upper(candidate)) == candidate {
            cuts.push(candidate);
        }
    }
    if cuts.len() > MAX_CUTS {
        return Err(GenError::SizeLimit {
            what: "completion cuts",
            n: cuts.len(),
            max: MAX_CUTS,
        });
    }
    let lattice = lattice_of_subsets(poset, cuts)?;

    // The principal embedding: each poset element maps to its down-set,
    // which is always a cut, in an order preserving and reflecting way.
    let cut_index = |set: ElemSet| {
        (0..lattice.n())
            .find(|&k| {
                lattice.id(k) == subset_id(poset, set)
            })
            .expect("principal ideals are cuts")
    };
    let image: Vec<usize> = (0..n).map(|i| cut_index(poset.down_set(i))).collect();
    for a in 0..n {
        for b in 0..n {
            assert_eq!(
                poset.leq(a, b),
                lattice.leq(image[a], image[b]),
                "the completion embeds the poset order exactly"
            );
        }
    }
    Ok(lattice)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::{make_named, NamedKind};

    fn key(l: &Lattice) -> String {
        l.canonical_key().unwrap()
    }

    #[test]
    fn downsets_of_tiny_posets_are_the_classic_lattices() {
        let antichain: Poset = "ids:a,b".parse().unwrap();
        let two = downset_lattice(&antichain).unwrap();
        assert_eq!(two.n(), 4);
        assert_eq!(key(&two), key(&make_named(&NamedKind::Boolean(2)).unwrap()));

        let chain: Poset = "a<b".parse().unwrap();
        assert_eq!(
            key(&downset_lattice(&chain).unwrap()),
            key(&make_named(&NamedKind::Chain(3)).unwrap())
        );

        // One element below two incomparable ones.
        let vee: Poset = "a<b;a<c".parse().unwrap();
        let lattice = downset_lattice(&vee).unwrap();
        assert_eq!(lattice.n(), 5);
        assert!(lattice.structure_profile(0).distributive);
        assert_eq!(lattice.id(lattice.bottom()), "()");
        assert_eq!(lattice.id(lattice.top()), "(a,b,c)");
    }

    #[test]
    fn oversized_inputs_are_rejected() {
        let p = Poset::random(7, 0).unwrap();
        assert!(matches!(
            downset_lattice(&p).unwrap_err(),
            GenError::SizeLimit { .. }
        ));
        let p = Poset::random(9, 0).unwrap();
        assert!(matches!(
            dm_completion(&p).unwrap_err(),
            GenError::SizeLimit { .. }
        ));
    }

    #[test]
    fn completions_of_lattices_change_nothing() {
        for kind in [NamedKind::Chain(4), NamedKind::Boolean(2), NamedKind::M3] {
            let l = make_named(&kind).unwrap();
            let completed = dm_completion(&Poset::from_lattice(&l)).unwrap();
            assert_eq!(key(&completed), key(&l), "{kind} is already complete");
        }
    }

    #[test]
    fn completion_of_the_two_antichain_is_the_square() {
        let antichain: Poset = "ids:a,b".parse().unwrap();
        let completed = dm_completion(&antichain).unwrap();
        assert_eq!(completed.n(), 4);
        assert_eq!(key(&completed), key(&make_named(&NamedKind::Boolean(2)).unwrap()));
    }

    #[test]
    fn completion_of_the_three_crown_is_the_cube() {
        // Three minimal and three maximal elements, each minimal below the
        // two maximal ones with a different index.
        let crown: Poset = "a1<b2;a1<b3;a2<b1;a2<b3;a3<b1;a3<b2".parse().unwrap();
        let completed = dm_completion(&crown).unwrap();
        assert_eq!(completed.n(), 8);
        assert_eq!(key(&completed), key(&make_named(&NamedKind::Boolean(3)).unwrap()));
    }

    #[test]
    fn completions_are_deterministic() {
        let p = Poset::random(6, 42).unwrap();
        assert_eq!(dm_completion(&p).unwrap(), dm_completion(&p).unwrap());
    }
}
