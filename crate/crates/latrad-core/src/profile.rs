//! Structural classification: modularity, distributivity, the
//! infinite-distributive identities (unrestricted and chain-restricted),
//! and gradedness.
//!
//! Modularity is computed twice — once through the modular identity, once
//! through a pentagon-sublattice search — and the two answers are asserted
//! to agree, so a bug in either detector trips loudly instead of skewing
//! downstream classifications.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::elemset::ElemSet;
use crate::lattice::Lattice;

/// Below/at this size the subset-quantified identities are checked over all
/// `2^n` subsets; above it, over all pairs plus seeded random subsets.
const EXHAUSTIVE_SUBSETS_MAX: usize = 12;
/// Random subsets drawn per identity when sampling.
const RANDOM_SUBSETS: usize = 10_000;
/// Random subsets drawn per maximal chain longer than the exhaustive cap.
const RANDOM_CHAIN_SUBSETS: usize = 256;

const SALT_JID: u64 = 0x9e37_79b9_7f4a_7c15;
const SALT_JIDC: u64 = 0xc2b2_ae3d_27d4_eb4f;

/// Structural flags of a finite lattice.
///
/// `jid` / `mid` record whether `a ∧ ∨G = ∨{a ∧ g | g ∈ G}` (resp. the
/// order-dual identity) holds over subsets `G`; `jidc` / `midc` restrict
/// `G` to chains. `rank` is present exactly when the lattice is graded, and
/// then maps each element to its rank with the bottom at 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureProfile {
    pub modular: bool,
    pub distributive: bool,
    pub jid: bool,
    pub mid: bool,
    pub jidc: bool,
    pub midc: bool,
    pub graded: bool,
    pub rank: Option<Vec<u32>>,
}

impl Lattice {
    /// Computes the full structural profile.
    ///
    /// `seed` only influences the sampled fallbacks used on lattices too
    /// large for exhaustive subset quantification; the flags are a pure
    /// function of the lattice for any fixed seed.
    pub fn structure_profile(&self, seed: u64) -> StructureProfile {
        let by_identity = modular_by_identity(self);
        let by_pentagon = pentagon_witness(self).is_none();
        assert_eq!(
            by_identity, by_pentagon,
            "modularity detectors disagree — this is a bug"
        );

        let dual = self.dual();
        let (graded, rank) = rank_vector(self);
        StructureProfile {
            modular: by_identity,
            distributive: distributive_identity(self),
            jid: join_meets_distribute(self, seed),
            mid: join_meets_distribute(&dual, seed),
            jidc: chains_distribute(self, seed),
            midc: chains_distribute(&dual, seed),
            graded,
            rank: graded.then_some(rank),
        }
    }

    /// Longest-chain rank from the bottom, plus whether it grades the
    /// lattice (every cover raises it by exactly one).
    pub fn rank_from_bottom(&self) -> (bool, Vec<u32>) {
        rank_vector(self)
    }
}

/// `a ∨ (b ∧ z) == b ∧ (a ∨ z)` for all `a <= b` and all `z`.
fn modular_by_identity(l: &Lattice) -> bool {
    let n = l.n();
    for a in 0..n {
        for b in l.up_set(a).iter() {
            for z in 0..n {
                if l.join(a, l.meet(b, z)) != l.meet(b, l.join(a, z)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Searches for a pentagon sublattice: `a < b` and `c` with
/// `a ∧ c = b ∧ c` and `a ∨ c = b ∨ c`. Such a triple spans a sublattice
/// isomorphic to the five-element non-modular lattice.
fn pentagon_witness(l: &Lattice) -> Option<(usize, usize, usize)> {
    let n = l.n();
    for a in 0..n {
        for b in l.up_set(a).without(a).iter() {
            for c in 0..n {
                if l.meet(a, c) == l.meet(b, c) && l.join(a, c) == l.join(b, c) {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

/// `a ∧ (b ∨ c) == (a ∧ b) ∨ (a ∧ c)` for all triples.
fn distributive_identity(l: &Lattice) -> bool {
    let n = l.n();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c)) {
                    return false;
                }
            }
        }
    }
    true
}

/// `a ∧ ∨G == ∨{a ∧ g | g ∈ G}` quantified over subsets `G`.
///
/// Exhaustive for small lattices; otherwise all two-element subsets plus
/// seeded random subsets.
fn join_meets_distribute(l: &Lattice, seed: u64) -> bool {
    let n = l.n();
    if n <= EXHAUSTIVE_SUBSETS_MAX {
        let size = 1usize << n;
        let mut joins = vec![0usize; size];
        joins[0] = l.bottom();
        for mask in 1..size {
            let low = mask.trailing_zeros() as usize;
            joins[mask] = l.join(joins[mask & (mask - 1)], low);
        }
        let mut folded = vec![0usize; size];
        for a in 0..n {
            folded[0] = l.bottom();
            for mask in 1..size {
                let low = mask.trailing_zeros() as usize;
                folded[mask] = l.join(folded[mask & (mask - 1)], l.meet(a, low));
            }
            for mask in 0..size {
                if l.meet(a, joins[mask]) != folded[mask] {
                    return false;
                }
            }
        }
        return true;
    }

    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c)) {
                    return false;
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ SALT_JID);
    for _ in 0..RANDOM_SUBSETS {
        let g = random_subset(&mut rng, l.all());
        if !subset_distributes(l, g) {
            return false;
        }
    }
    true
}

/// The same identity with `G` restricted to chains: checked over subsets
/// of every maximal chain (every chain extends to a maximal one).
fn chains_distribute(l: &Lattice, seed: u64) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ SALT_JIDC);
    for chain in l.maximal_chains() {
        let k = chain.len();
        if k <= EXHAUSTIVE_SUBSETS_MAX {
            for mask in 1usize..(1 << k) {
                let g: ElemSet = (0..k).filter(|&i| mask >> i & 1 == 1).map(|i| chain[i]).collect();
                if !subset_distributes(l, g) {
                    return false;
                }
            }
        } else {
            let full: ElemSet = chain.iter().copied().collect();
            for _ in 0..RANDOM_CHAIN_SUBSETS {
                let g = random_subset(&mut rng, full);
                if !subset_distributes(l, g) {
                    return false;
                }
            }
        }
    }
    true
}

fn random_subset(rng: &mut ChaCha8Rng, within: ElemSet) -> ElemSet {
    ElemSet::from_bits(rng.gen::<u128>() & within.bits())
}

fn subset_distributes(l: &Lattice, g: ElemSet) -> bool {
    let jg = l.join_set(g);
    (0..l.n()).all(|a| {
        let rhs = g.iter().fold(l.bottom(), |acc, x| l.join(acc, l.meet(a, x)));
        l.meet(a, jg) == rhs
    })
}

fn rank_vector(l: &Lattice) -> (bool, Vec<u32>) {
    let n = l.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| l.down_set(i).len());
    let mut rank = vec![0u32; n];
    for &i in &order {
        for j in l.covers_down(i).iter() {
            rank[i] = rank[i].max(rank[j] + 1);
        }
    }
    let graded = l.covers().iter().all(|&(a, b)| rank[b] == rank[a] + 1);
    (graded, rank)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ids(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn m3() -> Lattice {
        Lattice::from_covers(
            ids(&["0", "a", "b", "c", "1"]),
            &[
                ("0", "a"),
                ("0", "b"),
                ("0", "c"),
                ("a", "1"),
                ("b", "1"),
                ("c", "1"),
            ],
        )
        .unwrap()
    }

    fn n5() -> Lattice {
        // 0 < a < 1 and 0 < b < c < 1, with a incomparable to b and c.
        Lattice::from_covers(
            ids(&["0", "a", "b", "c", "1"]),
            &[("0", "a"), ("a", "1"), ("0", "b"), ("b", "c"), ("c", "1")],
        )
        .unwrap()
    }

    fn chain(k: usize) -> Lattice {
        let names: Vec<String> = (0..k).map(|i| format!("c{i}")).collect();
        let covers: Vec<(String, String)> = (1..k)
            .map(|i| (format!("c{}", i - 1), format!("c{i}")))
            .collect();
        Lattice::from_covers(names, &covers).unwrap()
    }

    #[test]
    fn diamond_lattice_is_modular_not_distributive() {
        let p = m3().structure_profile(0);
        assert!(p.modular && !p.distributive);
        assert!(!p.jid && !p.mid);
        assert!(p.jidc && p.midc);
        assert!(p.graded);
        assert_eq!(p.rank.unwrap(), vec![0, 1, 1, 1, 2]);
    }

    #[test]
    fn pentagon_lattice_is_not_modular_not_graded() {
        let p = n5().structure_profile(0);
        assert!(!p.modular && !p.distributive && !p.jid && !p.mid);
        assert!(p.jidc && p.midc);
        assert!(!p.graded);
        assert!(p.rank.is_none());
    }

    #[test]
    fn chains_satisfy_everything() {
        let p = chain(6).structure_profile(0);
        assert!(p.modular && p.distributive && p.jid && p.mid && p.jidc && p.midc);
        assert_eq!(p.rank.unwrap(), vec![0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn sampled_path_agrees_with_exhaustive_on_a_distributive_host() {
        // 13 elements forces the sampled branch; a chain is distributive,
        // so every identity must still come back true.
        let p = chain(13).structure_profile(7);
        assert!(p.jid && p.mid && p.distributive);
    }

    #[test]
    fn pentagon_witness_spans_a_pentagon() {
        let l = n5();
        let (a, b, c) = pentagon_witness(&l).unwrap();
        assert!(l.lt(a, b));
        assert_eq!(l.meet(a, c), l.meet(b, c));
        assert_eq!(l.join(a, c), l.join(b, c));
    }
}
