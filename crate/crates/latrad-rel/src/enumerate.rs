//! Enumeration and sampling of relations on a host.
//!
//! A relation is determined by which strict order pairs it contains, so the
//! whole relation space of a host is the powerset of its strict pairs —
//! walkable exhaustively on small hosts and sampled on larger ones.

use std::sync::Arc;

use latrad_core::Lattice;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::rel::Rel;

/// All strict pairs of the host order, sorted.
pub fn strict_leq_pairs(host: &Lattice) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for a in 0..host.n() {
        for b in host.up_set(a).without(a).iter() {
            out.push((a, b));
        }
    }
    out
}

/// The relation containing exactly the strict pairs selected by `mask`.
pub fn rel_from_mask(host: &Arc<Lattice>, pairs: &[(usize, usize)], mask: u64) -> Rel {
    let selected: Vec<(usize, usize)> = pairs
        .iter()
        .enumerate()
        .filter(|&(i, _)| mask >> i & 1 == 1)
        .map(|(_, &p)| p)
        .collect();
    Rel::from_pairs(host.clone(), &selected).expect("pairs come from the host order")
}

/// Iterates over every relation on the host, from equality upward.
///
/// There are `2^k` of them for `k` strict order pairs; the caller is
/// responsible for checking that `k` fits its budget (see
/// [`strict_leq_pairs`]).
pub fn all_rels(host: &Arc<Lattice>) -> impl Iterator<Item = Rel> + '_ {
    let pairs = strict_leq_pairs(host);
    assert!(
        pairs.len() < 64,
        "exhaustive enumeration needs fewer than 64 strict pairs"
    );
    (0u64..1 << pairs.len()).map(move |mask| rel_from_mask(host, &pairs, mask))
}

/// Draws `count` relations uniformly at random (by independent fair coins
/// on each strict pair), deterministically in `seed`.
pub fn random_rels(host: &Arc<Lattice>, count: usize, seed: u64) -> Vec<Rel> {
    let pairs = strict_leq_pairs(host);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let selected: Vec<(usize, usize)> = pairs
                .iter()
                .filter(|_| rng.gen::<bool>())
                .copied()
                .collect();
            Rel::from_pairs(host.clone(), &selected).expect("pairs come from the host order")
        })
        .collect()
}
