//! Finite posets: the input type for downset lattices and completions.
//!
//! A poset is stored as its full up-set matrix, like a lattice but without
//! bound or meet/join requirements. Constructors close the given pairs
//! reflexively and transitively and reject cycles.

use std::str::FromStr;

use latrad_core::{ElemSet, Lattice, MAX_ELEMENTS};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::GenError;

/// Isomorphism-class enumeration is exhaustive over labeled orders, which
/// grows super-exponentially; four points (219 labeled orders) is where the
/// corpus stops.
const MAX_ENUMERATED_POINTS: usize = 4;

/// A finite partially ordered set over named elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    ids: Vec<String>,
    /// `up[i]` = all `j` with `i <= j` (includes `i`).
    up: Vec<ElemSet>,
}

impl Poset {
    /// Builds a poset from element ids and order pairs `(lower, upper)`.
    ///
    /// The order is the reflexive-transitive closure of the pairs; a pair
    /// closing a cycle makes the would-be order symmetric somewhere and is
    /// rejected.
    pub fn new<S: AsRef<str>>(ids: Vec<String>, pairs: &[(S, S)]) -> Result<Poset, GenError> {
        let n = ids.len();
        if n == 0 {
            return Err(GenError::ZeroParameter("poset size"));
        }
        if n > MAX_ELEMENTS {
            return Err(GenError::SizeLimit {
                what: "poset elements",
                n,
                max: MAX_ELEMENTS,
            });
        }
        let index = |id: &str| {
            ids.iter()
                .position(|x| x == id)
                .ok_or_else(|| GenError::BadPoset(format!("unknown element id `{id}`")))
        };
        for (i, id) in ids.iter().enumerate() {
            if ids[..i].contains(id) {
                return Err(GenError::BadPoset(format!("duplicate element id `{id}`")));
            }
        }
        let mut up: Vec<ElemSet> = (0..n).map(ElemSet::singleton).collect();
        for (lo, hi) in pairs {
            let a = index(lo.as_ref())?;
            let b = index(hi.as_ref())?;
            up[a].insert(b);
        }
        close_transitively(&mut up);
        for a in 0..n {
            for b in up[a].iter() {
                if b != a && up[b].contains(a) {
                    return Err(GenError::BadPoset(format!(
                        "`{}` and `{}` are ordered both ways",
                        ids[a], ids[b]
                    )));
                }
            }
        }
        Ok(Poset { ids, up })
    }

    /// Views a lattice as a bare poset (same elements, same order).
    pub fn from_lattice(lattice: &Lattice) -> Poset {
        Poset {
            ids: lattice.ids().to_vec(),
            up: (0..lattice.n()).map(|i| lattice.up_set(i)).collect(),
        }
    }

    /// A random poset: each pair `i < j` of indices is ordered with
    /// probability one half, then closed transitively. Deterministic in the
    /// seed.
    pub fn random(n: usize, seed: u64) -> Result<Poset, GenError> {
        if n == 0 {
            return Err(GenError::ZeroParameter("poset size"));
        }
        if n > MAX_ELEMENTS {
            return Err(GenError::SizeLimit {
                what: "poset elements",
                n,
                max: MAX_ELEMENTS,
            });
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut up: Vec<ElemSet> = (0..n).map(ElemSet::singleton).collect();
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen::<bool>() {
                    up[i].insert(j);
                }
            }
        }
        close_transitively(&mut up);
        Ok(Poset {
            ids: (0..n).map(|i| format!("p{i}")).collect(),
            up,
        })
    }

    pub fn n(&self) -> usize {
        self.ids.len()
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn id(&self, i: usize) -> &str {
        &self.ids[i]
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    /// All `j` with `i <= j`, including `i`.
    pub fn up_set(&self, i: usize) -> ElemSet {
        self.up[i]
    }

    /// All `j` with `j <= i`, including `i`.
    pub fn down_set(&self, i: usize) -> ElemSet {
        (0..self.n()).filter(|&j| self.up[j].contains(i)).collect()
    }
}

fn close_transitively(up: &mut [ElemSet]) {
    let n = up.len();
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..n {
            let mut acc = up[i];
            for j in up[i].iter() {
                acc = acc | up[j];
            }
            if acc != up[i] {
                up[i] = acc;
                changed = true;
            }
        }
    }
}

/// All posets on `n ≤ 4` points, one representative per isomorphism class,
/// in a deterministic order.
///
/// Labeled orders are enumerated exhaustively (every reflexive bit matrix
/// that is antisymmetric and transitive) and deduplicated by the minimal
/// relabeling of their strict-pair mask.
pub fn all_posets(n: usize) -> Result<Vec<Poset>, GenError> {
    if n == 0 {
        return Err(GenError::ZeroParameter("poset size"));
    }
    if n > MAX_ENUMERATED_POINTS {
        return Err(GenError::SizeLimit {
            what: "enumerated poset points",
            n,
            max: MAX_ENUMERATED_POINTS,
        });
    }
    // Relabelings permute each isomorphism class, so exactly one member of
    // each class is its own minimal relabeling; keeping those members
    // yields one representative per class, already in ascending mask order.
    let perms = permutations(n);
    let mut out = Vec::new();
    for mask in labeled_strict_orders(n) {
        let canonical = perms
            .iter()
            .map(|p| relabel(mask, p, n))
            .min()
            .expect("at least the identity relabeling exists");
        if canonical == mask {
            out.push(poset_from_mask(mask, n));
        }
    }
    Ok(out)
}

/// Strict-order bit masks (bit `i*n+j` set iff `i < j` strictly) of every
/// labeled partial order on `n` points, ascending.
fn labeled_strict_orders(n: usize) -> Vec<u32> {
    let cells: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| i != j)
        .collect();
    let mut out = Vec::new();
    'candidates: for choice in 0u32..1 << cells.len() {
        let mut strict = [[false; 4]; 4];
        for (k, &(i, j)) in cells.iter().enumerate() {
            strict[i][j] = choice & (1 << k) != 0;
        }
        for i in 0..n {
            for j in 0..n {
                if strict[i][j] && strict[j][i] {
                    continue 'candidates;
                }
                for k in 0..n {
                    if strict[i][j] && strict[j][k] && !strict[i][k] {
                        continue 'candidates;
                    }
                }
            }
        }
        let mut mask = 0u32;
        for i in 0..n {
            for j in 0..n {
                if strict[i][j] {
                    mask |= 1 << (i * n + j);
                }
            }
        }
        out.push(mask);
    }
    out.sort_unstable();
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    fn heap(k: usize, items: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(items.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, items, out);
            if k % 2 == 0 {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut items, &mut out);
    out.sort_unstable();
    out
}

fn relabel(mask: u32, perm: &[usize], n: usize) -> u32 {
    let mut out = 0u32;
    for i in 0..n {
        for j in 0..n {
            if mask & (1 << (i * n + j)) != 0 {
                out |= 1 << (perm[i] * n + perm[j]);
            }
        }
    }
    out
}

fn poset_from_mask(mask: u32, n: usize) -> Poset {
    let up: Vec<ElemSet> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| j == i || mask & (1 << (i * n + j)) != 0)
                .collect()
        })
        .collect();
    Poset {
        ids: (0..n).map(|i| format!("p{i}")).collect(),
        up,
    }
}

/// Parses a poset given inline as `id<id` pairs separated by semicolons,
/// with an optional leading `ids:` list for isolated elements — e.g.
/// `a<b;a<c` or `ids:a,b,c,d;a<b`.
impl FromStr for Poset {
    type Err = GenError;

    fn from_str(s: &str) -> Result<Poset, GenError> {
        let mut ids: Vec<String> = Vec::new();
        let mut pairs: Vec<(String, String)> = Vec::new();
        let push_id = |ids: &mut Vec<String>, id: &str| {
            if !ids.iter().any(|x| x == id) {
                ids.push(id.to_owned());
            }
        };
        for part in s.split(';').filter(|p| !p.is_empty()) {
            if let Some(list) = part.strip_prefix("ids:") {
                for id in list.split(',').filter(|p| !p.is_empty()) {
                    push_id(&mut ids, id.trim());
                }
            } else if let Some((lo, hi)) = part.split_once('<') {
                let (lo, hi) = (lo.trim(), hi.trim());
                if lo.is_empty() || hi.is_empty() {
                    return Err(GenError::BadPoset(format!("malformed pair `{part}`")));
                }
                push_id(&mut ids, lo);
                push_id(&mut ids, hi);
                pairs.push((lo.to_owned(), hi.to_owned()));
            } else {
                return Err(GenError::BadPoset(format!(
                    "expected `lo<hi` or `ids:...`, got `{part}`"
                )));
            }
        }
        Poset::new(ids, &pairs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_closes_and_validates() {
        let p: Poset = "a<b;b<c".parse().unwrap();
        assert!(p.leq(0, 2), "transitive closure takes a to c");
        assert!(p.leq(1, 1));
        assert!(!p.leq(2, 0));

        let err = "a<b;b<a".parse::<Poset>().unwrap_err();
        assert!(matches!(err, GenError::BadPoset(_)));

        let with_isolated: Poset = "ids:a,b,c;a<b".parse().unwrap();
        assert_eq!(with_isolated.n(), 3);
        assert!(!with_isolated.leq(0, 2));
    }

    #[test]
    fn labeled_and_class_counts_match_the_literature() {
        // Labeled partial orders on 1..4 points: 1, 3, 19, 219.
        assert_eq!(labeled_strict_orders(1).len(), 1);
        assert_eq!(labeled_strict_orders(2).len(), 3);
        assert_eq!(labeled_strict_orders(3).len(), 19);
        assert_eq!(labeled_strict_orders(4).len(), 219);

        // Isomorphism classes on 1..4 points: 1, 2, 5, 16.
        assert_eq!(all_posets(1).unwrap().len(), 1);
        assert_eq!(all_posets(2).unwrap().len(), 2);
        assert_eq!(all_posets(3).unwrap().len(), 5);
        assert_eq!(all_posets(4).unwrap().len(), 16);

        assert!(matches!(
            all_posets(5).unwrap_err(),
            GenError::SizeLimit { .. }
        ));
    }

    #[test]
    fn random_posets_are_seed_deterministic() {
        let a = Poset::random(6, 7).unwrap();
        let b = Poset::random(6, 7).unwrap();
        assert_eq!(a, b);
        let c = Poset::random(6, 8).unwrap();
        assert_ne!(a, c, "a different seed gives a different order");
    }

    #[test]
    fn lattices_downgrade_to_posets() {
        let l = Lattice::from_covers(
            vec!["0".into(), "a".into(), "b".into(), "1".into()],
            &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")],
        )
        .unwrap();
        let p = Poset::from_lattice(&l);
        assert_eq!(p.n(), 4);
        assert!(p.leq(0, 3));
        assert!(!p.leq(1, 2));
        assert_eq!(p.down_set(3), ElemSet::full(4));
    }
}
