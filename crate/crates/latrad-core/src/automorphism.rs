//! Order automorphisms and a canonical isomorphism key.
//!
//! Both operations are exact but factorial in the worst case, so they are
//! gated behind hard size limits and return an error above them.

use crate::elemset::ElemSet;
use crate::error::LatticeError;
use crate::lattice::Lattice;

/// Largest lattice for which [`Lattice::automorphisms`] will run.
pub const MAX_AUTOMORPHISM_ELEMENTS: usize = 12;
/// Largest lattice for which [`Lattice::canonical_key`] will run.
pub const MAX_CANONICAL_ELEMENTS: usize = 10;

/// An order-invariant fingerprint of one element: longest-chain rank from
/// the bottom, down-set size, up-set size, and cover degrees. Isomorphisms
/// preserve it, so search only needs to match elements with equal
/// signatures.
fn signatures(l: &Lattice) -> Vec<(u32, usize, usize, usize, usize)> {
    let (_, rank) = l.rank_from_bottom();
    (0..l.n())
        .map(|i| {
            (
                rank[i],
                l.down_set(i).len(),
                l.up_set(i).len(),
                l.covers_down(i).len(),
                l.covers_up(i).len(),
            )
        })
        .collect()
}

impl Lattice {
    /// All order automorphisms as permutations (`perm[i]` = image of `i`),
    /// sorted lexicographically; the identity is always first.
    ///
    /// Fails with [`LatticeError::SizeLimit`] above
    /// [`MAX_AUTOMORPHISM_ELEMENTS`] elements.
    pub fn automorphisms(&self) -> Result<Vec<Vec<usize>>, LatticeError> {
        let n = self.n();
        if n > MAX_AUTOMORPHISM_ELEMENTS {
            return Err(LatticeError::SizeLimit {
                n,
                max: MAX_AUTOMORPHISM_ELEMENTS,
            });
        }
        let sig = signatures(self);
        let mut image = vec![usize::MAX; n];
        let mut used = ElemSet::EMPTY;
        let mut out = Vec::new();
        self.extend_automorphism(&sig, 0, &mut image, &mut used, &mut out);
        out.sort_unstable();
        Ok(out)
    }

    fn extend_automorphism(
        &self,
        sig: &[(u32, usize, usize, usize, usize)],
        next: usize,
        image: &mut Vec<usize>,
        used: &mut ElemSet,
        out: &mut Vec<Vec<usize>>,
    ) {
        let n = self.n();
        if next == n {
            out.push(image.clone());
            return;
        }
        for cand in 0..n {
            if used.contains(cand) || sig[cand] != sig[next] {
                continue;
            }
            let consistent = (0..next).all(|prev| {
                self.leq(prev, next) == self.leq(image[prev], cand)
                    && self.leq(next, prev) == self.leq(cand, image[prev])
            });
            if !consistent {
                continue;
            }
            image[next] = cand;
            used.insert(cand);
            self.extend_automorphism(sig, next + 1, image, used, out);
            used.remove(cand);
            image[next] = usize::MAX;
        }
    }

    /// A canonical key: two lattices get equal keys iff they are
    /// order-isomorphic. The key is the lexicographically smallest
    /// relabeled order matrix, searched over relabelings that respect
    /// element signatures (sound because isomorphisms preserve them).
    ///
    /// Fails with [`LatticeError::SizeLimit`] above
    /// [`MAX_CANONICAL_ELEMENTS`] elements.
    pub fn canonical_key(&self) -> Result<String, LatticeError> {
        let n = self.n();
        if n > MAX_CANONICAL_ELEMENTS {
            return Err(LatticeError::SizeLimit {
                n,
                max: MAX_CANONICAL_ELEMENTS,
            });
        }
        let sig = signatures(self);

        // Group elements by signature; slot order is fixed by the sorted
        // signature sequence, so any isomorphism maps groups to groups.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| sig[i]);
        let mut groups: Vec<Vec<usize>> = Vec::new();
        for &i in &order {
            match groups.last_mut() {
                Some(g) if sig[g[0]] == sig[i] => g.push(i),
                _ => groups.push(vec![i]),
            }
        }

        let mut best: Option<Vec<u128>> = None;
        let mut arrangement: Vec<usize> = Vec::with_capacity(n);
        self.try_arrangements(&groups, 0, &mut arrangement, &mut best);
        let matrix = best.expect("at least one arrangement exists");

        let mut key = format!("n={n};sig=");
        for g in &groups {
            let (r, d, u, cd, cu) = sig[g[0]];
            key.push_str(&format!("[{}x{r},{d},{u},{cd},{cu}]", g.len()));
        }
        key.push_str(";m=");
        for row in matrix {
            key.push_str(&format!("{row:032x}."));
        }
        Ok(key)
    }

    fn try_arrangements(
        &self,
        groups: &[Vec<usize>],
        gi: usize,
        arrangement: &mut Vec<usize>,
        best: &mut Option<Vec<u128>>,
    ) {
        if gi == groups.len() {
            let matrix = self.relabeled_matrix(arrangement);
            if best.as_ref().map_or(true, |b| matrix < *b) {
                *best = Some(matrix);
            }
            return;
        }
        let mut members = groups[gi].clone();
        permute(&mut members, 0, &mut |perm| {
            arrangement.extend_from_slice(perm);
            self.try_arrangements(groups, gi + 1, arrangement, best);
            arrangement.truncate(arrangement.len() - perm.len());
        });
    }

    /// Order matrix rows under the relabeling `slot -> old element`.
    fn relabeled_matrix(&self, arrangement: &[usize]) -> Vec<u128> {
        arrangement
            .iter()
            .map(|&x| {
                let mut row = 0u128;
                for (c, &y) in arrangement.iter().enumerate() {
                    if self.leq(x, y) {
                        row |= 1 << c;
                    }
                }
                row
            })
            .collect()
    }
}

/// Swap-based enumeration calling `visit` with each permutation of `items`.
fn permute(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ids(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn m3(names: &[&str; 5]) -> Lattice {
        Lattice::from_covers(
            ids(names),
            &[
                (names[0], names[1]),
                (names[0], names[2]),
                (names[0], names[3]),
                (names[1], names[4]),
                (names[2], names[4]),
                (names[3], names[4]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(m3(&["0", "a", "b", "c", "1"]).automorphisms().unwrap().len(), 6);
        let diamond = Lattice::from_covers(
            ids(&["0", "a", "b", "1"]),
            &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")],
        )
        .unwrap();
        let auts = diamond.automorphisms().unwrap();
        assert_eq!(auts, vec![vec![0, 1, 2, 3], vec![0, 2, 1, 3]]);
        let pentagon = Lattice::from_covers(
            ids(&["0", "a", "b", "c", "1"]),
            &[("0", "a"), ("a", "1"), ("0", "b"), ("b", "c"), ("c", "1")],
        )
        .unwrap();
        assert_eq!(pentagon.automorphisms().unwrap().len(), 1);
    }

    #[test]
    fn automorphisms_preserve_order() {
        let l = m3(&["0", "a", "b", "c", "1"]);
        for perm in l.automorphisms().unwrap() {
            for x in 0..l.n() {
                for y in 0..l.n() {
                    assert_eq!(l.leq(x, y), l.leq(perm[x], perm[y]));
                }
            }
        }
    }

    #[test]
    fn canonical_key_is_isomorphism_invariant() {
        // Same shape, scrambled element order and different names.
        let a = m3(&["0", "a", "b", "c", "1"]);
        let b = Lattice::from_covers(
            ids(&["top", "x", "bot", "y", "z"]),
            &[
                ("bot", "x"),
                ("bot", "y"),
                ("bot", "z"),
                ("x", "top"),
                ("y", "top"),
                ("z", "top"),
            ],
        )
        .unwrap();
        assert_eq!(a.canonical_key().unwrap(), b.canonical_key().unwrap());

        let pentagon = Lattice::from_covers(
            ids(&["0", "a", "b", "c", "1"]),
            &[("0", "a"), ("a", "1"), ("0", "b"), ("b", "c"), ("c", "1")],
        )
        .unwrap();
        assert_ne!(
            a.canonical_key().unwrap(),
            pentagon.canonical_key().unwrap()
        );
    }

    #[test]
    fn size_limits_are_enforced() {
        let names: Vec<String> = (0..13).map(|i| format!("c{i}")).collect();
        let covers: Vec<(String, String)> = (1..13)
            .map(|i| (format!("c{}", i - 1), format!("c{i}")))
            .collect();
        let big = Lattice::from_covers(names, &covers).unwrap();
        assert!(matches!(
            big.automorphisms(),
            Err(LatticeError::SizeLimit { n: 13, .. })
        ));
        assert!(matches!(
            big.canonical_key(),
            Err(LatticeError::SizeLimit { n: 13, .. })
        ));
    }
}
