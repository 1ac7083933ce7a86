//! The [`Lattice`] type: a finite complete lattice with precomputed tables.
//!
//! A lattice is built once (from cover pairs or a full order matrix),
//! validated, and then immutable. Construction precomputes up-sets,
//! down-sets, the cover relation (transitive reduction), bottom/top and the
//! full meet/join tables, so queries afterwards are table lookups and bitset
//! intersections.

use std::collections::HashMap;
use std::fmt;

use crate::elemset::{ElemSet, MAX_ELEMENTS};
use crate::error::LatticeError;

/// A finite complete lattice over named elements.
///
/// Elements are addressed by index (their position in the id list given at
/// construction); ids are only used at the serialization boundary and in
/// error messages.
#[derive(Clone)]
pub struct Lattice {
    ids: Vec<String>,
    index: HashMap<String, usize>,
    /// `up[i]` = all `j` with `i <= j` (includes `i`).
    up: Vec<ElemSet>,
    /// `down[i]` = all `j` with `j <= i` (includes `i`).
    down: Vec<ElemSet>,
    /// Cover pairs `(a, b)` with `a` covered by `b`, sorted.
    covers: Vec<(usize, usize)>,
    /// `covers_up[i]` = elements covering `i`.
    covers_up: Vec<ElemSet>,
    /// `covers_down[i]` = elements covered by `i`.
    covers_down: Vec<ElemSet>,
    bottom: usize,
    top: usize,
    /// Row-major `n * n` meet table.
    meet: Vec<usize>,
    /// Row-major `n * n` join table.
    join: Vec<usize>,
}

impl Lattice {
    /// Builds a lattice from element ids and cover pairs `(lower, upper)`.
    ///
    /// The order is the reflexive-transitive closure of the pairs. Pairs
    /// that turn out to be transitively implied are accepted and simply do
    /// not appear as covers; self-pairs are ignored. Fails if the ids are
    /// not unique, a pair names an unknown id, the pairs form a cycle,
    /// bottom or top is missing, or some pair of elements lacks a unique
    /// meet or join.
    pub fn from_covers<S: AsRef<str>>(
        ids: Vec<String>,
        covers: &[(S, S)],
    ) -> Result<Lattice, LatticeError> {
        let n = ids.len();
        if n == 0 {
            return Err(LatticeError::Empty);
        }
        if n > MAX_ELEMENTS {
            return Err(LatticeError::SizeLimit {
                n,
                max: MAX_ELEMENTS,
            });
        }
        let mut index = HashMap::with_capacity(n);
        for (i, id) in ids.iter().enumerate() {
            if index.insert(id.clone(), i).is_some() {
                return Err(LatticeError::DuplicateElement(id.clone()));
            }
        }

        let mut next = vec![ElemSet::EMPTY; n];
        for (lo, hi) in covers {
            let &a = index
                .get(lo.as_ref())
                .ok_or_else(|| LatticeError::UnknownElement(lo.as_ref().to_owned()))?;
            let &b = index
                .get(hi.as_ref())
                .ok_or_else(|| LatticeError::UnknownElement(hi.as_ref().to_owned()))?;
            if a != b {
                next[a].insert(b);
            }
        }

        // Reflexive-transitive closure, then cycle detection.
        let mut up: Vec<ElemSet> = (0..n).map(|i| next[i].with(i)).collect();
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
        for i in 0..n {
            for j in up[i].iter() {
                if j != i && up[j].contains(i) {
                    return Err(LatticeError::CyclicCovers(ids[i].clone()));
                }
            }
        }

        Self::build(ids, index, up)
    }

    /// Builds a lattice from a full order matrix: `leq[i]` must be the
    /// up-set of `i` (all `j` with `i <= j`, including `i` itself).
    ///
    /// Validates that the matrix is a partial order before the usual
    /// bound/meet/join validation.
    pub fn from_leq(ids: Vec<String>, leq: Vec<ElemSet>) -> Result<Lattice, LatticeError> {
        let n = ids.len();
        if n == 0 {
            return Err(LatticeError::Empty);
        }
        if n > MAX_ELEMENTS {
            return Err(LatticeError::SizeLimit {
                n,
                max: MAX_ELEMENTS,
            });
        }
        if leq.len() != n {
            return Err(LatticeError::NotAPartialOrder(format!(
                "{} rows for {} elements",
                leq.len(),
                n
            )));
        }
        let mut index = HashMap::with_capacity(n);
        for (i, id) in ids.iter().enumerate() {
            if index.insert(id.clone(), i).is_some() {
                return Err(LatticeError::DuplicateElement(id.clone()));
            }
        }
        let full = ElemSet::full(n);
        for i in 0..n {
            if !leq[i].is_subset(full) {
                return Err(LatticeError::NotAPartialOrder(format!(
                    "row `{}` mentions out-of-range elements",
                    ids[i]
                )));
            }
            if !leq[i].contains(i) {
                return Err(LatticeError::NotAPartialOrder(format!(
                    "`{}` is not reflexive",
                    ids[i]
                )));
            }
            for j in leq[i].iter() {
                if j != i && leq[j].contains(i) {
                    return Err(LatticeError::NotAPartialOrder(format!(
                        "`{}` and `{}` below each other",
                        ids[i], ids[j]
                    )));
                }
                if !leq[j].is_subset(leq[i]) {
                    return Err(LatticeError::NotAPartialOrder(format!(
                        "transitivity fails at `{}` <= `{}`",
                        ids[i], ids[j]
                    )));
                }
            }
        }
        Self::build(ids, index, leq)
    }

    /// Shared tail of construction: bounds, covers, meet/join tables.
    fn build(
        ids: Vec<String>,
        index: HashMap<String, usize>,
        up: Vec<ElemSet>,
    ) -> Result<Lattice, LatticeError> {
        let n = ids.len();
        let full = ElemSet::full(n);

        let mut down = vec![ElemSet::EMPTY; n];
        for i in 0..n {
            for j in up[i].iter() {
                down[j].insert(i);
            }
        }

        let bottoms: Vec<usize> = (0..n).filter(|&i| up[i] == full).collect();
        if bottoms.len() != 1 {
            let minimal = (0..n)
                .filter(|&i| down[i].len() == 1)
                .map(|i| ids[i].clone())
                .collect();
            return Err(LatticeError::NoBound {
                which: "bottom",
                candidates: minimal,
            });
        }
        let tops: Vec<usize> = (0..n).filter(|&i| down[i] == full).collect();
        if tops.len() != 1 {
            let maximal = (0..n)
                .filter(|&i| up[i].len() == 1)
                .map(|i| ids[i].clone())
                .collect();
            return Err(LatticeError::NoBound {
                which: "top",
                candidates: maximal,
            });
        }
        let (bottom, top) = (bottoms[0], tops[0]);

        let mut meet = vec![0usize; n * n];
        let mut join = vec![0usize; n * n];
        for i in 0..n {
            for j in i..n {
                let lb = down[i] & down[j];
                let m = lb
                    .iter()
                    .find(|&m| lb.is_subset(down[m]))
                    .ok_or_else(|| LatticeError::NotALattice {
                        a: ids[i].clone(),
                        b: ids[j].clone(),
                        op: "meet",
                    })?;
                meet[i * n + j] = m;
                meet[j * n + i] = m;
                let ub = up[i] & up[j];
                let u = ub
                    .iter()
                    .find(|&u| ub.is_subset(up[u]))
                    .ok_or_else(|| LatticeError::NotALattice {
                        a: ids[i].clone(),
                        b: ids[j].clone(),
                        op: "join",
                    })?;
                join[i * n + j] = u;
                join[j * n + i] = u;
            }
        }

        let mut covers = Vec::new();
        let mut covers_up = vec![ElemSet::EMPTY; n];
        let mut covers_down = vec![ElemSet::EMPTY; n];
        for a in 0..n {
            let strictly_above = up[a].without(a);
            for b in strictly_above.iter() {
                let between = strictly_above & down[b].without(b);
                if between.is_empty() {
                    covers.push((a, b));
                    covers_up[a].insert(b);
                    covers_down[b].insert(a);
                }
            }
        }
        covers.sort_unstable();

        Ok(Lattice {
            ids,
            index,
            up,
            down,
            covers,
            covers_up,
            covers_down,
            bottom,
            top,
            meet,
            join,
        })
    }

    /// Number of elements.
    #[inline]
    pub fn n(&self) -> usize {
        self.ids.len()
    }

    /// All element indices as a set.
    #[inline]
    pub fn all(&self) -> ElemSet {
        ElemSet::full(self.n())
    }

    /// Element ids in index order.
    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    /// The id of element `i`.
    pub fn id(&self, i: usize) -> &str {
        &self.ids[i]
    }

    /// Looks an element up by id.
    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    #[inline]
    pub fn bottom(&self) -> usize {
        self.bottom
    }

    #[inline]
    pub fn top(&self) -> usize {
        self.top
    }

    /// `a <= b`?
    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    /// `a < b`?
    #[inline]
    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    /// Are `a` and `b` comparable?
    #[inline]
    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    /// All `j >= a` (including `a`).
    #[inline]
    pub fn up_set(&self, a: usize) -> ElemSet {
        self.up[a]
    }

    /// All `j <= a` (including `a`).
    #[inline]
    pub fn down_set(&self, a: usize) -> ElemSet {
        self.down[a]
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.n() + b]
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.n() + b]
    }

    /// Meet of a set of elements; the empty meet is the top.
    pub fn meet_set(&self, s: ElemSet) -> usize {
        s.iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    /// Join of a set of elements; the empty join is the bottom.
    pub fn join_set(&self, s: ElemSet) -> usize {
        s.iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// The interval `[a, b]` as a set; fails unless `a <= b`.
    pub fn interval(&self, a: usize, b: usize) -> Result<ElemSet, LatticeError> {
        if !self.leq(a, b) {
            return Err(LatticeError::NotComparable {
                a: self.ids[a].clone(),
                b: self.ids[b].clone(),
            });
        }
        Ok(self.up[a] & self.down[b])
    }

    /// Does `b` cover `a` (i.e. `a < b` with nothing strictly between)?
    #[inline]
    pub fn is_gap(&self, a: usize, b: usize) -> bool {
        self.covers_up[a].contains(b)
    }

    /// Cover pairs `(lower, upper)`, sorted by index.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Elements covering `a`.
    #[inline]
    pub fn covers_up(&self, a: usize) -> ElemSet {
        self.covers_up[a]
    }

    /// Elements covered by `a`.
    #[inline]
    pub fn covers_down(&self, a: usize) -> ElemSet {
        self.covers_down[a]
    }

    /// All maximal chains, each listed bottom to top, in lexicographic
    /// order of their index sequences.
    pub fn maximal_chains(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut chain = vec![self.bottom];
        self.extend_chain(&mut chain, &mut out);
        out
    }

    fn extend_chain(&self, chain: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let last = *chain.last().expect("chain starts at bottom");
        if last == self.top {
            out.push(chain.clone());
            return;
        }
        for next in self.covers_up[last].iter() {
            chain.push(next);
            self.extend_chain(chain, out);
            chain.pop();
        }
    }

    /// The order-dual lattice: same ids, all comparisons reversed.
    pub fn dual(&self) -> Lattice {
        Lattice {
            ids: self.ids.clone(),
            index: self.index.clone(),
            up: self.down.clone(),
            down: self.up.clone(),
            covers: {
                let mut c: Vec<_> = self.covers.iter().map(|&(a, b)| (b, a)).collect();
                c.sort_unstable();
                c
            },
            covers_up: self.covers_down.clone(),
            covers_down: self.covers_up.clone(),
            bottom: self.top,
            top: self.bottom,
            meet: self.join.clone(),
            join: self.meet.clone(),
        }
    }

    /// Renders one element per line with its covers; handy in test output.
    pub fn describe(&self) -> String {
        let mut s = String::new();
        for i in 0..self.n() {
            let ups: Vec<&str> = self.covers_up[i].iter().map(|j| self.id(j)).collect();
            s.push_str(&format!("{} -> {{{}}}\n", self.ids[i], ups.join(", ")));
        }
        s
    }
}

impl PartialEq for Lattice {
    /// Structural equality: same ids in the same order, same order relation.
    fn eq(&self, other: &Self) -> bool {
        self.ids == other.ids && self.up == other.up
    }
}

impl Eq for Lattice {}

impl fmt::Debug for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Lattice")
            .field("n", &self.n())
            .field("ids", &self.ids)
            .field("covers", &self.covers)
            .finish()
    }
}
