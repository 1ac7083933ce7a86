//! Chain closures: relating elements joined by chains of related pairs.
//!
//! The two directed closures assemble chains from the bottom up or from
//! the top down; on a finite host both come out as plain reachability
//! through related pairs, i.e. the transitive closure. They are kept as
//! separate operations (and computed by different algorithms) because
//! they answer different questions, and the tests hold them to each other.

use std::collections::VecDeque;

use latrad_core::ElemSet;

use crate::error::RelError;
use crate::rel::Rel;

impl Rel {
    /// The transitive closure, computed by row saturation. The input is
    /// reflexive, so this is also the reflexive-transitive closure.
    pub fn transitive_closure(&self) -> Rel {
        let host = self.host();
        let n = host.n();
        let mut rows: Vec<ElemSet> = (0..n).map(|a| self.row(a)).collect();
        loop {
            let mut changed = false;
            for a in 0..n {
                let mut acc = rows[a];
                for b in rows[a].iter() {
                    acc = acc | rows[b];
                }
                if acc != rows[a] {
                    rows[a] = acc;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        Rel::from_raw(host.clone(), rows)
    }

    /// Closure under ascending chains of related pairs: `a` becomes related
    /// to everything reachable from it through strictly related steps.
    /// Computed as graph reachability — deliberately not by row saturation,
    /// so it can serve as an independent check of [`Rel::transitive_closure`].
    pub fn chain_closure_up(&self) -> Rel {
        let host = self.host();
        let rows = (0..host.n())
            .map(|a| {
                let mut seen = ElemSet::singleton(a);
                let mut frontier = vec![a];
                while let Some(x) = frontier.pop() {
                    for y in self.row(x).without(x).iter() {
                        if !seen.contains(y) {
                            seen.insert(y);
                            frontier.push(y);
                        }
                    }
                }
                seen
            })
            .collect();
        Rel::from_raw(host.clone(), rows)
    }

    /// Closure under descending chains of related pairs, computed as the
    /// ascending closure of the transposed relation read back on the
    /// original host. Finitely it coincides with [`Rel::chain_closure_up`];
    /// the tests insist on that.
    pub fn chain_closure_down(&self) -> Rel {
        let via_dual = self.dual().chain_closure_up().dual();
        let rows = (0..self.host().n()).map(|a| via_dual.row(a)).collect();
        Rel::from_raw(self.host().clone(), rows)
    }

    /// Relates `a` to `b` when some chain from `a` to `b` has every
    /// consecutive pair related. A finite chain is densely packed with
    /// related gaps exactly when each consecutive pair is related, so this
    /// reduces to reachability through related pairs — the transitive
    /// closure again, by way of a different reading.
    pub fn gap_dense(&self) -> Rel {
        self.transitive_closure()
    }

    /// A shortest chain of related pairs from `a` to `b`, ties broken
    /// toward smaller element indices. Fails with [`RelError::NoWitness`]
    /// when no such chain exists.
    pub fn witness_path(&self, a: usize, b: usize) -> Result<Vec<usize>, RelError> {
        let host = self.host();
        if a == b {
            return Ok(vec![a]);
        }
        // Breadth-first search recording first parents. Within each layer
        // vertices are dequeued in the lexicographic order of their path
        // prefixes (earlier parents first, then ascending index), so the
        // recorded path to `b` is the lexicographically least among the
        // shortest.
        let mut parent = vec![usize::MAX; host.n()];
        let mut queue = VecDeque::new();
        parent[a] = a;
        queue.push_back(a);
        while let Some(x) = queue.pop_front() {
            for y in self.row(x).without(x).iter() {
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if parent[b] == usize::MAX {
            return Err(RelError::NoWitness {
                a: host.id(a).to_owned(),
                b: host.id(b).to_owned(),
            });
        }
        let mut path = vec![b];
        while *path.last().expect("nonempty") != a {
            let last = *path.last().expect("nonempty");
            path.push(parent[last]);
        }
        path.reverse();
        Ok(path)
    }
}
