//! The [`Rel`] type: a reflexive relation contained in the host order.
//!
//! A relation stores one bitset row per element (`rows[a]` = everything `a`
//! is related to). Construction enforces the two standing invariants —
//! reflexivity and compatibility with the host order (`a` related to `b`
//! implies `a <= b`) — so every `Rel` in circulation is a member of the
//! reflexive relation space over its host.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use latrad_core::{ElemSet, Lattice};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::RelError;

/// The relations every host carries without further data.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BuiltinRel {
    /// The host order itself (the weakest member of the space).
    Leq,
    /// Equality (the strongest member).
    Eq,
    /// Equality plus all cover pairs.
    Gap,
    /// Pairs joined by a chain without gaps; computed from the chain
    /// definition, which on a finite host leaves only equality.
    Cont,
}

impl FromStr for BuiltinRel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "leq" => Ok(BuiltinRel::Leq),
            "eq" => Ok(BuiltinRel::Eq),
            "gap" => Ok(BuiltinRel::Gap),
            "cont" => Ok(BuiltinRel::Cont),
            other => Err(format!(
                "unknown builtin relation `{other}` (expected leq, eq, gap or cont)"
            )),
        }
    }
}

impl fmt::Display for BuiltinRel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BuiltinRel::Leq => "leq",
            BuiltinRel::Eq => "eq",
            BuiltinRel::Gap => "gap",
            BuiltinRel::Cont => "cont",
        })
    }
}

/// A reflexive relation on a host lattice, contained in the host order.
#[derive(Clone)]
pub struct Rel {
    host: Arc<Lattice>,
    rows: Vec<ElemSet>,
}

impl Rel {
    /// Builds a relation from index pairs; the diagonal is added
    /// automatically. Fails on a pair that is not ordered in the host.
    pub fn from_pairs(host: Arc<Lattice>, pairs: &[(usize, usize)]) -> Result<Rel, RelError> {
        let mut rows: Vec<ElemSet> = (0..host.n()).map(ElemSet::singleton).collect();
        for &(a, b) in pairs {
            if !host.leq(a, b) {
                return Err(RelError::NotStronger {
                    a: host.id(a).to_owned(),
                    b: host.id(b).to_owned(),
                });
            }
            rows[a].insert(b);
        }
        Ok(Rel { host, rows })
    }

    /// Builds a relation from id pairs; the diagonal is added automatically.
    pub fn from_id_pairs<S: AsRef<str>>(
        host: Arc<Lattice>,
        pairs: &[(S, S)],
    ) -> Result<Rel, RelError> {
        let mut resolved = Vec::with_capacity(pairs.len());
        for (a, b) in pairs {
            let a = host
                .index_of(a.as_ref())
                .ok_or_else(|| RelError::UnknownElement(a.as_ref().to_owned()))?;
            let b = host
                .index_of(b.as_ref())
                .ok_or_else(|| RelError::UnknownElement(b.as_ref().to_owned()))?;
            resolved.push((a, b));
        }
        Rel::from_pairs(host, &resolved)
    }

    /// Builds a relation from complete rows, validating both invariants.
    pub fn from_rows(host: Arc<Lattice>, rows: Vec<ElemSet>) -> Result<Rel, RelError> {
        assert_eq!(rows.len(), host.n(), "one row per element");
        for (a, &row) in rows.iter().enumerate() {
            if !row.contains(a) {
                return Err(RelError::NotReflexive(host.id(a).to_owned()));
            }
            if let Some(b) = (row - host.up_set(a)).first() {
                return Err(RelError::NotStronger {
                    a: host.id(a).to_owned(),
                    b: host.id(b).to_owned(),
                });
            }
        }
        Ok(Rel { host, rows })
    }

    /// Crate-internal constructor for rows already known to satisfy the
    /// invariants (reflexive, contained in the host order).
    pub(crate) fn from_raw(host: Arc<Lattice>, rows: Vec<ElemSet>) -> Rel {
        debug_assert!(rows
            .iter()
            .enumerate()
            .all(|(a, row)| row.contains(a) && row.is_subset(host.up_set(a))));
        Rel { host, rows }
    }

    /// One of the intrinsic relations of the host.
    pub fn builtin(host: Arc<Lattice>, which: BuiltinRel) -> Rel {
        let n = host.n();
        let rows = match which {
            BuiltinRel::Leq => (0..n).map(|a| host.up_set(a)).collect(),
            BuiltinRel::Eq => (0..n).map(ElemSet::singleton).collect(),
            BuiltinRel::Gap => (0..n)
                .map(|a| host.covers_up(a).with(a))
                .collect(),
            BuiltinRel::Cont => cont_rows(&host),
        };
        Rel { host, rows }
    }

    /// The host lattice.
    pub fn host(&self) -> &Arc<Lattice> {
        &self.host
    }

    /// Is `a` related to `b`?
    #[inline]
    pub fn related(&self, a: usize, b: usize) -> bool {
        self.rows[a].contains(b)
    }

    /// Everything `a` is related to (always contains `a`).
    #[inline]
    pub fn row(&self, a: usize) -> ElemSet {
        self.rows[a]
    }

    /// Everything related to `b` (always contains `b`).
    pub fn col(&self, b: usize) -> ElemSet {
        (0..self.host.n())
            .filter(|&a| self.rows[a].contains(b))
            .collect()
    }

    /// All columns at once (transposed rows).
    pub fn cols(&self) -> Vec<ElemSet> {
        let n = self.host.n();
        let mut cols = vec![ElemSet::EMPTY; n];
        for a in 0..n {
            for b in self.rows[a].iter() {
                cols[b].insert(a);
            }
        }
        cols
    }

    /// Off-diagonal pairs, sorted.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.host.n() {
            for b in self.rows[a].without(a).iter() {
                out.push((a, b));
            }
        }
        out
    }

    /// Number of off-diagonal pairs.
    pub fn strict_pair_count(&self) -> usize {
        (0..self.host.n())
            .map(|a| self.rows[a].without(a).len())
            .sum()
    }

    /// Copy with one more pair; fails if the pair violates the host order.
    pub fn with_pair(&self, a: usize, b: usize) -> Result<Rel, RelError> {
        if !self.host.leq(a, b) {
            return Err(RelError::NotStronger {
                a: self.host.id(a).to_owned(),
                b: self.host.id(b).to_owned(),
            });
        }
        let mut rows = self.rows.clone();
        rows[a].insert(b);
        Ok(Rel {
            host: self.host.clone(),
            rows,
        })
    }

    /// Copy with one off-diagonal pair removed (diagonal pairs stay).
    pub fn without_strict_pair(&self, a: usize, b: usize) -> Rel {
        let mut rows = self.rows.clone();
        if a != b {
            rows[a].remove(b);
        }
        Rel {
            host: self.host.clone(),
            rows,
        }
    }

    fn ensure_same_host(&self, other: &Rel) -> Result<(), RelError> {
        if Arc::ptr_eq(&self.host, &other.host) || *self.host == *other.host {
            Ok(())
        } else {
            Err(RelError::HostMismatch)
        }
    }

    /// Pairwise intersection — the meet in the relation space.
    pub fn meet(&self, other: &Rel) -> Result<Rel, RelError> {
        self.ensure_same_host(other)?;
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(&a, &b)| a & b)
            .collect();
        Ok(Rel {
            host: self.host.clone(),
            rows,
        })
    }

    /// Pairwise union — the join in the relation space.
    pub fn join(&self, other: &Rel) -> Result<Rel, RelError> {
        self.ensure_same_host(other)?;
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(&a, &b)| a | b)
            .collect();
        Ok(Rel {
            host: self.host.clone(),
            rows,
        })
    }

    /// Is every pair of `self` also a pair of `other`?
    pub fn is_subrel(&self, other: &Rel) -> Result<bool, RelError> {
        self.ensure_same_host(other)?;
        Ok(self
            .rows
            .iter()
            .zip(&other.rows)
            .all(|(&a, &b)| a.is_subset(b)))
    }

    /// The same pairs read in the order-dual host: `a` related to `b`
    /// becomes `b` related to `a`.
    pub fn dual(&self) -> Rel {
        Rel {
            host: Arc::new(self.host.dual()),
            rows: self.cols(),
        }
    }
}

impl PartialEq for Rel {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.host, &other.host) || *self.host == *other.host)
            && self.rows == other.rows
    }
}

impl Eq for Rel {}

impl fmt::Debug for Rel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> = self
            .strict_pairs()
            .iter()
            .map(|&(a, b)| format!("({},{})", self.host.id(a), self.host.id(b)))
            .collect();
        write!(f, "Rel{{id ∪ [{}]}}", pairs.join(", "))
    }
}

/// Rows of the chain-continuity relation: `a` related to `b` iff some
/// maximal chain of `[a, b]` has no gap. Finite chains of two or more
/// elements always have gaps, so this computes back to equality — but by
/// inspection of chains, not by fiat.
fn cont_rows(host: &Arc<Lattice>) -> Vec<ElemSet> {
    let n = host.n();
    (0..n)
        .map(|a| {
            let mut row = ElemSet::singleton(a);
            for b in host.up_set(a).without(a).iter() {
                if has_continuous_chain(host, a, b) {
                    row.insert(b);
                }
            }
            row
        })
        .collect()
}

fn has_continuous_chain(host: &Lattice, a: usize, b: usize) -> bool {
    let interval = host.up_set(a) & host.down_set(b);
    let mut chain = vec![a];
    chains_from(host, interval, b, &mut chain, &mut |chain| {
        // A chain is continuous when every comparable pair of its elements
        // has a further chain element strictly between.
        chain.windows(2).all(|w| {
            chain
                .iter()
                .any(|&z| host.lt(w[0], z) && host.lt(z, w[1]))
        })
    })
}

/// Depth-first search over the maximal chains of the interval, calling
/// `found` on each; stops early once `found` returns true.
fn chains_from(
    host: &Lattice,
    interval: ElemSet,
    top: usize,
    chain: &mut Vec<usize>,
    found: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    let last = *chain.last().expect("chain is nonempty");
    if last == top {
        return found(chain);
    }
    for next in (host.covers_up(last) & interval).iter() {
        chain.push(next);
        if chains_from(host, interval, top, chain, found) {
            chain.pop();
            return true;
        }
        chain.pop();
    }
    false
}

/// Where a serialized relation finds its host lattice.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LatticeSource {
    /// A file path, resolved by the I/O layer.
    Path(String),
    /// The lattice inline.
    Inline(Lattice),
}

fn default_true() -> bool {
    true
}

/// Serialized shape of a relation:
/// `{"lattice": <lattice or path>, "pairs": [["a","b"], ...],
///   "reflexive_implicit": true}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RelJson {
    pub lattice: LatticeSource,
    pub pairs: Vec<(String, String)>,
    #[serde(default = "default_true")]
    pub reflexive_implicit: bool,
}

impl RelJson {
    /// Builds the relation, resolving a path reference through `load`.
    pub fn into_rel_with(
        self,
        load: impl FnOnce(&str) -> Result<Lattice, RelError>,
    ) -> Result<Rel, RelError> {
        let host = match self.lattice {
            LatticeSource::Inline(l) => l,
            LatticeSource::Path(p) => load(&p)?,
        };
        let host = Arc::new(host);
        let rel = Rel::from_id_pairs(host.clone(), &self.pairs)?;
        if !self.reflexive_implicit {
            // The diagonal must have been listed explicitly.
            let mut listed: Vec<ElemSet> = (0..host.n()).map(|_| ElemSet::EMPTY).collect();
            for (a, b) in &self.pairs {
                let (a, b) = (
                    host.index_of(a).expect("validated above"),
                    host.index_of(b).expect("validated above"),
                );
                listed[a].insert(b);
            }
            for i in 0..host.n() {
                if !listed[i].contains(i) {
                    return Err(RelError::NotReflexive(host.id(i).to_owned()));
                }
            }
        }
        Ok(rel)
    }

    /// Builds the relation; a path reference is an error here.
    pub fn into_rel(self) -> Result<Rel, RelError> {
        self.into_rel_with(|p| Err(RelError::UnresolvedPath(p.to_owned())))
    }
}

impl From<&Rel> for RelJson {
    fn from(r: &Rel) -> Self {
        RelJson {
            lattice: LatticeSource::Inline((*r.host).clone()),
            pairs: r
                .strict_pairs()
                .iter()
                .map(|&(a, b)| (r.host.id(a).to_owned(), r.host.id(b).to_owned()))
                .collect(),
            reflexive_implicit: true,
        }
    }
}

impl Serialize for Rel {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        RelJson::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Rel {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        RelJson::deserialize(deserializer)?
            .into_rel()
            .map_err(serde::de::Error::custom)
    }
}
