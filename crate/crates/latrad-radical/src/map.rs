//! Total maps on a lattice and their classification.
//!
//! A [`LatticeMap`] is a table `x ↦ g(x)` over the elements of a host
//! lattice. [`LatticeMap::classify`] sorts a map into the six classes that
//! matter for radical theory — the two interpolation classes, the two
//! monotone classes and the two join/meet-homomorphism classes — computing
//! each literally from its definition and cross-checking the implications
//! that must hold between them.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use latrad_core::{ElemSet, Lattice};
use latrad_rel::{LatticeSource, Rel, RelError};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::RadicalError;

/// A total map on the elements of a host lattice.
#[derive(Clone)]
pub struct LatticeMap {
    host: Arc<Lattice>,
    table: Vec<usize>,
}

/// The classification of a map with respect to the radical map classes.
///
/// `pre_radical`: inflationary, idempotent, and constant on the open
/// stretch between `x` and `g(x)`. `radical`: inflationary, idempotent and
/// monotone. `t_radical`: inflationary, idempotent and a join
/// homomorphism. The `dual_*` flags are the order duals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapProfile {
    pub pre_radical: bool,
    pub dual_pre_radical: bool,
    pub radical: bool,
    pub dual_radical: bool,
    pub t_radical: bool,
    pub dual_t_radical: bool,
}

impl LatticeMap {
    /// Builds a map from a full table of image indices.
    pub fn from_table(host: Arc<Lattice>, table: Vec<usize>) -> Result<LatticeMap, RadicalError> {
        if table.len() != host.n() {
            return Err(RadicalError::TableSize {
                got: table.len(),
                want: host.n(),
            });
        }
        if let Some(&bad) = table.iter().find(|&&v| v >= host.n()) {
            return Err(RadicalError::TableRange(bad));
        }
        Ok(LatticeMap { host, table })
    }

    /// Builds a map by evaluating `f` on every element.
    pub fn from_fn(host: Arc<Lattice>, f: impl Fn(usize) -> usize) -> LatticeMap {
        let table: Vec<usize> = (0..host.n()).map(f).collect();
        LatticeMap::from_table(host, table).expect("images computed from host indices")
    }

    /// The identity map.
    pub fn identity(host: Arc<Lattice>) -> LatticeMap {
        LatticeMap::from_fn(host, |x| x)
    }

    pub fn host(&self) -> &Arc<Lattice> {
        &self.host
    }

    /// The image of one element.
    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    /// The whole table.
    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn is_identity(&self) -> bool {
        self.table.iter().enumerate().all(|(x, &gx)| x == gx)
    }

    /// The set of fixed points `g(x) = x`.
    pub fn fixpoints(&self) -> ElemSet {
        self.table
            .iter()
            .enumerate()
            .filter(|&(x, &gx)| x == gx)
            .map(|(x, _)| x)
            .collect()
    }

    /// The composite `x ↦ self(inner(x))`.
    pub fn compose(&self, inner: &LatticeMap) -> Result<LatticeMap, RadicalError> {
        self.ensure_same_host(inner)?;
        Ok(LatticeMap {
            host: self.host.clone(),
            table: inner.table.iter().map(|&v| self.table[v]).collect(),
        })
    }

    fn ensure_same_host(&self, other: &LatticeMap) -> Result<(), RadicalError> {
        if Arc::ptr_eq(&self.host, &other.host) || *self.host == *other.host {
            Ok(())
        } else {
            Err(RadicalError::HostMismatch)
        }
    }

    /// Classifies the map against the six radical map classes.
    pub fn classify(&self) -> MapProfile {
        let h = &self.host;
        let n = h.n();
        let g = |x: usize| self.table[x];

        let inflationary = (0..n).all(|x| h.leq(x, g(x)));
        let deflationary = (0..n).all(|x| h.leq(g(x), x));
        let idempotent = (0..n).all(|x| g(g(x)) == g(x));
        let monotone = (0..n).all(|x| (0..n).all(|y| !h.leq(x, y) || h.leq(g(x), g(y))));
        let interp_up =
            (0..n).all(|x| (0..n).all(|y| !(h.lt(x, y) && h.lt(y, g(x))) || g(y) == g(x)));
        let interp_down =
            (0..n).all(|x| (0..n).all(|y| !(h.lt(g(x), y) && h.lt(y, x)) || g(y) == g(x)));
        let join_hom =
            (0..n).all(|x| (0..n).all(|y| g(h.join(x, y)) == h.join(g(x), g(y))));
        let meet_hom =
            (0..n).all(|x| (0..n).all(|y| g(h.meet(x, y)) == h.meet(g(x), g(y))));

        let profile = MapProfile {
            pre_radical: inflationary && idempotent && interp_up,
            dual_pre_radical: deflationary && idempotent && interp_down,
            radical: inflationary && idempotent && monotone,
            dual_radical: deflationary && idempotent && monotone,
            t_radical: inflationary && idempotent && join_hom,
            dual_t_radical: deflationary && idempotent && meet_hom,
        };

        // Inclusions between the classes that hold by short arguments;
        // a violation here is a bug in the detectors above.
        assert!(
            !profile.radical || profile.pre_radical,
            "monotone inflation must interpolate"
        );
        assert!(!profile.dual_radical || profile.dual_pre_radical);
        assert!(
            !profile.t_radical || profile.radical,
            "join homomorphisms are monotone"
        );
        assert!(!profile.dual_t_radical || profile.dual_radical);
        profile
    }

    /// The relation induced by the map: `x` relates to `y` when `x ≤ y`
    /// and both have the same image.
    pub fn induced_rel(&self) -> Rel {
        let n = self.host.n();
        let rows: Vec<ElemSet> = (0..n)
            .map(|x| {
                self.host
                    .up_set(x)
                    .iter()
                    .filter(|&y| self.table[y] == self.table[x])
                    .collect()
            })
            .collect();
        Rel::from_rows(self.host.clone(), rows)
            .expect("level sets of a map intersected with the order are valid rows")
    }
}

impl PartialEq for LatticeMap {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.host, &other.host) || *self.host == *other.host)
            && self.table == other.table
    }
}

impl Eq for LatticeMap {}

impl fmt::Debug for LatticeMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let entries: Vec<String> = self
            .table
            .iter()
            .enumerate()
            .filter(|&(x, &gx)| x != gx)
            .map(|(x, &gx)| format!("{}↦{}", self.host.id(x), self.host.id(gx)))
            .collect();
        write!(f, "Map{{id except [{}]}}", entries.join(", "))
    }
}

/// Every map on the host, in lexicographic table order. `n^n` of them —
/// callers must keep hosts tiny (the assert allows at most six elements).
pub fn all_maps(host: &Arc<Lattice>) -> impl Iterator<Item = LatticeMap> + '_ {
    let n = host.n();
    assert!(n <= 6, "map enumeration grows as n^n; {n} elements is too many");
    let count = (n as u64).pow(n as u32);
    (0..count).map(move |code| {
        let mut c = code;
        let table: Vec<usize> = (0..n)
            .map(|_| {
                let v = (c % n as u64) as usize;
                c /= n as u64;
                v
            })
            .collect();
        LatticeMap::from_table(host.clone(), table).expect("digits are in range")
    })
}

/// Serialized shape of a map:
/// `{"lattice": <lattice or path>, "map": {"x": "g(x)", ...}}`.
/// Elements absent from the table are fixed points.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MapJson {
    pub lattice: LatticeSource,
    pub map: BTreeMap<String, String>,
}

impl MapJson {
    /// Builds the map, resolving a path reference through `load`.
    pub fn into_map_with(
        self,
        load: impl FnOnce(&str) -> Result<Lattice, RelError>,
    ) -> Result<LatticeMap, RadicalError> {
        let host = match self.lattice {
            LatticeSource::Inline(l) => l,
            LatticeSource::Path(p) => load(&p).map_err(RadicalError::Rel)?,
        };
        let host = Arc::new(host);
        let mut table: Vec<usize> = (0..host.n()).collect();
        for (x, gx) in &self.map {
            let x = host
                .index_of(x)
                .ok_or_else(|| RelError::UnknownElement(x.clone()))?;
            let gx = host
                .index_of(gx)
                .ok_or_else(|| RelError::UnknownElement(gx.clone()))?;
            table[x] = gx;
        }
        LatticeMap::from_table(host, table)
    }

    /// Builds the map; a path reference is an error here.
    pub fn into_map(self) -> Result<LatticeMap, RadicalError> {
        self.into_map_with(|p| Err(RelError::UnresolvedPath(p.to_owned())))
    }
}

impl From<&LatticeMap> for MapJson {
    fn from(m: &LatticeMap) -> Self {
        MapJson {
            lattice: LatticeSource::Inline((*m.host).clone()),
            map: m
                .table
                .iter()
                .enumerate()
                .filter(|&(x, &gx)| x != gx)
                .map(|(x, &gx)| (m.host.id(x).to_owned(), m.host.id(gx).to_owned()))
                .collect(),
        }
    }
}

impl Serialize for LatticeMap {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        MapJson::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LatticeMap {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        MapJson::deserialize(deserializer)?
            .into_map()
            .map_err(serde::de::Error::custom)
    }
}
