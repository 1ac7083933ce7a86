//! Subspace lattices of small vector spaces over finite fields, with rank
//! (dimension) data and the codimension-bounded relations they carry.
//!
//! A subspace is stored as the bitset of its member vectors; meets are
//! intersections and joins are sums, which the inclusion order produces by
//! itself. Element ids are the reduced row echelon bases, so equal ids mean
//! equal subspaces.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use latrad_core::{ElemSet, Lattice, LatticeJson, MAX_ELEMENTS};
use latrad_rel::{BuiltinRel, Rel};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::GenError;
use crate::field::Gf;

/// Five-dimensional spaces over the two-element field already have 374
/// subspaces — beyond the element capacity.
const MAX_DIMENSION: u32 = 4;

/// A lattice whose elements carry a dimension-like rank.
///
/// Construction checks only what every ranked host needs: a rank for each
/// element, zero at the bottom, strictly increasing along the order. The
/// stronger laws of subspace lattices (gradedness, the modular rank
/// equation) are asserted by [`subspace_lattice`] itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankedLattice {
    base: Arc<Lattice>,
    rank: Vec<u32>,
}

impl RankedLattice {
    pub fn new(base: Arc<Lattice>, rank: Vec<u32>) -> Result<RankedLattice, GenError> {
        if rank.len() != base.n() {
            return Err(GenError::BadRank(format!(
                "{} ranks for {} elements",
                rank.len(),
                base.n()
            )));
        }
        if rank[base.bottom()] != 0 {
            return Err(GenError::BadRank(format!(
                "bottom element `{}` has rank {}",
                base.id(base.bottom()),
                rank[base.bottom()]
            )));
        }
        for a in 0..base.n() {
            for b in 0..base.n() {
                if a != b && base.leq(a, b) && rank[a] >= rank[b] {
                    return Err(GenError::BadRank(format!(
                        "`{}` < `{}` but their ranks are {} and {}",
                        base.id(a),
                        base.id(b),
                        rank[a],
                        rank[b]
                    )));
                }
            }
        }
        Ok(RankedLattice { base, rank })
    }

    pub fn base(&self) -> &Arc<Lattice> {
        &self.base
    }

    pub fn rank_of(&self, x: usize) -> u32 {
        self.rank[x]
    }

    pub fn ranks(&self) -> &[u32] {
        &self.rank
    }

    /// The rank of the top element — the ambient dimension for subspace
    /// lattices.
    pub fn ambient(&self) -> u32 {
        self.rank[self.base.top()]
    }

    /// Does every cover step raise the rank by exactly one?
    pub fn is_graded(&self) -> bool {
        self.base
            .covers()
            .iter()
            .all(|&(a, b)| self.rank[b] == self.rank[a] + 1)
    }

    /// Does rank(a) + rank(b) = rank(a∧b) + rank(a∨b) hold throughout?
    pub fn is_modular_ranked(&self) -> bool {
        let n = self.base.n();
        (0..n).all(|a| {
            (0..n).all(|b| {
                self.rank[a] + self.rank[b]
                    == self.rank[self.base.meet(a, b)] + self.rank[self.base.join(a, b)]
            })
        })
    }
}

/// The serialized shape of a [`RankedLattice`]: the plain lattice fields
/// plus a rank entry per element.
#[derive(Serialize, Deserialize)]
struct RankedJson {
    elements: Vec<String>,
    covers: Vec<(String, String)>,
    rank: BTreeMap<String, u32>,
}

impl Serialize for RankedLattice {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let base = LatticeJson::from(self.base.as_ref());
        let rank = self
            .base
            .ids()
            .iter()
            .enumerate()
            .map(|(i, id)| (id.clone(), self.rank[i]))
            .collect();
        RankedJson {
            elements: base.elements,
            covers: base.covers,
            rank,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RankedLattice {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let mut j = RankedJson::deserialize(deserializer)?;
        let lattice = Lattice::from_covers(j.elements, &j.covers).map_err(serde::de::Error::custom)?;
        let mut rank = Vec::with_capacity(lattice.n());
        for id in lattice.ids() {
            match j.rank.remove(id) {
                Some(r) => rank.push(r),
                None => {
                    return Err(serde::de::Error::custom(format!(
                        "missing rank for element `{id}`"
                    )))
                }
            }
        }
        if let Some((extra, _)) = j.rank.into_iter().next() {
            return Err(serde::de::Error::custom(format!(
                "rank entry for unknown element `{extra}`"
            )));
        }
        RankedLattice::new(Arc::new(lattice), rank).map_err(serde::de::Error::custom)
    }
}

/// The Gaussian binomial coefficient: subspaces of dimension `k` in a
/// `d`-dimensional space over the `q`-element field.
fn gaussian(d: u32, k: u32, q: u64) -> u128 {
    let power = |e: u32| (q as u128).pow(e);
    let mut numerator = 1u128;
    let mut denominator = 1u128;
    for i in 0..k {
        numerator *= power(d - i) - 1;
        denominator *= power(i + 1) - 1;
    }
    numerator / denominator
}

/// All subspaces of the `d`-dimensional vector space over the `q`-element
/// field, as a ranked lattice.
///
/// Meet is intersection and join is sum (both come out of the inclusion
/// order by themselves); rank is dimension. The element count is checked
/// against the Gaussian-binomial formula, and gradedness, the modular rank
/// equation and modularity of the lattice are all asserted.
pub fn subspace_lattice(q: u64, d: u32) -> Result<RankedLattice, GenError> {
    let gf = Gf::new(q)?;
    if d == 0 {
        return Err(GenError::ZeroParameter("ambient dimension"));
    }
    if d > MAX_DIMENSION {
        return Err(GenError::SizeLimit {
            what: "ambient dimensions",
            n: d as usize,
            max: MAX_DIMENSION as usize,
        });
    }
    let expected: u128 = (0..=d).map(|k| gaussian(d, k, q)).sum();
    if expected > MAX_ELEMENTS as u128 {
        return Err(GenError::SizeLimit {
            what: "subspaces",
            n: expected as usize,
            max: MAX_ELEMENTS,
        });
    }

    let dim = d as usize;
    let vector_count = gf.q().pow(d);
    assert!(
        vector_count <= 128,
        "the subspace cap keeps the vector space inside one bitset"
    );
    let digits = |v: usize| -> Vec<u8> {
        let mut v = v;
        (0..dim)
            .map(|_| {
                let digit = (v % gf.q()) as u8;
                v /= gf.q();
                digit
            })
            .collect()
    };
    let encode = |coords: &[u8]| -> usize {
        coords
            .iter()
            .rev()
            .fold(0usize, |acc, &c| acc * gf.q() + c as usize)
    };
    let add = |a: usize, b: usize| -> usize {
        let (da, db) = (digits(a), digits(b));
        let sum: Vec<u8> = da.iter().zip(&db).map(|(&x, &y)| gf.add(x, y)).collect();
        encode(&sum)
    };
    let scale = |c: u8, v: usize| -> usize {
        let coords: Vec<u8> = digits(v).iter().map(|&x| gf.mul(c, x)).collect();
        encode(&coords)
    };

    // Every subspace arises by repeatedly adjoining one vector to a known
    // subspace, starting from the zero space; adjoining just translates
    // the old subspace by the multiples of the new vector.
    let extend = |space: ElemSet, v: usize| -> ElemSet {
        let mut grown = ElemSet::EMPTY;
        for c in 0..gf.q() as u8 {
            let shift = scale(c, v);
            for s in space.iter() {
                grown.insert(add(s, shift));
            }
        }
        grown
    };
    let zero_space = ElemSet::singleton(0);
    let mut seen: HashSet<u128> = HashSet::from([zero_space.bits()]);
    let mut queue = vec![zero_space];
    let mut head = 0;
    while head < queue.len() {
        let space = queue[head];
        head += 1;
        for v in 1..vector_count {
            if !space.contains(v) {
                let grown = extend(space, v);
                if seen.insert(grown.bits()) {
                    queue.push(grown);
                }
            }
        }
    }
    assert_eq!(
        queue.len() as u128,
        expected,
        "span enumeration must agree with the Gaussian-binomial count"
    );

    let mut spaces = queue;
    spaces.sort_by_key(|s| (s.len(), s.bits()));

    let rank_of = |space: &ElemSet| -> u32 {
        let mut size = 1usize;
        let mut k = 0u32;
        while size < space.len() {
            size *= gf.q();
            k += 1;
        }
        assert_eq!(size, space.len(), "subspace sizes are powers of the field size");
        k
    };
    let id_of = |space: &ElemSet| -> String {
        let rows: Vec<Vec<u8>> = space.iter().skip(1).map(digits).collect();
        let basis = rref(rows, gf, dim);
        if basis.is_empty() {
            "0".to_owned()
        } else {
            basis
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|&digit| char::from_digit(digit as u32, 10).unwrap())
                        .collect::<String>()
                })
                .collect::<Vec<String>>()
                .join("+")
        }
    };

    let ids: Vec<String> = spaces.iter().map(id_of).collect();
    let up: Vec<ElemSet> = spaces
        .iter()
        .map(|&s| {
            spaces
                .iter()
                .enumerate()
                .filter(|(_, &t)| s.is_subset(t))
                .map(|(j, _)| j)
                .collect()
        })
        .collect();
    let rank: Vec<u32> = spaces.iter().map(rank_of).collect();

    let base = Arc::new(Lattice::from_leq(ids, up)?);
    let ranked = RankedLattice::new(base, rank)?;
    assert!(ranked.is_graded(), "covers raise dimension by one");
    assert!(
        ranked.is_modular_ranked(),
        "dimensions satisfy the modular rank equation"
    );
    assert!(
        ranked.base.structure_profile(0).modular,
        "subspace lattices are modular"
    );
    assert_eq!(ranked.ambient(), d);
    Ok(ranked)
}

/// Reduced row echelon form over the given field; returns the nonzero
/// basis rows ordered by pivot column.
fn rref(mut rows: Vec<Vec<u8>>, gf: Gf, dim: usize) -> Vec<Vec<u8>> {
    let mut pivot_row = 0;
    for col in 0..dim {
        let Some(found) = (pivot_row..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(pivot_row, found);
        let scale = gf.inv(rows[pivot_row][col]);
        for x in rows[pivot_row].iter_mut() {
            *x = gf.mul(scale, *x);
        }
        for r in 0..rows.len() {
            if r != pivot_row && rows[r][col] != 0 {
                let factor = gf.neg(rows[r][col]);
                for c in 0..dim {
                    let term = gf.mul(factor, rows[pivot_row][c]);
                    rows[r][c] = gf.add(rows[r][c], term);
                }
            }
        }
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    rows.truncate(pivot_row);
    rows
}

/// A codimension bound: a finite count or no bound at all.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Codim {
    Finite(u32),
    Infinity,
}

impl fmt::Display for Codim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Codim::Finite(n) => write!(f, "{n}"),
            Codim::Infinity => write!(f, "inf"),
        }
    }
}

impl FromStr for Codim {
    type Err = String;

    fn from_str(s: &str) -> Result<Codim, String> {
        match s {
            "inf" | "infinity" | "∞" => Ok(Codim::Infinity),
            other => other
                .parse::<u32>()
                .map(Codim::Finite)
                .map_err(|_| format!("expected a number or `inf`, got `{other}`")),
        }
    }
}

/// The relation `a ≪ b iff a ≤ b and rank(b) − rank(a) < n`.
///
/// A bound of 1 leaves equality and no bound leaves the whole order; both
/// ends are asserted, as is joint translation stability (the HH property)
/// whenever the host rank is modular.
pub fn rel_codim(ranked: &RankedLattice, n: Codim) -> Result<Rel, GenError> {
    if n == Codim::Finite(0) {
        return Err(GenError::ZeroCodim);
    }
    let host = ranked.base();
    let mut pairs = Vec::new();
    for a in 0..host.n() {
        for b in host.up_set(a).without(a).iter() {
            let keep = match n {
                Codim::Infinity => true,
                Codim::Finite(k) => ranked.rank_of(b) - ranked.rank_of(a) < k,
            };
            if keep {
                pairs.push((a, b));
            }
        }
    }
    let rel = Rel::from_pairs(host.clone(), &pairs)?;
    match n {
        Codim::Finite(1) => assert_eq!(
            rel,
            Rel::builtin(host.clone(), BuiltinRel::Eq),
            "a codimension bound of 1 relates only equals"
        ),
        Codim::Infinity => assert_eq!(
            rel,
            Rel::builtin(host.clone(), BuiltinRel::Leq),
            "an unbounded codimension relates the whole order"
        ),
        _ => {}
    }
    if ranked.is_modular_ranked() {
        let profile = rel.classify()?;
        assert!(
            profile.hh_relation,
            "codimension relations on modular ranked hosts translate jointly"
        );
    }
    Ok(rel)
}

/// The complementary-dimension relation `a ≪ b iff a ≤ b and
/// ambient − (rank(b) − rank(a)) ≥ n`.
///
/// A bound of 0 leaves the whole order; a bound at or beyond the ambient
/// dimension leaves equality. Both ends and the HH property (on modular
/// ranks) are asserted.
pub fn rel_codim_perp(ranked: &RankedLattice, n: Codim) -> Result<Rel, GenError> {
    let host = ranked.base();
    let d = ranked.ambient();
    let mut pairs = Vec::new();
    for a in 0..host.n() {
        for b in host.up_set(a).without(a).iter() {
            let keep = match n {
                Codim::Infinity => false,
                Codim::Finite(k) => d - (ranked.rank_of(b) - ranked.rank_of(a)) >= k,
            };
            if keep {
                pairs.push((a, b));
            }
        }
    }
    let rel = Rel::from_pairs(host.clone(), &pairs)?;
    match n {
        Codim::Finite(0) => assert_eq!(
            rel,
            Rel::builtin(host.clone(), BuiltinRel::Leq),
            "a zero bound keeps the whole order"
        ),
        Codim::Finite(k) if k >= d => assert_eq!(
            rel,
            Rel::builtin(host.clone(), BuiltinRel::Eq),
            "bounds at or past the ambient dimension keep only equality"
        ),
        Codim::Infinity => assert_eq!(rel, Rel::builtin(host.clone(), BuiltinRel::Eq)),
        _ => {}
    }
    if ranked.is_modular_ranked() {
        let profile = rel.classify()?;
        assert!(
            profile.hh_relation,
            "complementary-dimension relations on modular ranked hosts translate jointly"
        );
    }
    Ok(rel)
}
