//! Subsets of a lattice that support hull or kernel maps.

use std::fmt;
use std::sync::Arc;

use latrad_core::{ElemSet, Lattice};
use latrad_radical::LatticeMap;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::ClosureError;

/// Hosts at most this large have the hull identities checked on every
/// subset; larger hosts fall back to a fixed number of sampled subsets.
const EXHAUSTIVE_SUBSET_LIMIT: usize = 12;

/// How many subsets to sample on hosts too large for exhaustion.
const SAMPLED_SUBSETS: usize = 256;

/// Which hull property a subset family enjoys.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    /// Every host element has a least majorant inside the family.
    Enveloping,
    /// Every host element has a greatest minorant inside the family.
    Inscribing,
    /// The family supports both hulls.
    Both,
}

impl FamilyKind {
    /// Whether least majorants exist.
    pub fn is_enveloping(self) -> bool {
        matches!(self, FamilyKind::Enveloping | FamilyKind::Both)
    }

    /// Whether greatest minorants exist.
    pub fn is_inscribing(self) -> bool {
        matches!(self, FamilyKind::Inscribing | FamilyKind::Both)
    }
}

/// A subset of a host lattice classified by which hulls it supports.
///
/// An enveloping family is a classical closure system (Moore family): it
/// contains the top element and is closed under meets, which is exactly
/// what it takes for every host element to have a least majorant in the
/// family. Inscribing families are the order duals (kernel systems).
/// The constructor proves the classification against both
/// characterizations before handing the family out, so every
/// `SubsetFamily` in circulation is ready to be turned into a map.
#[derive(Clone)]
pub struct SubsetFamily {
    host: Arc<Lattice>,
    members: ElemSet,
    kind: FamilyKind,
}

impl SubsetFamily {
    /// Classifies a subset, or returns `None` when it supports no hull.
    ///
    /// While classifying, the least-majorant definition is checked
    /// against the algebraic one (meet closure plus top), and on small
    /// hosts the hull of every subset `G` of the host is checked to be
    /// the meet of the members above `G` as well as the hull of the join
    /// of the member hulls. Disagreement between those routes would be a
    /// bug, so it stops the program rather than misclassify.
    pub fn classify(host: &Arc<Lattice>, members: ElemSet) -> Option<FamilyKind> {
        let enveloping = classify_enveloping(host, members);
        let inscribing = classify_inscribing(host, members);
        match (enveloping, inscribing) {
            (true, true) => Some(FamilyKind::Both),
            (true, false) => Some(FamilyKind::Enveloping),
            (false, true) => Some(FamilyKind::Inscribing),
            (false, false) => None,
        }
    }

    /// Wraps a subset after classifying it.
    pub fn new(host: Arc<Lattice>, members: ElemSet) -> Result<SubsetFamily, ClosureError> {
        match SubsetFamily::classify(&host, members) {
            Some(kind) => Ok(SubsetFamily {
                host,
                members,
                kind,
            }),
            None => Err(ClosureError::NotAFamily),
        }
    }

    /// Wraps a subset that must support least majorants.
    pub fn enveloping(host: Arc<Lattice>, members: ElemSet) -> Result<SubsetFamily, ClosureError> {
        let family = SubsetFamily::new(host, members)?;
        if !family.kind.is_enveloping() {
            return Err(ClosureError::WrongKind {
                expected: "enveloping",
            });
        }
        Ok(family)
    }

    /// Wraps a subset that must support greatest minorants.
    pub fn inscribing(host: Arc<Lattice>, members: ElemSet) -> Result<SubsetFamily, ClosureError> {
        let family = SubsetFamily::new(host, members)?;
        if !family.kind.is_inscribing() {
            return Err(ClosureError::WrongKind {
                expected: "inscribing",
            });
        }
        Ok(family)
    }

    /// Recovers the family fixed by a closure map or a kernel map.
    ///
    /// The fixpoints of a closure map form an enveloping family whose
    /// hull map is the original map, and dually for kernel maps; both
    /// round trips are checked here.
    pub fn from_fixpoints(map: &LatticeMap) -> Result<SubsetFamily, ClosureError> {
        let profile = map.classify();
        if !profile.radical && !profile.dual_radical {
            return Err(ClosureError::WrongKind {
                expected: "induced by a closure map or a kernel map",
            });
        }
        let family = SubsetFamily::new(map.host().clone(), map.fixpoints())?;
        if profile.radical {
            assert!(
                family.kind.is_enveloping(),
                "fixpoints of a closure map form an enveloping family"
            );
            assert!(
                family.envelope_map()? == *map,
                "a closure map is the hull map of its own fixpoints"
            );
        }
        if profile.dual_radical {
            assert!(
                family.kind.is_inscribing(),
                "fixpoints of a kernel map form an inscribing family"
            );
            assert!(
                family.kernel_map()? == *map,
                "a kernel map is the kernel map of its own fixpoints"
            );
        }
        Ok(family)
    }

    /// The host lattice.
    pub fn host(&self) -> &Arc<Lattice> {
        &self.host
    }

    /// The member elements.
    pub fn members(&self) -> ElemSet {
        self.members
    }

    /// The classification this family was built with.
    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    /// Whether least majorants exist.
    pub fn is_enveloping(&self) -> bool {
        self.kind.is_enveloping()
    }

    /// Whether greatest minorants exist.
    pub fn is_inscribing(&self) -> bool {
        self.kind.is_inscribing()
    }

    /// Whether the members are closed under binary meets and joins.
    pub fn is_sublattice(&self) -> bool {
        let members: Vec<usize> = self.members.iter().collect();
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                if !self.members.contains(self.host.meet(a, b))
                    || !self.members.contains(self.host.join(a, b))
                {
                    return false;
                }
            }
        }
        true
    }

    /// The map sending each element to its least majorant in the family.
    ///
    /// The result is always a closure map whose fixpoints are exactly the
    /// members, and it preserves joins precisely when the family is a
    /// sublattice of the host; all three facts are asserted.
    pub fn envelope_map(&self) -> Result<LatticeMap, ClosureError> {
        if !self.kind.is_enveloping() {
            return Err(ClosureError::WrongKind {
                expected: "enveloping",
            });
        }
        let table: Vec<usize> = (0..self.host.n())
            .map(|x| {
                least_member_above(&self.host, self.members, x)
                    .expect("enveloping families have least majorants")
            })
            .collect();
        let map = LatticeMap::from_table(self.host.clone(), table)
            .expect("hull tables index into the host");
        assert_eq!(
            map.fixpoints(),
            self.members,
            "members of an enveloping family are the fixpoints of its hull map"
        );
        let profile = map.classify();
        assert!(
            profile.radical,
            "hull maps of enveloping families are closure maps"
        );
        assert_eq!(
            profile.t_radical,
            self.is_sublattice(),
            "a hull map preserves joins exactly when the family is a sublattice"
        );
        Ok(map)
    }

    /// The map sending each element to its greatest minorant in the
    /// family; the order dual of [`SubsetFamily::envelope_map`].
    pub fn kernel_map(&self) -> Result<LatticeMap, ClosureError> {
        if !self.kind.is_inscribing() {
            return Err(ClosureError::WrongKind {
                expected: "inscribing",
            });
        }
        let table: Vec<usize> = (0..self.host.n())
            .map(|x| {
                greatest_member_below(&self.host, self.members, x)
                    .expect("inscribing families have greatest minorants")
            })
            .collect();
        let map = LatticeMap::from_table(self.host.clone(), table)
            .expect("kernel tables index into the host");
        assert_eq!(
            map.fixpoints(),
            self.members,
            "members of an inscribing family are the fixpoints of its kernel map"
        );
        let profile = map.classify();
        assert!(
            profile.dual_radical,
            "kernel maps of inscribing families are kernel maps"
        );
        assert_eq!(
            profile.dual_t_radical,
            self.is_sublattice(),
            "a kernel map preserves meets exactly when the family is a sublattice"
        );
        Ok(map)
    }
}

impl PartialEq for SubsetFamily {
    fn eq(&self, other: &SubsetFamily) -> bool {
        (Arc::ptr_eq(&self.host, &other.host) || *self.host == *other.host)
            && self.members == other.members
    }
}

impl Eq for SubsetFamily {}

impl fmt::Debug for SubsetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ids: Vec<&str> = self.members.iter().map(|i| self.host.id(i)).collect();
        write!(f, "{:?} family {{{}}}", self.kind, ids.join(", "))
    }
}

/// The least member of `members` above `x`, if one exists.
fn least_member_above(host: &Lattice, members: ElemSet, x: usize) -> Option<usize> {
    let above = members.inter(host.up_set(x));
    above.iter().find(|&m| above.is_subset(host.up_set(m)))
}

/// The greatest member of `members` below `x`, if one exists.
fn greatest_member_below(host: &Lattice, members: ElemSet, x: usize) -> Option<usize> {
    let below = members.inter(host.down_set(x));
    below.iter().find(|&m| below.is_subset(host.down_set(m)))
}

fn classify_enveloping(host: &Arc<Lattice>, members: ElemSet) -> bool {
    let by_definition = (0..host.n()).all(|x| least_member_above(host, members, x).is_some());
    let algebraic = members.contains(host.top()) && meet_closed(host, members);
    assert_eq!(
        by_definition, algebraic,
        "least majorants exist exactly for meet-closed families containing the top"
    );
    if by_definition {
        check_hull_identities(host, members);
    }
    by_definition
}

fn classify_inscribing(host: &Arc<Lattice>, members: ElemSet) -> bool {
    let by_definition = (0..host.n()).all(|x| greatest_member_below(host, members, x).is_some());
    let algebraic = members.contains(host.bottom()) && join_closed(host, members);
    assert_eq!(
        by_definition, algebraic,
        "greatest minorants exist exactly for join-closed families containing the bottom"
    );
    if by_definition {
        check_kernel_identities(host, members);
    }
    by_definition
}

fn meet_closed(host: &Lattice, members: ElemSet) -> bool {
    let list: Vec<usize> = members.iter().collect();
    list.iter().enumerate().all(|(i, &a)| {
        list[i + 1..]
            .iter()
            .all(|&b| members.contains(host.meet(a, b)))
    })
}

fn join_closed(host: &Lattice, members: ElemSet) -> bool {
    let list: Vec<usize> = members.iter().collect();
    list.iter().enumerate().all(|(i, &a)| {
        list[i + 1..]
            .iter()
            .all(|&b| members.contains(host.join(a, b)))
    })
}

/// Subsets of the host to run hull identities against: every subset on
/// small hosts, a seeded sample on larger ones.
fn subset_probes(host: &Lattice) -> Vec<ElemSet> {
    let n = host.n();
    if n <= EXHAUSTIVE_SUBSET_LIMIT {
        (0..(1u128 << n)).map(ElemSet::from_bits).collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let mask = ElemSet::full(n).bits();
        (0..SAMPLED_SUBSETS)
            .map(|_| ElemSet::from_bits(rng.gen::<u128>() & mask))
            .collect()
    }
}

/// For an enveloping family, the least member above a whole subset `G`
/// must be reachable three ways: as the least element of the members
/// above `G`, as their meet, and as the hull of the join of the member
/// hulls of the elements of `G`.
fn check_hull_identities(host: &Arc<Lattice>, members: ElemSet) {
    for g in subset_probes(host) {
        let join = host.join_set(g);
        let above: ElemSet = members.inter(host.up_set(join));
        let least = above
            .iter()
            .find(|&m| above.is_subset(host.up_set(m)))
            .expect("enveloping families have least members above every subset");
        assert_eq!(
            least,
            host.meet_set(above),
            "the least member above a subset is the meet of all members above it"
        );
        let hull_join = host.join_set(
            g.iter()
                .map(|x| least_member_above(host, members, x).expect("family is enveloping"))
                .collect(),
        );
        let hull_of_hulls = least_member_above(host, members, hull_join).expect("family is enveloping");
        assert_eq!(
            least, hull_of_hulls,
            "the hull of a subset is the hull of the join of its member hulls"
        );
    }
}

/// The order dual of [`check_hull_identities`].
fn check_kernel_identities(host: &Arc<Lattice>, members: ElemSet) {
    for g in subset_probes(host) {
        let meet = host.meet_set(g);
        let below: ElemSet = members.inter(host.down_set(meet));
        let greatest = below
            .iter()
            .find(|&m| below.is_subset(host.down_set(m)))
            .expect("inscribing families have greatest members below every subset");
        assert_eq!(
            greatest,
            host.join_set(below),
            "the greatest member below a subset is the join of all members below it"
        );
        let kernel_meet = host.meet_set(
            g.iter()
                .map(|x| greatest_member_below(host, members, x).expect("family is inscribing"))
                .collect(),
        );
        let kernel_of_kernels =
            greatest_member_below(host, members, kernel_meet).expect("family is inscribing");
        assert_eq!(
            greatest, kernel_of_kernels,
            "the kernel of a subset is the kernel of the meet of its member kernels"
        );
    }
}
