//! The named lattice factory: chains, Boolean lattices, divisor chains,
//! partition lattices, the diamond M₃, the pentagon N₅ and binary products.
//!
//! Every generator is deterministic: the same parameters produce the same
//! element order, ids and covers.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use latrad_core::{ElemSet, Lattice, MAX_ELEMENTS};
use latrad_rel::Rel;

use crate::error::GenError;

/// Boolean lattices beyond 7 atoms exceed the 128-element capacity.
const MAX_BOOLEAN_ATOMS: usize = 7;
/// Π₅ already has 52 elements — beyond exhaustive subset budgets.
const MAX_PARTITION_GROUND: usize = 4;
/// Divisor enumeration runs trial division up to the square root.
const MAX_DIVISOR_BASE: u64 = 1_000_000_000_000;

/// A recipe for one of the standard lattices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NamedKind {
    /// A total order with the given number of elements.
    Chain(usize),
    /// Subsets of a set with the given number of atoms.
    Boolean(usize),
    /// The numeric chain of all divisors of the base.
    Divisor(u64),
    /// Set partitions of `{1..n}` ordered by refinement.
    Partition(usize),
    /// The five-element modular, non-distributive diamond.
    M3,
    /// The five-element non-modular pentagon.
    N5,
    /// The direct product of two named lattices, ordered componentwise.
    Product(Box<NamedKind>, Box<NamedKind>),
}

impl fmt::Display for NamedKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedKind::Chain(n) => write!(f, "chain:{n}"),
            NamedKind::Boolean(n) => write!(f, "boolean:{n}"),
            NamedKind::Divisor(n) => write!(f, "divisor:{n}"),
            NamedKind::Partition(n) => write!(f, "partition:{n}"),
            NamedKind::M3 => write!(f, "m3"),
            NamedKind::N5 => write!(f, "n5"),
            NamedKind::Product(a, b) => write!(f, "product:{a},{b}"),
        }
    }
}

impl FromStr for NamedKind {
    type Err = GenError;

    fn from_str(s: &str) -> Result<NamedKind, GenError> {
        match s {
            "m3" => return Ok(NamedKind::M3),
            "n5" => return Ok(NamedKind::N5),
            _ => {}
        }
        let (kind, rest) = s
            .split_once(':')
            .ok_or_else(|| GenError::UnknownKind(s.to_owned()))?;
        let number = |what: &str| {
            rest.parse::<u64>().map_err(|_| GenError::BadSpec {
                kind: kind.to_owned(),
                reason: format!("expected a {what}, got `{rest}`"),
            })
        };
        match kind {
            "chain" => Ok(NamedKind::Chain(number("length")? as usize)),
            "boolean" => Ok(NamedKind::Boolean(number("number of atoms")? as usize)),
            "divisor" => Ok(NamedKind::Divisor(number("base")?)),
            "partition" => Ok(NamedKind::Partition(number("ground-set size")? as usize)),
            "product" => {
                let (left, right) = rest.split_once(',').ok_or_else(|| GenError::BadSpec {
                    kind: "product".to_owned(),
                    reason: "expected two comma-separated factor specs".to_owned(),
                })?;
                if right.contains(',') || left.starts_with("product") || right.starts_with("product")
                {
                    return Err(GenError::BadSpec {
                        kind: "product".to_owned(),
                        reason: "factors must be two non-product specs".to_owned(),
                    });
                }
                Ok(NamedKind::Product(
                    Box::new(left.parse()?),
                    Box::new(right.parse()?),
                ))
            }
            other => Err(GenError::UnknownKind(other.to_owned())),
        }
    }
}

/// Builds the lattice a [`NamedKind`] describes.
pub fn make_named(kind: &NamedKind) -> Result<Lattice, GenError> {
    match kind {
        NamedKind::Chain(n) => chain(*n),
        NamedKind::Boolean(n) => boolean(*n),
        NamedKind::Divisor(n) => Ok(divisor_rel(*n)?.0.as_ref().clone()),
        NamedKind::Partition(n) => partition(*n),
        NamedKind::M3 => m3(),
        NamedKind::N5 => n5(),
        NamedKind::Product(a, b) => product(&make_named(a)?, &make_named(b)?),
    }
}

fn chain(n: usize) -> Result<Lattice, GenError> {
    if n == 0 {
        return Err(GenError::ZeroParameter("chain length"));
    }
    let ids: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let covers: Vec<(String, String)> = (1..n)
        .map(|i| ((i - 1).to_string(), i.to_string()))
        .collect();
    Ok(Lattice::from_covers(ids, &covers)?)
}

fn boolean(atoms: usize) -> Result<Lattice, GenError> {
    if atoms > MAX_BOOLEAN_ATOMS {
        return Err(GenError::SizeLimit {
            what: "boolean atoms",
            n: atoms,
            max: MAX_BOOLEAN_ATOMS,
        });
    }
    let letters = "abcdefg";
    let id_of = |mask: usize| -> String {
        if mask == 0 {
            "e".to_owned()
        } else {
            letters
                .chars()
                .enumerate()
                .filter(|&(i, _)| mask & (1 << i) != 0)
                .map(|(_, c)| c)
                .collect()
        }
    };
    let ids: Vec<String> = (0..1usize << atoms).map(id_of).collect();
    let mut covers = Vec::new();
    for mask in 0..1usize << atoms {
        for bit in 0..atoms {
            if mask & (1 << bit) == 0 {
                covers.push((id_of(mask), id_of(mask | (1 << bit))));
            }
        }
    }
    Ok(Lattice::from_covers(ids, &covers)?)
}

/// The numeric chain of all divisors of `n` together with the divisibility
/// relation on it.
///
/// The host order is the usual order of integers (a chain); divisibility is
/// a strictly stronger reflexive relation on it whenever `n` is not a prime
/// power.
pub fn divisor_rel(n: u64) -> Result<(Arc<Lattice>, Rel), GenError> {
    if n == 0 {
        return Err(GenError::ZeroParameter("divisor base"));
    }
    if n > MAX_DIVISOR_BASE {
        return Err(GenError::SizeLimit {
            what: "divisor base",
            n: n as usize,
            max: MAX_DIVISOR_BASE as usize,
        });
    }
    let mut divisors = Vec::new();
    let mut i = 1u64;
    while i * i <= n {
        if n % i == 0 {
            divisors.push(i);
            if i != n / i {
                divisors.push(n / i);
            }
        }
        i += 1;
    }
    divisors.sort_unstable();

    let ids: Vec<String> = divisors.iter().map(|d| d.to_string()).collect();
    let covers: Vec<(String, String)> = (1..ids.len())
        .map(|i| (ids[i - 1].clone(), ids[i].clone()))
        .collect();
    let host = Arc::new(Lattice::from_covers(ids, &covers)?);

    let mut pairs = Vec::new();
    for (i, a) in divisors.iter().enumerate() {
        for (j, b) in divisors.iter().enumerate().skip(i + 1) {
            if b % a == 0 {
                pairs.push((i, j));
            }
        }
    }
    let rel = Rel::from_pairs(host.clone(), &pairs)?;
    Ok((host, rel))
}

fn partition(ground: usize) -> Result<Lattice, GenError> {
    if ground == 0 {
        return Err(GenError::ZeroParameter("partition ground-set size"));
    }
    if ground > MAX_PARTITION_GROUND {
        return Err(GenError::SizeLimit {
            what: "partition ground-set elements",
            n: ground,
            max: MAX_PARTITION_GROUND,
        });
    }

    // Restricted growth strings enumerate set partitions deterministically:
    // element 0 opens block 0, and each later element joins an existing
    // block or opens the next one.
    let mut rgs_list: Vec<Vec<usize>> = Vec::new();
    let mut current = vec![0usize; ground];
    fn extend(i: usize, max_used: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == current.len() {
            out.push(current.clone());
            return;
        }
        for block in 0..=max_used + 1 {
            current[i] = block;
            extend(i + 1, max_used.max(block), current, out);
        }
    }
    if ground == 1 {
        rgs_list.push(vec![0]);
    } else {
        extend(1, 0, &mut current, &mut rgs_list);
    }

    let id_of = |rgs: &[usize]| -> String {
        let block_count = rgs.iter().max().unwrap() + 1;
        (0..block_count)
            .map(|b| {
                rgs.iter()
                    .enumerate()
                    .filter(|&(_, &block)| block == b)
                    .map(|(i, _)| (i + 1).to_string())
                    .collect::<String>()
            })
            .collect::<Vec<String>>()
            .join("|")
    };
    let refines = |fine: &[usize], coarse: &[usize]| -> bool {
        (0..ground).all(|i| {
            (0..ground).all(|j| fine[i] != fine[j] || coarse[i] == coarse[j])
        })
    };

    let ids: Vec<String> = rgs_list.iter().map(|r| id_of(r)).collect();
    let up: Vec<ElemSet> = rgs_list
        .iter()
        .map(|fine| {
            rgs_list
                .iter()
                .enumerate()
                .filter(|(_, coarse)| refines(fine, coarse))
                .map(|(j, _)| j)
                .collect()
        })
        .collect();
    Ok(Lattice::from_leq(ids, up)?)
}

fn m3() -> Result<Lattice, GenError> {
    Ok(Lattice::from_covers(
        vec!["0".into(), "a".into(), "b".into(), "c".into(), "1".into()],
        &[
            ("0", "a"),
            ("0", "b"),
            ("0", "c"),
            ("a", "1"),
            ("b", "1"),
            ("c", "1"),
        ],
    )?)
}

fn n5() -> Result<Lattice, GenError> {
    Ok(Lattice::from_covers(
        vec!["0".into(), "a".into(), "b".into(), "c".into(), "1".into()],
        &[("0", "a"), ("a", "1"), ("0", "b"), ("b", "c"), ("c", "1")],
    )?)
}

/// The direct product of two lattices, ordered componentwise.
///
/// Elements are named `(x,y)` after their coordinates, in row-major order
/// of the factors.
pub fn product(a: &Lattice, b: &Lattice) -> Result<Lattice, GenError> {
    let n = a.n().checked_mul(b.n()).unwrap_or(usize::MAX);
    if n > MAX_ELEMENTS {
        return Err(GenError::SizeLimit {
            what: "product elements",
            n,
            max: MAX_ELEMENTS,
        });
    }
    let index = |ia: usize, ib: usize| ia * b.n() + ib;
    let mut ids = Vec::with_capacity(n);
    for ia in 0..a.n() {
        for ib in 0..b.n() {
            ids.push(format!("({},{})", a.id(ia), b.id(ib)));
        }
    }
    let mut up = vec![ElemSet::EMPTY; n];
    for ia in 0..a.n() {
        for ib in 0..b.n() {
            let row = &mut up[index(ia, ib)];
            for ja in a.up_set(ia).iter() {
                for jb in b.up_set(ib).iter() {
                    row.insert(index(ja, jb));
                }
            }
        }
    }
    Ok(Lattice::from_leq(ids, up)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chains_and_booleans_have_the_advertised_shape() {
        let c = make_named(&NamedKind::Chain(4)).unwrap();
        assert_eq!(c.n(), 4);
        assert_eq!(c.covers().len(), 3);

        let b = make_named(&NamedKind::Boolean(3)).unwrap();
        assert_eq!(b.n(), 8);
        let profile = b.structure_profile(0);
        assert!(profile.modular && profile.distributive);
        assert_eq!(b.id(0), "e");
        assert_eq!(b.id(7), "abc");

        assert_eq!(
            make_named(&NamedKind::Chain(0)).unwrap_err(),
            GenError::ZeroParameter("chain length")
        );
        assert!(matches!(
            make_named(&NamedKind::Boolean(8)).unwrap_err(),
            GenError::SizeLimit { .. }
        ));
    }

    #[test]
    fn divisor_hosts_are_numeric_chains_carrying_divisibility() {
        let (host, rel) = divisor_rel(12).unwrap();
        assert_eq!(host.ids(), &["1", "2", "3", "4", "6", "12"]);
        assert_eq!(host.covers().len(), 5, "numeric order is a chain");
        // 2 divides 4 but 3 does not; 1 divides everything.
        assert!(rel.related(1, 3));
        assert!(!rel.related(2, 3));
        assert!((0..host.n()).all(|j| rel.related(0, j)));

        // A prime base leaves a two-element chain where divisibility is
        // the whole order.
        let (host, rel) = divisor_rel(7).unwrap();
        assert_eq!(host.n(), 2);
        assert!(rel.related(0, 1));
    }

    #[test]
    fn partition_lattices_count_bell_numbers() {
        assert_eq!(make_named(&NamedKind::Partition(1)).unwrap().n(), 1);
        assert_eq!(make_named(&NamedKind::Partition(2)).unwrap().n(), 2);
        assert_eq!(make_named(&NamedKind::Partition(3)).unwrap().n(), 5);
        let p4 = make_named(&NamedKind::Partition(4)).unwrap();
        assert_eq!(p4.n(), 15);
        assert_eq!(p4.id(p4.bottom()), "1|2|3|4");
        assert_eq!(p4.id(p4.top()), "1234");
        assert!(matches!(
            make_named(&NamedKind::Partition(5)).unwrap_err(),
            GenError::SizeLimit { .. }
        ));

        // Π₃ is the diamond: bottom, the three pair-merges, top.
        let p3 = make_named(&NamedKind::Partition(3)).unwrap();
        assert_eq!(
            p3.canonical_key().unwrap(),
            make_named(&NamedKind::M3).unwrap().canonical_key().unwrap()
        );
    }

    #[test]
    fn the_diamond_and_pentagon_split_on_modularity() {
        let m3 = make_named(&NamedKind::M3).unwrap();
        let p = m3.structure_profile(0);
        assert!(p.modular && !p.distributive);

        let n5 = make_named(&NamedKind::N5).unwrap();
        let p = n5.structure_profile(0);
        assert!(!p.modular && !p.distributive);
    }

    #[test]
    fn products_multiply_sizes_and_preserve_shape() {
        let square = make_named(&NamedKind::Product(
            Box::new(NamedKind::Chain(2)),
            Box::new(NamedKind::Chain(2)),
        ))
        .unwrap();
        assert_eq!(square.n(), 4);
        assert_eq!(
            square.canonical_key().unwrap(),
            make_named(&NamedKind::Boolean(2)).unwrap().canonical_key().unwrap()
        );
        assert_eq!(square.id(0), "(0,0)");

        let grid = product(
            &make_named(&NamedKind::Chain(2)).unwrap(),
            &make_named(&NamedKind::Chain(3)).unwrap(),
        )
        .unwrap();
        assert_eq!(grid.n(), 6);
        assert!(grid.structure_profile(0).distributive);
    }

    #[test]
    fn spec_strings_roundtrip() {
        for spec in [
            "chain:4",
            "boolean:3",
            "divisor:12",
            "partition:3",
            "m3",
            "n5",
            "product:chain:2,boolean:2",
        ] {
            let kind: NamedKind = spec.parse().unwrap();
            assert_eq!(kind.to_string(), spec);
            make_named(&kind).unwrap();
        }
        assert!(matches!(
            "hexagon:6".parse::<NamedKind>().unwrap_err(),
            GenError::UnknownKind(_)
        ));
        assert!(matches!(
            "chain:x".parse::<NamedKind>().unwrap_err(),
            GenError::BadSpec { .. }
        ));
        assert!(matches!(
            "product:chain:2".parse::<NamedKind>().unwrap_err(),
            GenError::BadSpec { .. }
        ));
        assert!(matches!(
            "product:product:chain:2,chain:2,chain:2"
                .parse::<NamedKind>()
                .unwrap_err(),
            GenError::BadSpec { .. }
        ));
    }
}
