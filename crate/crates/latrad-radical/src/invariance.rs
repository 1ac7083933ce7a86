//! Invariance of radical data under lattice automorphisms.
//!
//! An automorphism that preserves a relation and fixes an element must
//! also fix everything canonically attached to that element: its hull
//! elements, its radical and dual radical where those exist, and the
//! radicals of the chain closures when the relation is compatible with
//! joins or meets. [`automorphism_invariance`] computes all of these and
//! verifies the fixedness claims on the way.

use latrad_rel::Rel;

use crate::error::RadicalError;
use crate::radicals::{radical_maps, sigma_s};

/// The elements canonically attached to a fixed point of an automorphism.
///
/// `sigma` and `s` always exist; `radical`/`dual_radical` require the
/// relation to be a contiguous expanded order in the matching direction,
/// and the `chain_*` fields require join- (resp. meet-) compatibility,
/// which makes the corresponding chain closure such an order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InvarianceReport {
    pub sigma: usize,
    pub s: usize,
    pub radical: Option<usize>,
    pub dual_radical: Option<usize>,
    pub chain_radical: Option<usize>,
    pub chain_dual_radical: Option<usize>,
}

/// Checks that `theta` is an automorphism preserving `rel` and fixing
/// `a`, then reports the canonical elements attached to `a`, each one
/// verified to be fixed by `theta` as well.
pub fn automorphism_invariance(
    rel: &Rel,
    theta: &[usize],
    a: usize,
) -> Result<InvarianceReport, RadicalError> {
    let host = rel.host();
    let n = host.n();

    if theta.len() != n {
        return Err(RadicalError::NotAutomorphism(format!(
            "permutation has {} entries for {} elements",
            theta.len(),
            n
        )));
    }
    let mut seen = vec![false; n];
    for &img in theta {
        if img >= n || seen[img] {
            return Err(RadicalError::NotAutomorphism(
                "not a permutation of the elements".into(),
            ));
        }
        seen[img] = true;
    }
    for x in 0..n {
        for y in 0..n {
            if host.leq(x, y) != host.leq(theta[x], theta[y]) {
                return Err(RadicalError::NotAutomorphism(format!(
                    "order is not preserved at ({}, {})",
                    host.id(x),
                    host.id(y)
                )));
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            if rel.related(x, y) != rel.related(theta[x], theta[y]) {
                return Err(RadicalError::NotPreserving);
            }
        }
    }
    if theta[a] != a {
        return Err(RadicalError::NotFixed(host.id(a).to_owned()));
    }

    let fixed = |x: usize, what: &str| {
        assert_eq!(
            theta[x],
            x,
            "{what} of a fixed element must be fixed by the automorphism"
        );
        x
    };

    let (sigma_map, s_map) = sigma_s(rel);
    let sigma = fixed(sigma_map.apply(a), "the lower hull");
    let s = fixed(s_map.apply(a), "the upper hull");

    let profile = rel.classify()?;
    let (r_map, p_map) = radical_maps(rel)?;
    let radical = r_map.map(|g| fixed(g.apply(a), "the radical"));
    let dual_radical = p_map.map(|g| fixed(g.apply(a), "the dual radical"));

    let chain_radical = if profile.h_relation {
        let up = rel.chain_closure_up();
        for x in 0..n {
            for y in 0..n {
                assert_eq!(
                    up.related(x, y),
                    up.related(theta[x], theta[y]),
                    "an automorphism preserving a join-compatible relation \
                     preserves its upward chain closure"
                );
            }
        }
        let (g, _) = radical_maps(&up)?;
        let g = g.expect("the chain closure of a join-compatible relation is an expanded contiguous order");
        Some(fixed(g.apply(a), "the chain closure radical"))
    } else {
        None
    };

    let chain_dual_radical = if profile.dual_h_relation {
        let down = rel.chain_closure_down();
        for x in 0..n {
            for y in 0..n {
                assert_eq!(
                    down.related(x, y),
                    down.related(theta[x], theta[y]),
                    "an automorphism preserving a meet-compatible relation \
                     preserves its downward chain closure"
                );
            }
        }
        let (_, g) = radical_maps(&down)?;
        let g = g.expect("the chain closure of a meet-compatible relation is an expanded contiguous order");
        Some(fixed(g.apply(a), "the chain closure dual radical"))
    } else {
        None
    };

    Ok(InvarianceReport {
        sigma,
        s,
        radical,
        dual_radical,
        chain_radical,
        chain_dual_radical,
    })
}
