//! Property classification of a relation.
//!
//! Each directed property is computed literally from its definition. Where
//! a property has several provably equivalent characterizations, all of
//! them are computed and compared, and a disagreement surfaces as
//! [`RelError::InternalInconsistency`] instead of a silently wrong flag.
//! The dual-direction flags are computed by classifying the transposed
//! relation on the dual host with the same code.

use latrad_core::ElemSet;
use serde::{Deserialize, Serialize};

use crate::error::RelError;
use crate::rel::Rel;

/// Full subset cross-checks for expandedness run at or below this size.
const EXPANDED_SUBSET_CHECK_MAX: usize = 10;

/// The directed and composite properties of a relation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyProfile {
    /// Related pairs absorb their interval from below: `a` related to `b`
    /// makes every element of `[a, b]` related to `b`.
    pub up_contiguous: bool,
    /// Dually: `a` becomes related to every element of `[a, b]`.
    pub down_contiguous: bool,
    /// Each row is closed under joins of its nonempty subsets.
    pub up_expanded: bool,
    /// Each column is closed under meets of its nonempty subsets.
    pub down_expanded: bool,
    pub transitive: bool,
    /// Stable under joins on both sides (`a` rel `b` gives `a∨x` rel `b∨x`).
    pub h_relation: bool,
    /// Stable under meets on both sides.
    pub dual_h_relation: bool,
    pub hh_relation: bool,
    /// Transitive, up-contiguous and up-expanded.
    pub t_order: bool,
    pub dual_t_order: bool,
    pub tt_order: bool,
    /// Transitive, up-expanded and join-stable.
    pub r_order: bool,
    pub dual_r_order: bool,
    pub rr_order: bool,
}

impl Rel {
    /// Classifies the relation, cross-checking every property that has
    /// more than one characterization.
    pub fn classify(&self) -> Result<PropertyProfile, RelError> {
        let up = Directed::compute(self)?;
        let down = Directed::compute(&self.dual())?;

        let transitive = up.transitive;
        if transitive != down.transitive {
            return Err(RelError::InternalInconsistency(
                "transitivity differs between a relation and its transpose".into(),
            ));
        }

        let t_order = transitive && up.contiguous && up.expanded;
        let dual_t_order = transitive && down.contiguous && down.expanded;
        let r_order = transitive && up.expanded && up.h;
        let dual_r_order = transitive && down.expanded && down.h;
        if r_order && !t_order {
            return Err(RelError::InternalInconsistency(
                "join-stable order that is not up-contiguous".into(),
            ));
        }
        if dual_r_order && !dual_t_order {
            return Err(RelError::InternalInconsistency(
                "meet-stable order that is not down-contiguous".into(),
            ));
        }

        Ok(PropertyProfile {
            up_contiguous: up.contiguous,
            down_contiguous: down.contiguous,
            up_expanded: up.expanded,
            down_expanded: down.expanded,
            transitive,
            h_relation: up.h,
            dual_h_relation: down.h,
            hh_relation: up.h && down.h,
            t_order,
            dual_t_order,
            tt_order: t_order && dual_t_order,
            r_order,
            dual_r_order,
            rr_order: r_order && dual_r_order,
        })
    }
}

/// The upward-directed properties of one relation; the dual flags come from
/// running the same computation on the transposed relation.
struct Directed {
    contiguous: bool,
    expanded: bool,
    transitive: bool,
    h: bool,
}

impl Directed {
    fn compute(rel: &Rel) -> Result<Directed, RelError> {
        let host = rel.host();
        let n = host.n();
        let cols = rel.cols();

        let contiguous = (0..n).all(|a| {
            rel.row(a)
                .iter()
                .all(|b| (host.up_set(a) & host.down_set(b)).is_subset(cols[b]))
        });

        let expanded = (0..n).all(|a| {
            let row = rel.row(a);
            row.iter()
                .all(|x| row.iter().all(|y| row.contains(host.join(x, y))))
        });
        if n <= EXPANDED_SUBSET_CHECK_MAX {
            let by_subsets = (0..n).all(|a| {
                let row: Vec<usize> = rel.row(a).iter().collect();
                let k = row.len();
                (1usize..1 << k).all(|mask| {
                    let g: ElemSet = (0..k)
                        .filter(|&i| mask >> i & 1 == 1)
                        .map(|i| row[i])
                        .collect();
                    rel.related(a, host.join_set(g))
                })
            });
            if by_subsets != expanded {
                return Err(RelError::InternalInconsistency(format!(
                    "expandedness by pairs ({expanded}) and by subsets ({by_subsets}) disagree"
                )));
            }
        }

        let transitive =
            (0..n).all(|a| rel.row(a).iter().all(|b| rel.row(b).is_subset(rel.row(a))));

        // Three equivalent characterizations of join-stability, computed
        // independently.
        let h1 = contiguous
            && (0..n).all(|a| {
                (0..n).all(|b| !rel.related(host.meet(a, b), b) || rel.related(a, host.join(a, b)))
            });
        let h2 = (0..n).all(|a| {
            rel.row(a).iter().all(|b| {
                host.up_set(a)
                    .iter()
                    .all(|c| rel.related(c, host.join(b, c)))
            })
        });
        let h3 = (0..n).all(|a| {
            rel.row(a).iter().all(|b| {
                (0..n).all(|x| rel.related(host.join(a, x), host.join(b, x)))
            })
        });
        if h1 != h2 || h2 != h3 {
            return Err(RelError::InternalInconsistency(format!(
                "join-stability characterizations disagree: {h1}/{h2}/{h3}"
            )));
        }

        Ok(Directed {
            contiguous,
            expanded,
            transitive,
            h: h1,
        })
    }
}
