//! Complement relations and the derived interval-set orders.
//!
//! The *upper complement* of a relation relates `a` to `b` when nothing in
//! `[a, b]` except `a` itself is related upward from `a`; the *lower
//! complement* is dual. Iterating the two produces the `lower`/`upper`
//! interval orders: `a` is lower-related to `b` when every nontrivial
//! element of `[a, b]` is reachable from strictly below within the
//! interval.

use crate::rel::Rel;

impl Rel {
    /// The upper complement: `a` relates to `b` (for `a ≤ b`) exactly when
    /// `[a, b]` meets the row of `a` only in `a`.
    pub fn upper_complement(&self) -> Rel {
        let host = self.host();
        let rows = (0..host.n())
            .map(|a| {
                host.up_set(a)
                    .iter()
                    .filter(|&b| {
                        let interval = host.up_set(a) & host.down_set(b);
                        (self.row(a) & interval).without(a).is_empty()
                    })
                    .collect()
            })
            .collect();
        Rel::from_raw(host.clone(), rows)
    }

    /// The lower complement: `a` relates to `b` exactly when `[a, b]` meets
    /// the column of `b` only in `b`.
    pub fn lower_complement(&self) -> Rel {
        let host = self.host();
        let cols = self.cols();
        let rows = (0..host.n())
            .map(|a| {
                host.up_set(a)
                    .iter()
                    .filter(|&b| {
                        let interval = host.up_set(a) & host.down_set(b);
                        (cols[b] & interval).without(b).is_empty()
                    })
                    .collect()
            })
            .collect();
        Rel::from_raw(host.clone(), rows)
    }

    /// The lower interval order: `a` relates to `b` when every element of
    /// `(a, b]` is related upward from some strictly smaller element of the
    /// interval.
    pub fn lower_order(&self) -> Rel {
        let host = self.host();
        let cols = self.cols();
        let rows = (0..host.n())
            .map(|a| {
                host.up_set(a)
                    .iter()
                    .filter(|&b| {
                        let interval = host.up_set(a) & host.down_set(b);
                        interval.without(a).iter().all(|x| {
                            let below = interval & host.down_set(x).without(x);
                            below.intersects(cols[x])
                        })
                    })
                    .collect()
            })
            .collect();
        Rel::from_raw(host.clone(), rows)
    }

    /// The upper interval order: `a` relates to `b` when every element of
    /// `[a, b)` is related downward to some strictly larger element of the
    /// interval.
    pub fn upper_order(&self) -> Rel {
        let host = self.host();
        let rows = (0..host.n())
            .map(|a| {
                host.up_set(a)
                    .iter()
                    .filter(|&b| {
                        let interval = host.up_set(a) & host.down_set(b);
                        interval.without(b).iter().all(|x| {
                            let above = interval & host.up_set(x).without(x);
                            above.intersects(self.row(x))
                        })
                    })
                    .collect()
            })
            .collect();
        Rel::from_raw(host.clone(), rows)
    }
}
