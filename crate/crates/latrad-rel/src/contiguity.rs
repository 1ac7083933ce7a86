//! Contiguity closures: the smallest contiguous relations containing a
//! given one.

use crate::rel::Rel;

impl Rel {
    /// The smallest up-contiguous relation containing this one: `a` becomes
    /// related to `b` when some `c ≤ a` is already related to `b` (so `a`
    /// lies in the interval `[c, b]` that contiguity fills in).
    pub fn contiguous_closure_up(&self) -> Rel {
        let host = self.host();
        let cols = self.cols();
        let rows = (0..host.n())
            .map(|a| {
                host.up_set(a)
                    .iter()
                    .filter(|&b| cols[b].intersects(host.down_set(a)))
                    .collect()
            })
            .collect();
        Rel::from_raw(host.clone(), rows)
    }

    /// The smallest down-contiguous relation containing this one: `a`
    /// becomes related to `b` when `a` is already related to some `c ≥ b`.
    pub fn contiguous_closure_down(&self) -> Rel {
        let host = self.host();
        let rows = (0..host.n())
            .map(|a| {
                host.up_set(a)
                    .iter()
                    .filter(|&b| self.row(a).intersects(host.up_set(b)))
                    .collect()
            })
            .collect();
        Rel::from_raw(host.clone(), rows)
    }
}
