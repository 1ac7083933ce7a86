//! Compact sets of element indices backed by a single `u128`.
//!
//! Everything in this workspace indexes lattice elements by position, so a
//! set of elements is one machine word pair. Order computations (up-sets,
//! intervals, bound searches) then reduce to bitwise operations.

use std::fmt;

/// Hard capacity for any lattice handled by this workspace.
pub const MAX_ELEMENTS: usize = 128;

/// A set of element indices in `0..128`, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct ElemSet(u128);

impl ElemSet {
    /// The empty set.
    pub const EMPTY: ElemSet = ElemSet(0);

    /// `{0, 1, ..., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ELEMENTS);
        if n == MAX_ELEMENTS {
            ElemSet(u128::MAX)
        } else {
            ElemSet((1u128 << n) - 1)
        }
    }

    /// `{i}`.
    #[inline]
    pub fn singleton(i: usize) -> Self {
        ElemSet(1u128 << i)
    }

    /// Builds a set from a raw bitmask.
    #[inline]
    pub fn from_bits(bits: u128) -> Self {
        ElemSet(bits)
    }

    /// The raw bitmask.
    #[inline]
    pub fn bits(self) -> u128 {
        self.0
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u128 << i;
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1u128 << i);
    }

    /// Copy of `self` with `i` added.
    #[inline]
    pub fn with(self, i: usize) -> Self {
        ElemSet(self.0 | 1u128 << i)
    }

    /// Copy of `self` with `i` removed.
    #[inline]
    pub fn without(self, i: usize) -> Self {
        ElemSet(self.0 & !(1u128 << i))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        ElemSet(self.0 | other.0)
    }

    #[inline]
    pub fn inter(self, other: Self) -> Self {
        ElemSet(self.0 & other.0)
    }

    #[inline]
    pub fn minus(self, other: Self) -> Self {
        ElemSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_superset(self, other: Self) -> bool {
        other.is_subset(self)
    }

    #[inline]
    pub fn intersects(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    /// Smallest index in the set, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Iterates over indices in ascending order.
    #[inline]
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }
}

/// Ascending iterator over the indices of an [`ElemSet`].
pub struct Iter(u128);

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let i = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(i)
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl IntoIterator for ElemSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl FromIterator<usize> for ElemSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = ElemSet::EMPTY;
        for i in iter {
            debug_assert!(i < MAX_ELEMENTS);
            s.insert(i);
        }
        s
    }
}

impl std::ops::BitOr for ElemSet {
    type Output = ElemSet;
    fn bitor(self, rhs: Self) -> Self {
        self.union(rhs)
    }
}

impl std::ops::BitAnd for ElemSet {
    type Output = ElemSet;
    fn bitand(self, rhs: Self) -> Self {
        self.inter(rhs)
    }
}

impl std::ops::Sub for ElemSet {
    type Output = ElemSet;
    fn sub(self, rhs: Self) -> Self {
        self.minus(rhs)
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
