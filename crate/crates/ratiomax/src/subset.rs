//! Subsets of the ground set `{1, .., n}` backed by a 64-bit mask.
//!
//! Items are indexed from 1 at the interface; bit `i - 1` of the mask
//! stores membership of item `i`. The mask representation caps the
//! ground set at [`MAX_GROUND_SET`] items, which is far beyond what the
//! enumerating operations accept anyway.

use std::fmt;

use crate::error::{Error, Result};

/// Largest ground set representable by the bitmask subset type.
pub const MAX_GROUND_SET: usize = 64;

/// A subset of `{1, .., n}` stored as a bitmask.
///
/// Ordering is by mask value, which is the "lexicographic by bitmask"
/// order used for deterministic enumeration and tie-breaking.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subset(u64);

impl Subset {
    /// The empty set.
    pub const EMPTY: Subset = Subset(0);

    /// The full ground set `{1, .., n}`.
    pub fn full(n: usize) -> Subset {
        debug_assert!(n <= MAX_GROUND_SET);
        if n == MAX_GROUND_SET {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    /// Builds a subset from 1-based item indices, validating range.
    pub fn from_indices<I: IntoIterator<Item = usize>>(items: I, n: usize) -> Result<Subset> {
        let mut mask = 0u64;
        for item in items {
            if item == 0 || item > n {
                return Err(Error::ItemOutOfRange { item, n });
            }
            mask |= 1u64 << (item - 1);
        }
        Ok(Subset(mask))
    }

    pub(crate) fn from_mask(mask: u64) -> Subset {
        Subset(mask)
    }

    pub fn contains(self, item: usize) -> bool {
        debug_assert!((1..=MAX_GROUND_SET).contains(&item));
        self.0 & (1u64 << (item - 1)) != 0
    }

    /// Returns `self ∪ {item}`.
    pub fn with(self, item: usize) -> Subset {
        debug_assert!((1..=MAX_GROUND_SET).contains(&item));
        Subset(self.0 | (1u64 << (item - 1)))
    }

    /// Returns `self ∖ {item}`.
    pub fn without(self, item: usize) -> Subset {
        debug_assert!((1..=MAX_GROUND_SET).contains(&item));
        Subset(self.0 & !(1u64 << (item - 1)))
    }

    pub fn insert(&mut self, item: usize) {
        *self = self.with(item);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    /// Iterates members in ascending order (1-based).
    pub fn iter(self) -> SubsetIter {
        SubsetIter(self.0)
    }

    /// Members as a sorted index list, the interface representation.
    pub fn indices(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for Subset {
    /// Collects 1-based indices; callers must keep them within
    /// `1..=MAX_GROUND_SET`.
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Subset {
        let mut s = Subset::EMPTY;
        for item in iter {
            s.insert(item);
        }
        s
    }
}

/// Ascending iterator over the members of a [`Subset`].
pub struct SubsetIter(u64);

impl Iterator for SubsetIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let item = self.0.trailing_zeros() as usize + 1;
        self.0 &= self.0 - 1;
        Some(item)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, item) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{item}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
