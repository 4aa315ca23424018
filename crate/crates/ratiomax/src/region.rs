//! Downward-closed feasible families: every subset of a feasible set is
//! feasible, and the empty set always is. Three kinds are supported:
//! the unconstrained family `2^N`, a cardinality bound `|S| <= p` and a
//! knapsack (capacity) bound `sum w_i <= c`.

use std::fmt;

use crate::error::{Error, Result};
use crate::subset::Subset;

/// Largest ground set accepted by the enumerating operations
/// (feasible-set streaming and brute force).
pub const ENUMERATION_LIMIT: usize = 24;

/// A downward-closed family of feasible subsets.
#[derive(Clone, Debug, PartialEq)]
pub enum FeasibleRegion {
    /// All subsets of the ground set.
    Unconstrained,
    /// Sets with at most `p` items, `p >= 1`.
    Cardinality(usize),
    /// Sets whose total weight stays within `capacity`. Weights are
    /// nonnegative; the inequality is inclusive.
    Knapsack { weights: Vec<f64>, capacity: f64 },
}

impl FeasibleRegion {
    /// Checks the region parameters against a ground set of size `n`.
    pub fn validate(&self, n: usize) -> Result<()> {
        match self {
            FeasibleRegion::Unconstrained => Ok(()),
            FeasibleRegion::Cardinality(p) => {
                if *p == 0 || *p > n {
                    Err(Error::InvalidModel(format!(
                        "cardinality bound p = {p} must satisfy 1 <= p <= {n}"
                    )))
                } else {
                    Ok(())
                }
            }
            FeasibleRegion::Knapsack { weights, capacity } => {
                if weights.len() != n {
                    return Err(Error::InvalidModel(format!(
                        "knapsack has {} weights for a ground set of {n}",
                        weights.len()
                    )));
                }
                if let Some(w) = weights.iter().find(|w| !w.is_finite() || **w < 0.0) {
                    return Err(Error::InvalidModel(format!(
                        "knapsack weights must be finite and nonnegative, got {w}"
                    )));
                }
                if !capacity.is_finite() || *capacity < 0.0 {
                    return Err(Error::InvalidModel(format!(
                        "knapsack capacity must be finite and nonnegative, got {capacity}"
                    )));
                }
                Ok(())
            }
        }
    }

    /// Membership test. `s` must be a subset of `{1, .., n}`.
    pub fn contains(&self, s: Subset) -> bool {
        match self {
            FeasibleRegion::Unconstrained => true,
            FeasibleRegion::Cardinality(p) => s.len() <= *p,
            FeasibleRegion::Knapsack { weights, capacity } => {
                s.iter().map(|i| weights[i - 1]).sum::<f64>() <= *capacity
            }
        }
    }

    /// Whether `s ∪ {j}` is feasible, given feasible `s` with `j ∉ s`.
    pub fn extendable(&self, s: Subset, j: usize) -> bool {
        debug_assert!(!s.contains(j));
        self.contains(s.with(j))
    }

    /// Streams every feasible subset exactly once, in ascending bitmask
    /// order. Guarded at [`ENUMERATION_LIMIT`] items.
    pub fn enumerate(&self, n: usize) -> Result<FeasibleSets<'_>> {
        if n > ENUMERATION_LIMIT {
            return Err(Error::GroundSetTooLarge {
                n,
                limit: ENUMERATION_LIMIT,
            });
        }
        Ok(FeasibleSets {
            region: self,
            next: 0,
            end: 1u64 << n,
        })
    }
}

impl fmt::Display for FeasibleRegion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FeasibleRegion::Unconstrained => write!(f, "unconstrained"),
            FeasibleRegion::Cardinality(p) => write!(f, "cardinality({p})"),
            FeasibleRegion::Knapsack { capacity, .. } => write!(f, "knapsack(c={capacity})"),
        }
    }
}

/// Iterator over the feasible subsets of `{1, .., n}`.
pub struct FeasibleSets<'a> {
    region: &'a FeasibleRegion,
    next: u64,
    end: u64,
}

impl Iterator for FeasibleSets<'_> {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        while self.next < self.end {
            let s = Subset::from_mask(self.next);
            self.next += 1;
            if self.region.contains(s) {
                return Some(s);
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unconstrained_contains_everything() {
        let region = FeasibleRegion::Unconstrained;
        assert!(region.contains(Subset::full(10)));
        assert_eq!(region.enumerate(3).unwrap().count(), 8);
    }

    #[test]
    fn cardinality_membership_and_enumeration() {
        let region = FeasibleRegion::Cardinality(2);
        assert!(!region.contains(Subset::from_indices([1, 2, 3], 3).unwrap()));
        assert!(region.contains(Subset::from_indices([1, 3], 3).unwrap()));

        let sets: Vec<_> = FeasibleRegion::Cardinality(1)
            .enumerate(3)
            .unwrap()
            .collect();
        let expect: Vec<Subset> = [vec![], vec![1], vec![2], vec![3]]
            .into_iter()
            .map(|ix| Subset::from_indices(ix, 3).unwrap())
            .collect();
        let mut sorted = expect.clone();
        sorted.sort();
        assert_eq!(sets, sorted);
    }

    #[test]
    fn knapsack_inclusive_boundary() {
        let region = FeasibleRegion::Knapsack {
            weights: vec![2.0, 3.0, 4.0],
            capacity: 5.0,
        };
        assert!(region.contains(Subset::from_indices([1, 2], 3).unwrap()));
        assert!(!region.contains(Subset::from_indices([2, 3], 3).unwrap()));
        // Exactly at capacity stays feasible.
        assert!(region.extendable(Subset::from_indices([1], 3).unwrap(), 2));
    }

    #[test]
    fn knapsack_enumeration_count() {
        let region = FeasibleRegion::Knapsack {
            weights: vec![1.0, 1.0, 1.0],
            capacity: 2.0,
        };
        assert_eq!(region.enumerate(3).unwrap().count(), 7);
    }

    #[test]
    fn enumeration_guard() {
        assert_eq!(
            FeasibleRegion::Unconstrained.enumerate(25).err(),
            Some(Error::GroundSetTooLarge { n: 25, limit: 24 })
        );
    }

    #[test]
    fn validation_rejects_bad_parameters() {
        assert!(FeasibleRegion::Cardinality(0).validate(3).is_err());
        assert!(FeasibleRegion::Cardinality(4).validate(3).is_err());
        assert!(FeasibleRegion::Knapsack {
            weights: vec![1.0],
            capacity: 1.0
        }
        .validate(2)
        .is_err());
        assert!(FeasibleRegion::Knapsack {
            weights: vec![1.0, -0.5],
            capacity: 1.0
        }
        .validate(2)
        .is_err());
    }
}
