//! Subsets of a catalog, stored as 128-bit masks.

use std::fmt;

/// Largest catalog supported by [`SubcatSet`].
pub const MAX_CATALOG: usize = 128;

/// A set of catalog indices standing for the additive subcategory they generate.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SubcatSet(pub u128);

impl SubcatSet {
    pub const EMPTY: SubcatSet = SubcatSet(0);

    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_CATALOG);
        if n == MAX_CATALOG {
            SubcatSet(u128::MAX)
        } else {
            SubcatSet((1u128 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        SubcatSet(1u128 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        it.into_iter().fold(SubcatSet::EMPTY, |s, i| s.with(i))
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> Self {
        SubcatSet(self.0 | 1u128 << i)
    }

    pub fn without(self, i: usize) -> Self {
        SubcatSet(self.0 & !(1u128 << i))
    }

    pub fn union(self, other: Self) -> Self {
        SubcatSet(self.0 | other.0)
    }

    pub fn intersect(self, other: Self) -> Self {
        SubcatSet(self.0 & other.0)
    }

    pub fn minus(self, other: Self) -> Self {
        SubcatSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i)
        })
    }

    /// All subsets of `self`, in increasing order of their masks.
    pub fn subsets(self) -> impl Iterator<Item = SubcatSet> {
        let mask = self.0;
        let mut next = Some(0u128);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == mask { None } else { Some((cur.wrapping_sub(mask)) & mask) };
            Some(SubcatSet(cur))
        })
    }
}

impl fmt::Debug for SubcatSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for SubcatSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        SubcatSet::from_indices(iter)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basics() {
        let s = SubcatSet::from_indices([0, 2]);
        assert!(s.contains(0) && !s.contains(1));
        assert_eq!(s.len(), 2);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(SubcatSet::full(3).minus(s), SubcatSet::singleton(1));
        assert_eq!(SubcatSet::full(128).len(), 128);
        assert_eq!(s.subsets().count(), 4);
        assert_eq!(SubcatSet::EMPTY.subsets().count(), 1);
    }

    proptest! {
        #[test]
        fn subsets_are_exactly_the_subsets(mask in 0u128..4096) {
            let s = SubcatSet(mask);
            let subs: Vec<SubcatSet> = s.subsets().collect();
            prop_assert_eq!(subs.len(), 1usize << s.len());
            prop_assert!(subs.iter().all(|t| t.is_subset(s)));
            prop_assert!(subs.windows(2).all(|w| w[0] < w[1]));
        }
    }
}
