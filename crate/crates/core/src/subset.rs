//! Bitsets over point indices.

use std::cmp::Ordering;
use std::fmt;

/// A set of point indices. Ordered lexicographically by the sorted member
/// sequence, so `{0} < {0,1} < {0,2} < {1}`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Subset {
    words: Vec<u64>,
}

impl Subset {
    pub fn empty() -> Self {
        Subset { words: Vec::new() }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        let mut s = Subset::empty();
        for i in it {
            s.insert(i);
        }
        s
    }

    pub fn full(n: usize) -> Self {
        Subset::from_indices(0..n)
    }

    pub fn insert(&mut self, i: usize) {
        let w = i / 64;
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        if let Some(w) = self.words.get_mut(i / 64) {
            *w &= !(1 << (i % 64));
        }
        self.trim();
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words.get(i / 64).is_some_and(|w| w >> (i % 64) & 1 == 1)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(wi * 64 + b)
            })
        })
    }

    /// Restriction to indices `< 64` as a mask; `None` if larger indices are
    /// present.
    pub fn as_u64(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    pub fn from_u64(mask: u64) -> Self {
        let mut s = Subset { words: vec![mask] };
        s.trim();
        s
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.words
            .iter()
            .enumerate()
            .all(|(i, &w)| w & !other.words.get(i).copied().unwrap_or(0) == 0)
    }

    /// Elements of `self` mapped through `map` (old index -> new index);
    /// indices mapped to `None` are dropped.
    pub fn remap(&self, map: &[Option<usize>]) -> Subset {
        Subset::from_indices(self.iter().filter_map(|i| map.get(i).copied().flatten()))
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Subset::from_indices(iter)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn lexicographic_order() {
        let a = Subset::from_indices([0]);
        let b = Subset::from_indices([0, 1]);
        let c = Subset::from_indices([0, 2]);
        let d = Subset::from_indices([1]);
        assert!(a < b && b < c && c < d);
    }

    #[test]
    fn wide_indices() {
        let mut s = Subset::from_indices([3, 70, 130]);
        assert_eq!(s.len(), 3);
        assert!(s.contains(70));
        assert_eq!(s.as_u64(), None);
        s.remove(130);
        s.remove(70);
        assert_eq!(s.as_u64(), Some(1 << 3));
        assert_eq!(s, Subset::from_u64(8));
    }

    proptest! {
        #[test]
        fn iter_roundtrips(mut v in proptest::collection::vec(0usize..200, 0..30)) {
            let s = Subset::from_indices(v.clone());
            v.sort();
            v.dedup();
            prop_assert_eq!(s.iter().collect::<Vec<_>>(), v.clone());
            prop_assert_eq!(s.len(), v.len());
        }
    }
}
