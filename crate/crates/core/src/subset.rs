//! Fixed-width subsets of `{1..16}`.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// A subset of `{1..=16}`; element `i` is stored at bit `i - 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Subset(pub u16);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn singleton(i: usize) -> Self {
        debug_assert!((1..=16).contains(&i));
        Subset(1 << (i - 1))
    }

    /// `{1..=n}`.
    pub fn full(n: usize) -> Self {
        if n >= 16 {
            Subset(u16::MAX)
        } else {
            Subset(((1u32 << n) - 1) as u16)
        }
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(it: I) -> Self {
        let mut bits = 0u16;
        for i in it {
            bits |= 1 << (i - 1);
        }
        Subset(bits)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        (1..=16).contains(&i) && self.0 & (1 << (i - 1)) != 0
    }

    pub fn insert(self, i: usize) -> Self {
        Subset(self.0 | (1 << (i - 1)))
    }

    pub fn remove(self, i: usize) -> Self {
        Subset(self.0 & !(1 << (i - 1)))
    }

    pub fn union(self, other: Subset) -> Self {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Self {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Self {
        Subset(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: Subset) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest element, if any.
    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 16 - self.0.leading_zeros() as usize)
    }

    /// Number of elements strictly smaller than `i`.
    pub fn count_below(self, i: usize) -> usize {
        let mask = ((1u32 << (i - 1)) - 1) as u16;
        (self.0 & mask).count_ones() as usize
    }

    /// Number of elements strictly larger than `i`.
    pub fn count_above(self, i: usize) -> usize {
        let mask = !(((1u32 << i) - 1) as u16);
        (self.0 & mask).count_ones() as usize
    }

    pub fn iter(self) -> SubsetIter {
        SubsetIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Image under a map on elements.
    pub fn map(self, f: impl Fn(usize) -> usize) -> Self {
        Subset::from_elements(self.iter().map(f))
    }

    /// Lexicographic comparison of the sorted element lists.
    pub fn lex_cmp(self, other: Subset) -> Ordering {
        let mut a = self.iter();
        let mut b = other.iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(x), Some(y)) if x != y => return x.cmp(&y),
                _ => {}
            }
        }
    }
}

pub struct SubsetIter(u16);

impl Iterator for SubsetIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for SubsetIter {}

impl IntoIterator for Subset {
    type Item = usize;
    type IntoIter = SubsetIter;
    fn into_iter(self) -> SubsetIter {
        self.iter()
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

/// Do the two disjoint subsets cross, i.e. are there `a < b < c < d` with
/// `a, c` in one and `b, d` in the other?
pub fn crosses(a: Subset, b: Subset) -> bool {
    debug_assert!(a.is_disjoint(b));
    // Count label changes along the merged order; crossing needs at least
    // three changes in the linear order (four cyclically).
    let mut changes = 0;
    let mut last: Option<bool> = None;
    for i in a.union(b).iter() {
        let in_a = a.contains(i);
        if let Some(prev) = last {
            if prev != in_a {
                changes += 1;
            }
        }
        last = Some(in_a);
    }
    changes >= 3
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_cross(a: Subset, b: Subset) -> bool {
        let av = a.to_vec();
        let bv = b.to_vec();
        for &x in &av {
            for &z in &av {
                for &y in &bv {
                    for &w in &bv {
                        if (x < y && y < z && z < w) || (y < x && x < w && w < z) {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }

    #[test]
    fn crossing_matches_four_index_definition() {
        for a in 1u16..256 {
            for b in 1u16..256 {
                if a & b != 0 {
                    continue;
                }
                let (a, b) = (Subset(a), Subset(b));
                assert_eq!(crosses(a, b), brute_cross(a, b), "{a:?} {b:?}");
            }
        }
    }

    #[test]
    fn counts_and_extremes() {
        let s = Subset::from_elements([2, 5, 9]);
        assert_eq!(s.len(), 3);
        assert_eq!(s.min(), Some(2));
        assert_eq!(s.max(), Some(9));
        assert_eq!(s.count_below(5), 1);
        assert_eq!(s.count_above(5), 1);
        assert_eq!(Subset::full(16).len(), 16);
        assert_eq!(Subset::full(16).count_above(16), 0);
        assert_eq!(Subset::EMPTY.min(), None);
    }

    #[test]
    fn lex_order_on_element_lists() {
        let a = Subset::from_elements([1, 2]);
        let b = Subset::from_elements([1, 3]);
        let c = Subset::from_elements([1, 2, 3]);
        assert_eq!(a.lex_cmp(b), Ordering::Less);
        assert_eq!(a.lex_cmp(c), Ordering::Less);
        assert_eq!(c.lex_cmp(b), Ordering::Less);
    }
}
