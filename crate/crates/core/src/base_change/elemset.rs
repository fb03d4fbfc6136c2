use std::cmp::Ordering;
use std::fmt;

/// A subset of at most 256 indexed elements.
///
/// Sets compare as 256-bit unsigned integers, so `Ord` is the bitmask order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ElemSet([u64; 4]);

impl ElemSet {
    pub const CAPACITY: usize = 256;
    pub const EMPTY: ElemSet = ElemSet([0; 4]);

    /// `{0, 1, …, len - 1}`.
    pub fn full(len: usize) -> ElemSet {
        assert!(len <= Self::CAPACITY);
        let mut words = [0u64; 4];
        for (w, word) in words.iter_mut().enumerate() {
            let lo = w * 64;
            if len >= lo + 64 {
                *word = u64::MAX;
            } else if len > lo {
                *word = (1u64 << (len - lo)) - 1;
            }
        }
        ElemSet(words)
    }

    pub fn singleton(i: usize) -> ElemSet {
        let mut s = ElemSet::EMPTY;
        s.insert(i);
        s
    }

    pub fn from_low_bits(bits: u64) -> ElemSet {
        ElemSet([bits, 0, 0, 0])
    }

    /// The first word, for sets known to live below index 64.
    pub fn low_bits(&self) -> u64 {
        debug_assert!(self.0[1..].iter().all(|w| *w == 0));
        self.0[0]
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < Self::CAPACITY, "element index {i} out of range");
        self.0[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    pub fn with(mut self, i: usize) -> ElemSet {
        self.insert(i);
        self
    }

    pub fn without(mut self, i: usize) -> ElemSet {
        self.remove(i);
        self
    }

    pub fn union(&self, other: &ElemSet) -> ElemSet {
        ElemSet(std::array::from_fn(|w| self.0[w] | other.0[w]))
    }

    pub fn intersection(&self, other: &ElemSet) -> ElemSet {
        ElemSet(std::array::from_fn(|w| self.0[w] & other.0[w]))
    }

    pub fn difference(&self, other: &ElemSet) -> ElemSet {
        ElemSet(std::array::from_fn(|w| self.0[w] & !other.0[w]))
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        (0..4).all(|w| self.0[w] & !other.0[w] == 0)
    }

    pub fn intersects(&self, other: &ElemSet) -> bool {
        (0..4).any(|w| self.0[w] & other.0[w] != 0)
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0 == [0; 4]
    }

    /// The smallest member.
    pub fn first(&self) -> Option<usize> {
        (0..4)
            .find(|&w| self.0[w] != 0)
            .map(|w| w * 64 + self.0[w].trailing_zeros() as usize)
    }

    /// Member indices in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..4).flat_map(move |w| {
            let mut word = self.0[w];
            std::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let bit = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(w * 64 + bit)
            })
        })
    }

    /// Every subset of `self`, in ascending bitmask order.
    ///
    /// Panics when `self` has more than 63 members.
    pub fn subsets(&self) -> impl Iterator<Item = ElemSet> + '_ {
        let members: Vec<usize> = self.iter().collect();
        assert!(members.len() < 64, "too many members to enumerate subsets");
        (0..1u64 << members.len()).map(move |pick| {
            let mut s = ElemSet::EMPTY;
            for (k, i) in members.iter().enumerate() {
                if pick >> k & 1 == 1 {
                    s.insert(*i);
                }
            }
            s
        })
    }
}

impl FromIterator<usize> for ElemSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ElemSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl Ord for ElemSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.iter().rev().cmp(other.0.iter().rev())
    }
}

impl PartialOrd for ElemSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// The order used for every subset family: smaller sets first, then bitmask.
pub fn family_order(a: &ElemSet, b: &ElemSet) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

pub(crate) fn sort_family(family: &mut Vec<ElemSet>) {
    family.sort_by(family_order);
    family.dedup();
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_sets_span_words() {
        for len in [0, 1, 63, 64, 65, 200, 256] {
            let s = ElemSet::full(len);
            assert_eq!(s.len(), len);
            assert_eq!(s.iter().collect::<Vec<_>>(), (0..len).collect::<Vec<_>>());
        }
    }

    #[test]
    fn ordering_is_numeric() {
        let a = ElemSet::singleton(3);
        let b = ElemSet::singleton(70);
        let c: ElemSet = [0, 1, 2].into_iter().collect();
        assert!(a < b);
        assert!(c < a);
        assert_eq!(family_order(&a, &c), Ordering::Less);
    }

    #[test]
    fn set_algebra() {
        let a: ElemSet = [1, 100, 200].into_iter().collect();
        let b: ElemSet = [100, 5].into_iter().collect();
        assert_eq!(a.intersection(&b), ElemSet::singleton(100));
        assert_eq!(a.union(&b).len(), 4);
        assert_eq!(a.difference(&b).iter().collect::<Vec<_>>(), [1, 200]);
        assert!(ElemSet::singleton(100).is_subset(&a));
        assert!(!b.is_subset(&a));
        assert_eq!(a.subsets().count(), 8);
    }
}
