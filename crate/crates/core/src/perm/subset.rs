use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::{Error, Result};

/// A subset of `[m] = {1, …, m}` that remembers `m`.
///
/// Descent sets live in `[n-1]`, cyclic descent sets in `[n]`; carrying the
/// universe makes [`Subset::shift`] well defined on its own.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Subset {
    universe: usize,
    bits: u64,
}

impl Subset {
    pub const MAX_UNIVERSE: usize = 63;

    pub fn empty(universe: usize) -> Self {
        assert!(universe <= Self::MAX_UNIVERSE, "universe too large");
        Subset { universe, bits: 0 }
    }

    pub fn full(universe: usize) -> Self {
        assert!(universe <= Self::MAX_UNIVERSE, "universe too large");
        Subset {
            universe,
            bits: (1u64 << universe) - 1,
        }
    }

    pub fn new<I: IntoIterator<Item = usize>>(universe: usize, members: I) -> Result<Self> {
        if universe > Self::MAX_UNIVERSE {
            return Err(Error::InvalidSubset(format!(
                "universe {universe} larger than {}",
                Self::MAX_UNIVERSE
            )));
        }
        let mut bits = 0u64;
        for i in members {
            if i == 0 || i > universe {
                return Err(Error::InvalidSubset(format!("{i} is not in [{universe}]")));
            }
            bits |= 1 << (i - 1);
        }
        Ok(Subset { universe, bits })
    }

    /// Build from a bit mask whose bit `i-1` stands for element `i`.
    pub fn from_bits(universe: usize, bits: u64) -> Result<Self> {
        if universe > Self::MAX_UNIVERSE || (universe < 64 && bits >> universe != 0) {
            return Err(Error::InvalidSubset(format!(
                "mask {bits:#b} does not fit in [{universe}]"
            )));
        }
        Ok(Subset { universe, bits })
    }

    /// The interval `{a, …, b}`; empty when `a > b`.
    pub fn range(universe: usize, a: usize, b: usize) -> Result<Self> {
        Subset::new(universe, a..=b)
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.universe
    }

    pub fn contains(&self, i: usize) -> bool {
        i >= 1 && i <= self.universe && self.bits >> (i - 1) & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i >= 1 && i <= self.universe, "{i} is not in [{}]", self.universe);
        self.bits |= 1 << (i - 1);
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.universe).filter(move |&i| self.contains(i))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn sum(&self) -> usize {
        self.iter().sum()
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn union(&self, other: &Subset) -> Subset {
        Subset {
            universe: self.universe.max(other.universe),
            bits: self.bits | other.bits,
        }
    }

    pub fn difference(&self, other: &Subset) -> Subset {
        Subset {
            universe: self.universe,
            bits: self.bits & !other.bits,
        }
    }

    /// The same members viewed inside a different universe.
    pub fn with_universe(&self, universe: usize) -> Result<Subset> {
        Subset::new(universe, self.iter())
    }

    /// Cyclic shift `i ↦ i+1`, with `m ↦ 1`.
    pub fn shift(&self) -> Subset {
        if self.universe == 0 {
            return *self;
        }
        let top = self.contains(self.universe);
        let mut bits = (self.bits << 1) & ((1u64 << self.universe) - 1);
        if top {
            bits |= 1;
        }
        Subset {
            universe: self.universe,
            bits,
        }
    }

    /// The top `k` elements `{m-k+1, …, m}`. With `m = n-1` this is the
    /// descent set `{n-k, …, n-1}` of the row-first hook tableau.
    pub fn suffix(universe: usize, k: usize) -> Subset {
        assert!(k <= universe);
        Subset::new(universe, universe + 1 - k..=universe).expect("suffix in range")
    }

    /// All subsets of `[universe]`, in increasing bit-mask order.
    pub fn all(universe: usize) -> impl Iterator<Item = Subset> {
        assert!(universe < 32, "refusing to list 2^{universe} subsets");
        (0u64..1 << universe).map(move |bits| Subset { universe, bits })
    }

    /// All subsets of `self`.
    pub fn subsets(&self) -> Vec<Subset> {
        let members = self.to_vec();
        (0u64..1 << members.len())
            .map(|mask| {
                let mut s = Subset::empty(self.universe);
                for (j, &m) in members.iter().enumerate() {
                    if mask >> j & 1 == 1 {
                        s.insert(m);
                    }
                }
                s
            })
            .collect()
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.universe
            .cmp(&other.universe)
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}⊆[{}]", self.universe)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (j, i) in self.iter().enumerate() {
            if j > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// Subsets serialize as sorted member arrays.
impl Serialize for Subset {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(m: usize, xs: &[usize]) -> Subset {
        Subset::new(m, xs.iter().copied()).unwrap()
    }

    #[test]
    fn shift_wraps_around() {
        assert_eq!(set(4, &[4]).shift(), set(4, &[1]));
        assert_eq!(set(4, &[]).shift(), set(4, &[]));
        assert_eq!(set(4, &[1, 3]).shift(), set(4, &[2, 4]));
        assert_eq!(set(4, &[1, 4]).shift(), set(4, &[1, 2]));
    }

    #[test]
    fn rejects_out_of_range_members() {
        assert!(Subset::new(3, [4]).is_err());
        assert!(Subset::new(3, [0]).is_err());
    }

    #[test]
    fn ordering_is_lexicographic_on_members() {
        let mut v = vec![set(3, &[2]), set(3, &[1, 2]), set(3, &[]), set(3, &[1])];
        v.sort();
        assert_eq!(v, vec![set(3, &[]), set(3, &[1]), set(3, &[1, 2]), set(3, &[2])]);
    }

    #[test]
    fn suffix_and_subsets() {
        assert_eq!(Subset::suffix(5, 2), set(5, &[4, 5]));
        assert_eq!(Subset::suffix(5, 0), set(5, &[]));
        assert_eq!(set(5, &[1, 3]).subsets().len(), 4);
        assert_eq!(Subset::all(3).count(), 8);
    }
}
