use std::fmt;

use serde::{Serialize, Serializer};

use super::{Partition, Subset};
use crate::{Error, Result};

/// A permutation of `[n]` in one-line notation, values `1..=n`.
///
/// Ordering is lexicographic on the word.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty word".into()));
        }
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!("{word:?} is not a bijection of [{n}]")));
            }
            seen[v] = true;
        }
        Ok(Permutation { word })
    }

    pub(crate) fn from_word_unchecked(word: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(word.clone()).is_ok());
        Permutation { word }
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1);
        Permutation {
            word: (1..=n).collect(),
        }
    }

    /// The transposition `(a b)` in `S_n`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        if a == b || a == 0 || b == 0 || a > n || b > n {
            return Err(Error::InvalidPermutation(format!("({a} {b}) is not a transposition of [{n}]")));
        }
        let mut word: Vec<usize> = (1..=n).collect();
        word.swap(a - 1, b - 1);
        Ok(Permutation { word })
    }

    /// The long cycle `1 → 2 → … → n → 1`.
    pub fn long_cycle(n: usize) -> Self {
        assert!(n >= 1);
        Permutation {
            word: (2..=n).chain(std::iter::once(1)).collect(),
        }
    }

    /// Build from disjoint cycles; points not mentioned are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut word: Vec<usize> = (1..=n).collect();
        let mut used = vec![false; n + 1];
        for cycle in cycles {
            for (j, &a) in cycle.iter().enumerate() {
                if a == 0 || a > n || used[a] {
                    return Err(Error::InvalidPermutation(format!("bad cycle list {cycles:?}")));
                }
                used[a] = true;
                word[a - 1] = cycle[(j + 1) % cycle.len()];
            }
        }
        Ok(Permutation { word })
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// `π(i)` for `i ∈ [n]`.
    pub fn apply(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut word = vec![0; self.n()];
        for (i, &v) in self.word.iter().enumerate() {
            word[v - 1] = i + 1;
        }
        Permutation { word }
    }

    /// The composition `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Self {
        assert_eq!(self.n(), other.n(), "composing permutations of different sizes");
        Permutation {
            word: other.word.iter().map(|&v| self.word[v - 1]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// `Des(π) = {i ∈ [n-1] : π_i > π_{i+1}}`.
    pub fn des_set(&self) -> Subset {
        let n = self.n();
        let mut s = Subset::empty(n - 1);
        for i in 1..n {
            if self.word[i - 1] > self.word[i] {
                s.insert(i);
            }
        }
        s
    }

    /// Cellini's cyclic descent set: `Des(π)` plus `n` when `π_n > π_1`.
    pub fn cdes_cellini(&self) -> Result<Subset> {
        let n = self.n();
        if n < 2 {
            return Err(Error::InvalidArgument(
                "cyclic descents need n >= 2 (no non-Escher set exists for n = 1)".into(),
            ));
        }
        let mut s = self.des_set().with_universe(n)?;
        if self.word[n - 1] > self.word[0] {
            s.insert(n);
        }
        Ok(s)
    }

    /// Cyclic rotation `[π_n, π_1, …, π_{n-1}]`.
    pub fn rotate(&self) -> Self {
        let mut word = self.word.clone();
        word.rotate_right(1);
        Permutation { word }
    }

    pub fn inv_count(&self) -> usize {
        let w = &self.word;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&v| v < w[i]).count())
            .sum()
    }

    pub fn maj(&self) -> usize {
        self.des_set().sum()
    }

    pub fn imaj(&self) -> usize {
        self.inverse().maj()
    }

    /// Disjoint cycles, each starting at its least element, ordered by
    /// that element. Fixed points appear as 1-cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::from_unsorted(self.cycles().iter().map(Vec::len).collect())
            .expect("cycle lengths are positive")
    }

    /// The order of `π` in `S_n`: the lcm of its cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycle_type().lcm()
    }

    pub fn is_full_cycle(&self) -> bool {
        self.cycles().len() == 1
    }

    /// `π^k`.
    pub fn pow(&self, k: u64) -> Self {
        let mut acc = Permutation::identity(self.n());
        for _ in 0..k {
            acc = acc.compose(self);
        }
        acc
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (j, v) in self.word.iter().enumerate() {
            if j > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.word.serialize(s)
    }
}
