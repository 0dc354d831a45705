//! Permutations of `[n]`, integer partitions, subsets of `[m]`, and the
//! statistics built on them.

mod partition;
mod permutation;
mod subset;

pub use partition::Partition;
pub use permutation::Permutation;
pub use subset::Subset;

use crate::{Error, Result};

/// Default largest `n` for which `S_n` may be listed.
pub const DEFAULT_MAX_N: usize = 9;

/// `S_n` in lexicographic order of words.
#[derive(Debug, Clone)]
pub struct SymmetricGroup {
    next: Option<Vec<usize>>,
}

impl SymmetricGroup {
    pub fn new(n: usize) -> Result<Self> {
        Self::with_bound(n, DEFAULT_MAX_N)
    }

    pub fn with_bound(n: usize, max: usize) -> Result<Self> {
        if n > max {
            return Err(Error::BoundExceeded { what: "n", value: n, max });
        }
        if n == 0 {
            return Err(Error::InvalidArgument("S_0 is not enumerated".into()));
        }
        Ok(SymmetricGroup {
            next: Some((1..=n).collect()),
        })
    }
}

impl Iterator for SymmetricGroup {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let cur = self.next.take()?;
        let mut w = cur.clone();
        if next_permutation(&mut w) {
            self.next = Some(w);
        }
        Some(Permutation::from_word_unchecked(cur))
    }
}

/// Advance `w` to its lexicographic successor; false if `w` was the last.
fn next_permutation(w: &mut [usize]) -> bool {
    let n = w.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && w[i - 1] >= w[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while w[j] <= w[i - 1] {
        j -= 1;
    }
    w.swap(i - 1, j);
    w[i..].reverse();
    true
}

/// All of `S_n` as a vector.
pub fn enumerate_sn(n: usize) -> Result<Vec<Permutation>> {
    Ok(SymmetricGroup::new(n)?.collect())
}

/// The permutations of cycle type `λ`, in lexicographic order.
pub fn conjugacy_class(lambda: &Partition) -> Result<Vec<Permutation>> {
    Ok(SymmetricGroup::new(lambda.size())?
        .filter(|p| &p.cycle_type() == lambda)
        .collect())
}
