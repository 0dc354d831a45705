use std::fmt;

use serde::{Serialize, Serializer};

use crate::arith;
use crate::{Error, Result};

/// An integer partition: weakly decreasing positive parts.
///
/// The empty partition is allowed (it is the partition of 0 and the empty
/// inner shape of a straight diagram).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    /// Sorts the given positive parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The hook `(n-k, 1^k)`.
    pub fn hook(n: usize, k: usize) -> Result<Self> {
        if n == 0 || k >= n {
            return Err(Error::InvalidPartition(format!("no hook ({}, 1^{k}) of {n}", n.wrapping_sub(k))));
        }
        let mut parts = vec![n - k];
        parts.extend(std::iter::repeat_n(1, k));
        Ok(Partition { parts })
    }

    /// The rectangle `(r^s)`.
    pub fn rectangle(r: usize, s: usize) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidPartition("rectangle with zero width".into()));
        }
        Ok(Partition { parts: vec![r; s] })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The size `|λ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// If this is a hook `(n-k, 1^k)`, its leg length `k`.
    pub fn hook_leg(&self) -> Option<usize> {
        match self.parts.split_first() {
            Some((_, rest)) if rest.iter().all(|&p| p == 1) => Some(rest.len()),
            _ => None,
        }
    }

    pub fn has_distinct_parts(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// Least common multiple of the parts (1 for the empty partition).
    pub fn lcm(&self) -> u64 {
        self.parts.iter().fold(1, |acc, &p| arith::lcm(acc, p as u64))
    }

    /// True iff the partition is `(r^s)` with `r` square-free.
    pub fn is_rect_squarefree(&self) -> bool {
        match self.parts.first() {
            Some(&r) => self.parts.iter().all(|&p| p == r) && arith::is_squarefree(r as u64),
            None => false,
        }
    }

    /// Componentwise containment `self ⊆ other` of diagrams.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }

    /// All partitions of `n`, in reverse lexicographic order (`(n)` first).
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (j, p) in self.parts.iter().enumerate() {
            if j > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(Partition::new(vec![2, 3]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(Partition::from_unsorted(vec![1, 3, 2]).unwrap(), p(&[3, 2, 1]));
    }

    #[test]
    fn lcm_and_rectangles() {
        assert_eq!(p(&[6, 4]).lcm(), 12);
        assert!(p(&[2, 2, 2]).is_rect_squarefree());
        assert!(!p(&[4, 4]).is_rect_squarefree());
        assert!(!p(&[3, 1]).is_rect_squarefree());
        assert!(p(&[1, 1, 1]).is_rect_squarefree());
        assert!(p(&[6]).is_rect_squarefree());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(Partition::all(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
    }

    #[test]
    fn hooks() {
        assert_eq!(Partition::hook(5, 2).unwrap(), p(&[3, 1, 1]));
        assert_eq!(p(&[3, 1, 1]).hook_leg(), Some(2));
        assert_eq!(p(&[2, 2]).hook_leg(), None);
        assert!(Partition::hook(3, 3).is_err());
    }
}
