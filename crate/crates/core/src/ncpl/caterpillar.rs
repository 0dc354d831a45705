use std::fmt;

use serde::{Serialize, Serializer};

use std::collections::BTreeMap;

use super::{edge_sequence_descents, normalize, Edge, Factorization};
use crate::perm::{Partition, Permutation, Subset};
use crate::qsym::{qsym_of_set, QSymVector, SchurExpansion};
use crate::{Error, Result};

/// Largest `n` for which [`enumerate_caterpillars`] runs.
pub const MAX_CATERPILLAR_N: usize = 12;

/// A linearly ordered factorization of `(1 2 … n)`, identified with its
/// convex caterpillar.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Caterpillar {
    w: Factorization,
}

impl Caterpillar {
    /// Accepts `w` when its Goulden–Yong order is linear.
    pub fn new(w: Factorization) -> Result<Self> {
        if w.n() < 3 {
            return Err(Error::InvalidArgument("caterpillars need n >= 3".into()));
        }
        if !w.tree().is_gy_linear() {
            return Err(Error::InvalidArgument(format!("{w} is not linearly ordered")));
        }
        Ok(Caterpillar { w })
    }

    /// Build from the first vertex `i` (first edge `(i, i+1)`) and, for each
    /// later edge, whether it is a branch. With `[j, k]` the cyclic interval
    /// covered so far, a branch is `(k, j-1)` and a link is `(k, k+1)`.
    fn from_structure(n: usize, first: usize, branch: impl Fn(usize) -> bool) -> Self {
        let m = |x: usize| (x + n - 1) % n + 1;
        let (mut j, mut k) = (first, m(first + 1));
        let mut edges = vec![normalize(j, k)];
        for e in 2..n {
            if branch(e) {
                j = m(j + n - 1);
                edges.push(normalize(k, j));
            } else {
                edges.push(normalize(k, m(k + 1)));
                k = m(k + 1);
            }
        }
        Caterpillar {
            w: Factorization::from_edges_unchecked(n, edges),
        }
    }

    pub fn n(&self) -> usize {
        self.w.n()
    }

    pub fn edges(&self) -> &[Edge] {
        self.w.edges()
    }

    pub fn factorization(&self) -> &Factorization {
        &self.w
    }

    /// `Des(c) ⊆ [n-2]`: `i` with `t_i = (b, c)`, `t_{i+1} = (b, a)`, `c > a`.
    pub fn descent_set(&self) -> Subset {
        edge_sequence_descents(self.n(), self.edges())
    }

    /// `I(c)`: index of the first edge at vertex 1.
    pub fn main_index(&self) -> usize {
        self.edges()
            .iter()
            .position(|e| e.0 == 1)
            .expect("a spanning tree touches vertex 1")
            + 1
    }

    pub fn phi(&self) -> Result<Permutation> {
        self.w.phi()
    }
}

impl fmt::Display for Caterpillar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.w)
    }
}

impl Serialize for Caterpillar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.w.serialize(s)
    }
}

/// `Ct_n` for `3 ≤ n ≤ 12`, ordered by first vertex and then by the set of
/// branch positions read as a binary number.
pub fn enumerate_caterpillars(n: usize) -> Result<Vec<Caterpillar>> {
    if n > MAX_CATERPILLAR_N {
        return Err(Error::BoundExceeded {
            what: "n",
            value: n,
            max: MAX_CATERPILLAR_N,
        });
    }
    if n < 3 {
        return Err(Error::InvalidArgument("caterpillars need n >= 3".into()));
    }
    let mut out = Vec::with_capacity(n << (n - 3));
    for first in 1..=n {
        for mask in 0u32..1 << (n - 3) {
            // Edges 2..=n-2 are free; the last edge is the same either way.
            out.push(Caterpillar::from_structure(n, first, |e| e == n - 1 || mask >> (e - 2) & 1 == 1));
        }
    }
    Ok(out)
}

/// The unique caterpillar with descent set `j ⊆ [n-2]` and main index `i`.
/// Requires `i = 1` or `i - 1 ∈ j`.
pub fn caterpillar_from(j: &Subset, i: usize) -> Result<Caterpillar> {
    let n = j.universe() + 2;
    if !(3..=MAX_CATERPILLAR_N).contains(&n) {
        return Err(Error::InvalidArgument(format!("n = {n} outside 3..={MAX_CATERPILLAR_N}")));
    }
    if i == 0 || i > n - 1 || (i != 1 && !j.contains(i - 1)) {
        return Err(Error::InvalidArgument(format!(
            "main index {i} is impossible for descent set {j}"
        )));
    }
    // Branches before the main edge follow the descent one step back; the
    // main edge is a branch unless it starts a descent; after it, branches
    // are exactly the descents.
    let branch = |e: usize| {
        if e == n - 1 {
            true
        } else if e < i {
            j.contains(e - 1)
        } else if e == i {
            !j.contains(i)
        } else {
            j.contains(e)
        }
    };
    (1..=n)
        .map(|first| Caterpillar::from_structure(n, first, branch))
        .find(|c| c.main_index() == i && c.descent_set() == *j)
        .ok_or_else(|| Error::InvariantViolation(format!("no caterpillar with Des = {j} and I = {i}")))
}

/// `Q(Ct_n)`, of degree `n - 1` since caterpillar descents live in `[n-2]`.
pub fn caterpillar_qsym(n: usize) -> Result<QSymVector> {
    qsym_of_set(n - 1, enumerate_caterpillars(n)?.iter().map(Caterpillar::descent_set))
}

/// `Σ_{k=0}^{n-2} (k+1) s_{(n-1-k, 1^k)}`, the Schur expansion of `Q(Ct_n)`.
pub fn caterpillar_schur_prediction(n: usize) -> Result<SchurExpansion> {
    if n < 3 {
        return Err(Error::InvalidArgument("caterpillars need n >= 3".into()));
    }
    let coeffs: BTreeMap<Partition, i64> =
        (0..n - 1).map(|k| (Partition::hook(n - 1, k).expect("k < n - 1"), k as i64 + 1)).collect();
    SchurExpansion::new(n - 1, coeffs)
}

#[cfg(test)]
mod tests {
    use std::collections::{BTreeMap, BTreeSet};

    use super::*;
    use crate::ncpl::{enumerate_factorizations, enumerate_noncrossing_trees, is_valid_factorization};

    fn cat(n: usize, e: &[Edge]) -> Caterpillar {
        Caterpillar::new(Factorization::new(n, e.to_vec()).unwrap()).unwrap()
    }

    const FIG1: [Edge; 7] = [(7, 8), (6, 8), (5, 8), (1, 8), (1, 2), (2, 4), (2, 3)];

    #[test]
    fn figure_one() {
        let u = cat(8, &FIG1);
        assert_eq!(u.descent_set().to_vec(), vec![1, 2, 3, 4, 6]);
        assert_eq!(u.main_index(), 4);
        assert_eq!(u.phi().unwrap().word(), &[7, 6, 5, 4, 1, 3, 2]);
        assert_eq!(u.phi().unwrap().des_set(), u.descent_set());
        assert!(enumerate_caterpillars(8).unwrap().contains(&u));
        let j = Subset::new(6, [1, 2, 3, 4, 6]).unwrap();
        assert_eq!(caterpillar_from(&j, 4).unwrap(), u);
    }

    #[test]
    fn main_index_example() {
        let c = cat(6, &[(4, 5), (5, 6), (3, 6), (1, 6), (1, 2)]);
        assert_eq!(c.main_index(), 4);
        assert_eq!(cat(4, &[(1, 2), (2, 3), (3, 4)]).main_index(), 1);
    }

    #[test]
    fn counts_and_validity() {
        for n in 3..=10 {
            let all = enumerate_caterpillars(n).unwrap();
            assert_eq!(all.len(), n << (n - 3));
            let distinct: BTreeSet<_> = all.iter().collect();
            assert_eq!(distinct.len(), all.len());
            for c in &all {
                let r = is_valid_factorization(n, c.edges());
                assert!(r.is_valid() && r.product_is_cycle, "{c}");
                assert!(c.factorization().is_linearly_ordered());
                let (first, last) = (c.edges()[0], c.edges()[n - 2]);
                for (a, b) in [first, last] {
                    assert!(b - a == 1 || (a, b) == (1, n), "{c}");
                }
            }
        }
        assert!(enumerate_caterpillars(13).is_err());
        assert!(enumerate_caterpillars(2).is_err());
    }

    #[test]
    fn linearly_ordered_factorizations_are_the_caterpillars() {
        for n in 3..=6 {
            let cats: BTreeSet<Factorization> =
                enumerate_caterpillars(n).unwrap().into_iter().map(|c| c.w).collect();
            let linear: BTreeSet<Factorization> = enumerate_factorizations(n)
                .unwrap()
                .into_iter()
                .filter(|w| w.tree().is_gy_linear())
                .collect();
            assert_eq!(cats, linear);
            for w in enumerate_factorizations(n).unwrap() {
                assert_eq!(w.tree().is_gy_linear(), w.is_linearly_ordered());
            }
            for t in enumerate_noncrossing_trees(n).unwrap() {
                if let Some(w) = t.linear_factorization() {
                    assert!(cats.contains(&w));
                    assert_eq!(t.gy_order().count_linear_extensions(), 1);
                }
            }
        }
    }

    #[test]
    fn descents_match_phi_and_main_index() {
        for n in 3..=8 {
            for c in enumerate_caterpillars(n).unwrap() {
                let d = c.descent_set();
                let phi = c.phi().unwrap();
                assert_eq!(phi.des_set(), d, "{c}");
                let i = c.main_index();
                assert!(i == 1 || d.contains(i - 1), "{c}");
            }
        }
    }

    #[test]
    fn reconstruction_is_inverse() {
        for n in 3..=9 {
            let mut by_set: BTreeMap<Subset, usize> = BTreeMap::new();
            for c in enumerate_caterpillars(n).unwrap() {
                let d = c.descent_set();
                *by_set.entry(d).or_default() += 1;
                assert_eq!(caterpillar_from(&d, c.main_index()).unwrap(), c);
            }
            for j in Subset::all(n - 2) {
                assert_eq!(by_set.get(&j).copied().unwrap_or(0), j.len() + 1, "n = {n}, J = {j}");
            }
        }
        let j = Subset::new(3, [2]).unwrap();
        assert!(caterpillar_from(&j, 2).is_err());
        assert!(caterpillar_from(&j, 3).is_ok());
    }

    #[test]
    fn schur_expansion_is_weighted_hooks() {
        for n in 3..=7 {
            let got = crate::qsym::schur_expand(&caterpillar_qsym(n).unwrap()).unwrap();
            assert_eq!(got, caterpillar_schur_prediction(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn extremes() {
        let path = cat(5, &[(1, 2), (2, 3), (3, 4), (4, 5)]);
        assert!(path.descent_set().is_empty());
        assert_eq!(caterpillar_from(&Subset::empty(3), 1).unwrap(), path);
        // A star at 1 must list its edges with the far neighbours first.
        let star = cat(5, &[(1, 5), (1, 4), (1, 3), (1, 2)]);
        assert!(star.descent_set().is_full());
        assert!(Caterpillar::new(Factorization::new(6, vec![(1, 4), (4, 6), (4, 5), (1, 2), (2, 3)]).unwrap()).is_err());
    }
}
