//! Minimal factorizations of the long cycle `(1 2 … n)` into transpositions,
//! their Goulden–Yong trees, and convex caterpillars.
//!
//! A factorization `(t_1, …, t_{n-1})` multiplies as `t_1 ∘ t_2 ∘ … ∘ t_{n-1}`
//! with the rightmost factor applied first.

mod caterpillar;
mod tree;

pub use caterpillar::{
    caterpillar_from, caterpillar_qsym, caterpillar_schur_prediction, enumerate_caterpillars, Caterpillar,
    MAX_CATERPILLAR_N,
};
pub use tree::{enumerate_noncrossing_trees, GeometricTree, GyOrder};

use std::fmt;

use serde::Serialize;

use crate::perm::{Permutation, Subset};
use crate::{Error, Result};

/// Largest `n` for which [`enumerate_factorizations`] runs.
pub const MAX_FACTORIZATION_N: usize = 7;

/// A transposition as an unordered pair, stored with the smaller point first.
pub type Edge = (usize, usize);

pub(crate) fn normalize(a: usize, b: usize) -> Edge {
    (a.min(b), a.max(b))
}

/// The endpoint of `e` other than `v`, if `v` is an endpoint.
pub(crate) fn other_end(e: Edge, v: usize) -> Option<usize> {
    if e.0 == v {
        Some(e.1)
    } else if e.1 == v {
        Some(e.0)
    } else {
        None
    }
}

/// The common endpoint of two distinct edges.
pub(crate) fn common_vertex(e: Edge, f: Edge) -> Option<usize> {
    [e.0, e.1].into_iter().find(|&v| f.0 == v || f.1 == v)
}

/// Position of `x` in the cyclic order `a < a+1 < … < a-1` on `[n]`.
pub(crate) fn cyclic_rank(n: usize, a: usize, x: usize) -> usize {
    (x + n - a) % n
}

/// Edges `{a,b}` and `{c,d}` with four distinct endpoints cross when exactly
/// one of `c, d` lies strictly between `a` and `b`.
pub fn edges_cross(e: Edge, f: Edge) -> bool {
    if common_vertex(e, f).is_some() {
        return false;
    }
    let (a, b) = normalize(e.0, e.1);
    let inside = |x: usize| a < x && x < b;
    inside(f.0) != inside(f.1)
}

/// Edges form a spanning tree of `[n]`.
pub fn is_spanning_tree(n: usize, edges: &[Edge]) -> bool {
    if edges.len() + 1 != n {
        return false;
    }
    let mut parent: Vec<usize> = (0..=n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            return false;
        }
        parent[ra] = rb;
    }
    true
}

pub fn is_noncrossing(edges: &[Edge]) -> bool {
    edges
        .iter()
        .enumerate()
        .all(|(i, &e)| edges[i + 1..].iter().all(|&f| !edges_cross(e, f)))
}

/// `t_1 ∘ t_2 ∘ … ∘ t_k` in `S_n`.
pub fn product(n: usize, edges: &[Edge]) -> Result<Permutation> {
    let mut word: Vec<usize> = (1..=n).collect();
    // Left-multiplying by each transposition in turn, last factor first,
    // swaps the values a and b in the word.
    for &(a, b) in edges.iter().rev() {
        if a == b || a == 0 || b == 0 || a > n || b > n {
            return Err(Error::InvalidArgument(format!("({a} {b}) is not a transposition of [{n}]")));
        }
        for v in word.iter_mut() {
            if *v == a {
                *v = b;
            } else if *v == b {
                *v = a;
            }
        }
    }
    Permutation::new(word)
}

/// Outcome of checking a transposition sequence against both
/// characterizations of minimal factorizations of the long cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidityReport {
    pub is_tree: bool,
    pub non_crossing: bool,
    pub cyclically_decreasing: bool,
    pub product_is_cycle: bool,
    pub violations: Vec<String>,
}

impl ValidityReport {
    /// The tree-side verdict: a non-crossing tree whose edges around each
    /// vertex appear in cyclically decreasing order.
    pub fn is_valid(&self) -> bool {
        self.is_tree && self.non_crossing && self.cyclically_decreasing
    }

    /// Both characterizations agree.
    pub fn is_consistent(&self) -> bool {
        self.is_valid() == self.product_is_cycle
    }
}

/// Check `edges` as a factorization of `(1 2 … n)`, by the tree conditions
/// and by multiplying out.
pub fn is_valid_factorization(n: usize, edges: &[Edge]) -> ValidityReport {
    let mut violations = Vec::new();
    let bad = edges.iter().find(|&&(a, b)| a == b || a == 0 || b == 0 || a > n || b > n);
    if let Some(&(a, b)) = bad {
        violations.push(format!("({a} {b}) is not a transposition of [{n}]"));
        return ValidityReport {
            is_tree: false,
            non_crossing: false,
            cyclically_decreasing: false,
            product_is_cycle: false,
            violations,
        };
    }
    let edges: Vec<Edge> = edges.iter().map(|&(a, b)| normalize(a, b)).collect();
    let is_tree = is_spanning_tree(n, &edges);
    if !is_tree {
        violations.push(format!("{} edges do not form a spanning tree of [{n}]", edges.len()));
    }
    let mut non_crossing = true;
    for (i, &e) in edges.iter().enumerate() {
        for &f in &edges[i + 1..] {
            if edges_cross(e, f) {
                non_crossing = false;
                violations.push(format!("edges {e:?} and {f:?} cross"));
            }
        }
    }
    let mut cyclically_decreasing = true;
    for (i, &e) in edges.iter().enumerate() {
        for &f in &edges[i + 1..] {
            if e == f {
                continue;
            }
            if let Some(a) = common_vertex(e, f) {
                let c = other_end(e, a).expect("shared");
                let b = other_end(f, a).expect("shared");
                if cyclic_rank(n, a, c) <= cyclic_rank(n, a, b) {
                    cyclically_decreasing = false;
                    violations.push(format!("at vertex {a}, {e:?} precedes {f:?} out of order"));
                }
            }
        }
    }
    let product_is_cycle = edges.len() + 1 == n && product(n, &edges).is_ok_and(|p| p == Permutation::long_cycle(n));
    if !product_is_cycle {
        violations.push(format!("product is not the cycle (1 … {n})"));
    }
    ValidityReport {
        is_tree,
        non_crossing,
        cyclically_decreasing,
        product_is_cycle,
        violations,
    }
}

/// A minimal factorization of `(1 2 … n)`: `n-1` transpositions whose
/// product is the long cycle.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct Factorization {
    n: usize,
    edges: Vec<Edge>,
}

impl Factorization {
    pub fn new(n: usize, edges: Vec<Edge>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidArgument("factorizations need n >= 2".into()));
        }
        let report = is_valid_factorization(n, &edges);
        if !report.product_is_cycle {
            return Err(Error::InvalidArgument(report.violations.join("; ")));
        }
        if !report.is_consistent() {
            return Err(Error::InvariantViolation(format!(
                "{edges:?} multiplies to the long cycle but fails the tree test: {}",
                report.violations.join("; ")
            )));
        }
        Ok(Factorization {
            n,
            edges: edges.into_iter().map(|(a, b)| normalize(a, b)).collect(),
        })
    }

    pub(crate) fn from_edges_unchecked(n: usize, edges: Vec<Edge>) -> Self {
        Factorization { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// The geometric tree `G(w)` on the `n`-gon.
    pub fn tree(&self) -> GeometricTree {
        GeometricTree::from_valid_edges(self.n, self.edges.clone())
    }

    /// Consecutive factors share a point.
    pub fn is_linearly_ordered(&self) -> bool {
        self.edges.windows(2).all(|w| common_vertex(w[0], w[1]).is_some())
    }

    /// The labeling `φ(w) ∈ S_{n-1}`.
    ///
    /// With `σ_n = e` and `σ_j = t_j ∘ σ_{j+1}`, position `j` of `φ(w)` is the
    /// unique `i ≤ n-1` with `σ_j(i) > σ_{j+1}(i)`.
    pub fn phi(&self) -> Result<Permutation> {
        let n = self.n;
        let mut suffix = Permutation::identity(n);
        let mut word = vec![0; n - 1];
        for j in (1..n).rev() {
            let (a, b) = self.edges[j - 1];
            let t = Permutation::transposition(n, a, b)?;
            let next = t.compose(&suffix);
            let a_j: Vec<usize> = (1..n).filter(|&i| next.apply(i) > suffix.apply(i)).collect();
            match a_j.as_slice() {
                [i] => word[j - 1] = *i,
                _ => {
                    return Err(Error::InvariantViolation(format!(
                        "A_{j} = {a_j:?} is not a singleton for {:?}",
                        self.edges
                    )))
                }
            }
            suffix = next;
        }
        Permutation::new(word).map_err(|e| Error::InvariantViolation(format!("φ is not a permutation: {e}")))
    }

    /// Graphviz rendering, vertices on a circle, edges labeled by position.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph factorization {\n  layout=circo;\n  node [shape=circle];\n");
        for v in 1..=self.n {
            s.push_str(&format!("  {v};\n"));
        }
        for (i, (a, b)) in self.edges.iter().enumerate() {
            s.push_str(&format!("  {a} -- {b} [label=\"{}\"];\n", i + 1));
        }
        s.push_str("}\n");
        s
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, b) in &self.edges {
            write!(f, "({a} {b})")?;
        }
        Ok(())
    }
}

/// All minimal factorizations of `(1 2 … n)`, `2 ≤ n ≤ 7`, in
/// lexicographic order of the transposition sequence.
///
/// Depth-first with pruning: after `k` factors with product `P`, the rest
/// must multiply to `P^{-1} ∘ c`, which needs exactly `n - cycles` further
/// transpositions.
pub fn enumerate_factorizations(n: usize) -> Result<Vec<Factorization>> {
    if n > MAX_FACTORIZATION_N {
        return Err(Error::BoundExceeded {
            what: "n",
            value: n,
            max: MAX_FACTORIZATION_N,
        });
    }
    if n < 2 {
        return Err(Error::InvalidArgument("factorizations need n >= 2".into()));
    }
    let target = Permutation::long_cycle(n);
    let pairs: Vec<Edge> = (1..=n).flat_map(|a| (a + 1..=n).map(move |b| (a, b))).collect();
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fn dfs(
        n: usize,
        prefix: &Permutation,
        target: &Permutation,
        pairs: &[Edge],
        stack: &mut Vec<Edge>,
        out: &mut Vec<Factorization>,
    ) {
        if stack.len() == n - 1 {
            if prefix == target {
                out.push(Factorization::from_edges_unchecked(n, stack.clone()));
            }
            return;
        }
        for &(a, b) in pairs {
            let t = Permutation::transposition(n, a, b).expect("pair in range");
            let next = prefix.compose(&t);
            let rest = next.inverse().compose(target);
            if n - rest.cycles().len() == n - 1 - (stack.len() + 1) {
                stack.push((a, b));
                dfs(n, &next, target, pairs, stack, out);
                stack.pop();
            }
        }
    }
    dfs(n, &Permutation::identity(n), &target, &pairs, &mut stack, &mut out);
    Ok(out)
}

/// Descent set of a linearly ordered edge sequence: `i` such that
/// `t_i = (b, c)`, `t_{i+1} = (b, a)` and `c > a`.
pub(crate) fn edge_sequence_descents(n: usize, edges: &[Edge]) -> Subset {
    let mut s = Subset::empty(n - 2);
    for (i, w) in edges.windows(2).enumerate() {
        let b = common_vertex(w[0], w[1]).expect("consecutive edges share a vertex");
        let c = other_end(w[0], b).expect("shared");
        let a = other_end(w[1], b).expect("shared");
        if c > a {
            s.insert(i + 1);
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIG2: [Edge; 5] = [(1, 4), (4, 6), (4, 5), (1, 2), (2, 3)];

    #[test]
    fn figure_two_is_valid() {
        let r = is_valid_factorization(6, &FIG2);
        assert!(r.is_valid() && r.product_is_cycle, "{r:?}");
        assert!(r.violations.is_empty());
        let f = Factorization::new(6, FIG2.to_vec()).unwrap();
        assert!(!f.is_linearly_ordered());
    }

    #[test]
    fn repeated_edges_fail() {
        let r = is_valid_factorization(3, &[(1, 2), (1, 2)]);
        assert!(!r.is_tree && !r.product_is_cycle && r.is_consistent());
        assert!(Factorization::new(3, vec![(1, 2), (1, 2)]).is_err());
        assert!(!is_valid_factorization(3, &[(1, 4), (1, 2)]).product_is_cycle);
    }

    #[test]
    fn small_examples() {
        assert!(is_valid_factorization(4, &[(1, 4), (1, 3), (1, 2)]).is_valid());
        assert!(is_valid_factorization(4, &[(1, 3), (3, 4), (1, 2)]).is_valid());
        let wrong_order = is_valid_factorization(4, &[(1, 2), (1, 3), (1, 4)]);
        assert!(!wrong_order.cyclically_decreasing && !wrong_order.product_is_cycle);
        let crossing = is_valid_factorization(4, &[(1, 3), (2, 4), (1, 2)]);
        assert!(!crossing.non_crossing && !crossing.product_is_cycle);
    }

    #[test]
    fn hurwitz_counts() {
        for n in 2..=6usize {
            let all = enumerate_factorizations(n).unwrap();
            assert_eq!(all.len(), n.pow(n as u32 - 2), "n = {n}");
            assert!(all.windows(2).all(|w| w[0] < w[1]));
            for w in &all {
                let r = is_valid_factorization(n, w.edges());
                assert!(r.is_valid() && r.product_is_cycle);
            }
        }
        assert!(enumerate_factorizations(8).is_err());
    }

    #[test]
    fn tree_and_product_tests_agree_on_all_sequences() {
        // Every sequence of n-1 transpositions, n = 4.
        let n = 4;
        let pairs: Vec<Edge> = (1..=n).flat_map(|a| (a + 1..=n).map(move |b| (a, b))).collect();
        let mut agree = 0;
        for x in 0..pairs.len().pow(3) {
            let seq = vec![pairs[x % 6], pairs[x / 6 % 6], pairs[x / 36]];
            let r = is_valid_factorization(n, &seq);
            assert!(r.is_consistent(), "{seq:?}: {r:?}");
            agree += r.product_is_cycle as usize;
        }
        assert_eq!(agree, 16);
    }

    #[test]
    fn phi_is_a_permutation_on_all_factorizations() {
        for n in 2..=6 {
            for w in enumerate_factorizations(n).unwrap() {
                let p = w.phi().unwrap();
                assert_eq!(p.n(), n - 1);
            }
        }
        let w = Factorization::new(2, vec![(1, 2)]).unwrap();
        assert!(w.phi().unwrap().is_identity());
    }

    #[test]
    fn crossing_test_matches_geometry() {
        // Points (i, i^2) are in convex position in the order 1..n.
        fn orient(p: (i64, i64), q: (i64, i64), r: (i64, i64)) -> i64 {
            (q.0 - p.0) * (r.1 - p.1) - (q.1 - p.1) * (r.0 - p.0)
        }
        let pt = |i: usize| (i as i64, (i * i) as i64);
        for n in 2..=9 {
            for a in 1..=n {
                for b in a + 1..=n {
                    for c in 1..=n {
                        for d in c + 1..=n {
                            let (e, f) = ((a, b), (c, d));
                            let geometric = common_vertex(e, f).is_none()
                                && orient(pt(a), pt(b), pt(c)).signum() * orient(pt(a), pt(b), pt(d)).signum() < 0
                                && orient(pt(c), pt(d), pt(a)).signum() * orient(pt(c), pt(d), pt(b)).signum() < 0;
                            assert_eq!(edges_cross(e, f), geometric, "{e:?} {f:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn dot_and_json() {
        let f = Factorization::new(3, vec![(1, 3), (1, 2)]).unwrap();
        assert!(f.to_dot().contains("1 -- 3 [label=\"1\"]"));
        assert_eq!(
            serde_json::to_string(&f).unwrap(),
            r#"{"n":3,"edges":[[1,3],[1,2]]}"#
        );
    }
}
