use std::fmt;

use serde::Serialize;

use super::{common_vertex, cyclic_rank, is_noncrossing, is_spanning_tree, normalize, other_end, Edge, Factorization};
use crate::{Error, Result};

/// A non-crossing spanning tree on the vertices `1..n` of a convex `n`-gon.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct GeometricTree {
    n: usize,
    edges: Vec<Edge>,
}

impl GeometricTree {
    pub fn new(n: usize, edges: Vec<Edge>) -> Result<Self> {
        if let Some(&(a, b)) = edges.iter().find(|&&(a, b)| a == b || a == 0 || b == 0 || a > n || b > n) {
            return Err(Error::InvalidArgument(format!("({a} {b}) is not an edge on [{n}]")));
        }
        let edges: Vec<Edge> = edges.into_iter().map(|(a, b)| normalize(a, b)).collect();
        if !is_spanning_tree(n, &edges) {
            return Err(Error::InvalidArgument(format!("{edges:?} is not a spanning tree of [{n}]")));
        }
        if !is_noncrossing(&edges) {
            return Err(Error::InvalidArgument(format!("{edges:?} has crossing edges")));
        }
        Ok(GeometricTree { n, edges })
    }

    pub(crate) fn from_valid_edges(n: usize, edges: Vec<Edge>) -> Self {
        GeometricTree { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.0 == v || e.1 == v).count()
    }

    /// The Goulden–Yong order on the edges.
    #[allow(clippy::needless_range_loop)]
    pub fn gy_order(&self) -> GyOrder {
        let m = self.edges.len();
        let mut le = vec![vec![false; m]; m];
        for (i, row) in le.iter_mut().enumerate() {
            row[i] = true;
        }
        // One step: (x z) before (x y) when z >_x y.
        for i in 0..m {
            for j in 0..m {
                if i == j {
                    continue;
                }
                let (s, t) = (self.edges[i], self.edges[j]);
                if let Some(x) = common_vertex(s, t) {
                    let z = other_end(s, x).expect("shared");
                    let y = other_end(t, x).expect("shared");
                    if cyclic_rank(self.n, x, z) > cyclic_rank(self.n, x, y) {
                        le[i][j] = true;
                    }
                }
            }
        }
        for k in 0..m {
            for i in 0..m {
                if le[i][k] {
                    for j in 0..m {
                        if le[k][j] {
                            le[i][j] = true;
                        }
                    }
                }
            }
        }
        GyOrder {
            edges: self.edges.clone(),
            le,
        }
    }

    pub fn is_gy_linear(&self) -> bool {
        self.gy_order().is_linear()
    }

    /// Vertices of degree at least two.
    pub fn spine_vertices(&self) -> Vec<usize> {
        (1..=self.n).filter(|&v| self.degree(v) >= 2).collect()
    }

    /// Edges joining two spine vertices.
    pub fn spine_edges(&self) -> Vec<Edge> {
        let spine = self.spine_vertices();
        self.edges
            .iter()
            .copied()
            .filter(|e| spine.contains(&e.0) && spine.contains(&e.1))
            .collect()
    }

    /// A caterpillar whose spine is a run of polygon sides `(a a+1) … (b-1 b)`.
    /// Stars, whose spine has no edges, qualify.
    pub fn is_convex_caterpillar_shape(&self) -> bool {
        let spine = self.spine_vertices();
        if spine.len() <= 1 {
            return true;
        }
        let spine_edges = self.spine_edges();
        let is_path = spine.iter().all(|&v| spine_edges.iter().filter(|e| e.0 == v || e.1 == v).count() <= 2);
        let all_sides = spine_edges.iter().all(|&(a, b)| b - a == 1 || (a == 1 && b == self.n));
        is_path && all_sides
    }

    /// The unique factorization with this tree, when the order is linear.
    pub fn linear_factorization(&self) -> Option<Factorization> {
        let order = self.gy_order();
        order.linear_sequence().map(|edges| Factorization::from_edges_unchecked(self.n, edges))
    }
}

impl fmt::Display for GeometricTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (a, b)) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}-{b}")?;
        }
        write!(f, "}}")
    }
}

/// Reflexive-transitive closure of the one-step relation; `le[i][j]` means
/// edge `i` comes no later than edge `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GyOrder {
    edges: Vec<Edge>,
    le: Vec<Vec<bool>>,
}

impl GyOrder {
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// `e ≤ f` in the order. Panics if either is not an edge of the tree.
    pub fn le(&self, e: Edge, f: Edge) -> bool {
        let pos = |x: Edge| {
            let x = normalize(x.0, x.1);
            self.edges.iter().position(|&y| y == x).expect("edge of the tree")
        };
        self.le[pos(e)][pos(f)]
    }

    pub fn comparable(&self, e: Edge, f: Edge) -> bool {
        self.le(e, f) || self.le(f, e)
    }

    pub fn is_linear(&self) -> bool {
        let m = self.edges.len();
        (0..m).all(|i| (0..m).all(|j| self.le[i][j] || self.le[j][i]))
    }

    /// Edges in increasing order, if the order is total.
    pub fn linear_sequence(&self) -> Option<Vec<Edge>> {
        if !self.is_linear() {
            return None;
        }
        let mut idx: Vec<usize> = (0..self.edges.len()).collect();
        idx.sort_by_key(|&j| (0..self.edges.len()).filter(|&i| self.le[i][j]).count());
        Some(idx.into_iter().map(|i| self.edges[i]).collect())
    }

    /// Number of linear extensions, by dynamic programming over down-sets.
    pub fn count_linear_extensions(&self) -> u64 {
        let m = self.edges.len();
        assert!(m < 24, "too many edges to count extensions");
        let preds: Vec<u32> = (0..m)
            .map(|j| (0..m).filter(|&i| i != j && self.le[i][j]).fold(0u32, |acc, i| acc | 1 << i))
            .collect();
        let mut ways = vec![0u64; 1 << m];
        ways[0] = 1;
        for mask in 0..(1u32 << m) {
            let w = ways[mask as usize];
            if w == 0 {
                continue;
            }
            for j in 0..m {
                if mask >> j & 1 == 0 && preds[j] & !mask == 0 {
                    ways[(mask | 1 << j) as usize] += w;
                }
            }
        }
        ways[(1usize << m) - 1]
    }
}

/// Every non-crossing spanning tree on the `n`-gon, `n ≤ 8`.
pub fn enumerate_noncrossing_trees(n: usize) -> Result<Vec<GeometricTree>> {
    const MAX: usize = 8;
    if n > MAX {
        return Err(Error::BoundExceeded { what: "n", value: n, max: MAX });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let pairs: Vec<Edge> = (1..=n).flat_map(|a| (a + 1..=n).map(move |b| (a, b))).collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn rec(n: usize, pairs: &[Edge], start: usize, chosen: &mut Vec<Edge>, out: &mut Vec<GeometricTree>) {
        if chosen.len() + 1 == n {
            if is_spanning_tree(n, chosen) {
                out.push(GeometricTree::from_valid_edges(n, chosen.clone()));
            }
            return;
        }
        for i in start..pairs.len() {
            let e = pairs[i];
            if chosen.iter().any(|&f| super::edges_cross(e, f)) {
                continue;
            }
            chosen.push(e);
            rec(n, pairs, i + 1, chosen, out);
            chosen.pop();
        }
    }
    rec(n, &pairs, 0, &mut chosen, &mut out);
    Ok(out)
}
