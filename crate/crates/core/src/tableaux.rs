//! Standard Young tableaux of straight and skew shape (English notation),
//! their descent sets, and Schensted row insertion.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::perm::{Partition, Permutation, Subset};
use crate::{Error, Result};

/// Default largest number of cells for which tableaux may be listed.
pub const DEFAULT_MAX_CELLS: usize = 12;

/// A skew diagram `λ/μ` with at least one cell.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !inner.is_contained_in(&outer) {
            return Err(Error::InvalidShape(format!("{inner} is not contained in {outer}")));
        }
        if outer.size() == inner.size() {
            return Err(Error::InvalidShape(format!("{outer}/{inner} has no cells")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Result<Self> {
        SkewShape::new(outer, Partition::empty())
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    /// Cell `(r, c)` (0-based) belongs to the diagram.
    pub fn contains(&self, r: usize, c: usize) -> bool {
        c >= self.inner.part(r) && c < self.outer.part(r)
    }

    /// Cells in reading order, row by row.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        (0..self.rows())
            .flat_map(|r| (self.inner.part(r)..self.outer.part(r)).map(move |c| (r, c)))
            .collect()
    }

    /// Edge-connected with no 2×2 block of cells.
    pub fn is_connected_ribbon(&self) -> bool {
        let cells = self.cells();
        let has_square = cells.iter().any(|&(r, c)| {
            self.contains(r, c + 1) && self.contains(r + 1, c) && self.contains(r + 1, c + 1)
        });
        if has_square {
            return false;
        }
        let all: BTreeSet<(usize, usize)> = cells.iter().copied().collect();
        let mut seen = BTreeSet::new();
        let mut stack = vec![cells[0]];
        while let Some((r, c)) = stack.pop() {
            if !seen.insert((r, c)) {
                continue;
            }
            let mut nbrs = vec![(r + 1, c), (r, c + 1)];
            if r > 0 {
                nbrs.push((r - 1, c));
            }
            if c > 0 {
                nbrs.push((r, c - 1));
            }
            stack.extend(nbrs.into_iter().filter(|x| all.contains(x) && !seen.contains(x)));
        }
        seen.len() == all.len()
    }

    /// Rows `r` whose last cell can be removed leaving a valid skew shape.
    fn removable_rows(&self) -> Vec<usize> {
        (0..self.rows())
            .filter(|&r| {
                let len = self.outer.part(r);
                len > self.inner.part(r) && self.outer.part(r + 1) < len
            })
            .collect()
    }

    fn without_corner(&self, r: usize) -> SkewShape {
        let mut parts = self.outer.parts().to_vec();
        parts[r] -= 1;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        SkewShape {
            outer: Partition::new(parts).expect("corner removal keeps a partition"),
            inner: self.inner.clone(),
        }
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_straight() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

/// A filling of a skew shape. `rows[r][j]` is the entry in cell
/// `(r, inner_r + j)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct Tableau {
    shape: SkewShape,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// A tableau from its rows, checked to be standard.
    pub fn new(shape: SkewShape, rows: Vec<Vec<usize>>) -> Result<Self> {
        let t = Tableau { shape, rows };
        if !t.is_standard() {
            return Err(Error::InvalidShape(format!("{:?} is not a standard filling of {}", t.rows, t.shape)));
        }
        Ok(t)
    }

    /// A straight-shape tableau, the shape read off the row lengths.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = SkewShape::straight(Partition::new(rows.iter().map(Vec::len).collect())?)?;
        Tableau::new(shape, rows)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn entry(&self, r: usize, c: usize) -> Option<usize> {
        let start = self.shape.inner.part(r);
        self.rows.get(r)?.get(c.checked_sub(start)?).copied()
    }

    /// Row index of each entry: `row_of()[v-1]` is the row holding `v`.
    fn row_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.size()];
        for (r, row) in self.rows.iter().enumerate() {
            for &v in row {
                out[v - 1] = r;
            }
        }
        out
    }

    /// Rows increase, columns increase, entries are exactly `1..=n`.
    pub fn is_standard(&self) -> bool {
        let n = self.size();
        if self.rows.len() != self.shape.rows() {
            return false;
        }
        let mut seen = vec![false; n + 1];
        for (r, row) in self.rows.iter().enumerate() {
            if row.len() != self.shape.outer.part(r) - self.shape.inner.part(r) {
                return false;
            }
            for &v in row {
                if v == 0 || v > n || seen[v] {
                    return false;
                }
                seen[v] = true;
            }
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return false;
            }
        }
        self.shape.cells().iter().all(|&(r, c)| match self.entry(r + 1, c) {
            Some(below) => below > self.entry(r, c).expect("cell in shape"),
            None => true,
        })
    }

    /// `i` is a descent when `i+1` sits in a strictly lower row than `i`.
    pub fn descent_set(&self) -> Subset {
        let n = self.size();
        let row = self.row_of();
        let mut s = Subset::empty(n - 1);
        for i in 1..n {
            if row[i] > row[i - 1] {
                s.insert(i);
            }
        }
        s
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            write!(f, "{}", "  .".repeat(self.shape.inner.part(r)))?;
            for v in row {
                write!(f, "{v:>3}")?;
            }
        }
        Ok(())
    }
}

pub fn enumerate_syt(shape: &SkewShape) -> Result<Vec<Tableau>> {
    enumerate_syt_with_bound(shape, DEFAULT_MAX_CELLS)
}

/// All standard tableaux of `shape`, found by deciding where the largest
/// entry goes (a removable corner) and recursing.
pub fn enumerate_syt_with_bound(shape: &SkewShape, max: usize) -> Result<Vec<Tableau>> {
    let n = shape.size();
    if n > max {
        return Err(Error::BoundExceeded { what: "cells", value: n, max });
    }
    let mut fills = fill(shape, n);
    fills.sort();
    Ok(fills
        .into_iter()
        .map(|rows| Tableau {
            shape: shape.clone(),
            rows,
        })
        .collect())
}

fn fill(shape: &SkewShape, n: usize) -> Vec<Vec<Vec<usize>>> {
    let rows = shape.rows();
    if n == 0 {
        return vec![vec![Vec::new(); rows]];
    }
    let mut out = Vec::new();
    for r in shape.removable_rows() {
        for mut sub in fill(&shape.without_corner(r), n - 1) {
            sub.resize(rows, Vec::new());
            sub[r].push(n);
            out.push(sub);
        }
    }
    out
}

/// Schensted row insertion. Returns `(P, Q)` with `Q` the recording tableau.
pub fn rsk(pi: &Permutation) -> (Tableau, Tableau) {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (step, &v) in pi.word().iter().enumerate() {
        let mut x = v;
        let mut r = 0;
        loop {
            if r == p.len() {
                p.push(vec![x]);
                q.push(vec![step + 1]);
                break;
            }
            match p[r].iter().position(|&y| y > x) {
                Some(j) => {
                    x = std::mem::replace(&mut p[r][j], x);
                    r += 1;
                }
                None => {
                    p[r].push(x);
                    q[r].push(step + 1);
                    break;
                }
            }
        }
    }
    let to_tableau = |rows: Vec<Vec<usize>>| {
        let shape = SkewShape::straight(Partition::new(rows.iter().map(Vec::len).collect()).expect("insertion shape"))
            .expect("nonempty");
        Tableau { shape, rows }
    };
    (to_tableau(p), to_tableau(q))
}

/// Undo [`rsk`]: the permutation whose insertion and recording tableaux
/// are `p` and `q`.
pub fn inverse_rsk(p: &Tableau, q: &Tableau) -> Result<Permutation> {
    if p.shape != q.shape || !p.shape.is_straight() {
        return Err(Error::InvalidShape("P and Q must share a straight shape".into()));
    }
    let n = p.size();
    let mut prow = p.rows.clone();
    let mut qrow = q.rows.clone();
    let mut word = vec![0; n];
    for step in (1..=n).rev() {
        let mut r = qrow
            .iter()
            .position(|row| row.last() == Some(&step))
            .ok_or_else(|| Error::InvalidShape(format!("{step} is not at a corner of Q")))?;
        qrow[r].pop();
        let mut x = prow[r].pop().expect("matching corner in P");
        while r > 0 {
            r -= 1;
            let j = prow[r]
                .iter()
                .rposition(|&y| y < x)
                .ok_or_else(|| Error::InvalidShape("P is not standard".into()))?;
            x = std::mem::replace(&mut prow[r][j], x);
        }
        word[step - 1] = x;
        while prow.last().is_some_and(Vec::is_empty) {
            prow.pop();
            qrow.pop();
        }
    }
    Permutation::new(word)
}

/// The hook-shaped standard tableau with descent set `j ⊆ [n-1]`: the first
/// column holds `1` and every `i+1` with `i ∈ j`, the first row the rest.
pub fn hook_with_descent(j: &Subset) -> Tableau {
    let n = j.universe() + 1;
    let mut first_row = vec![1];
    let mut column = Vec::new();
    for v in 2..=n {
        if j.contains(v - 1) {
            column.push(vec![v]);
        } else {
            first_row.push(v);
        }
    }
    let mut rows = vec![first_row];
    rows.extend(column);
    let shape = SkewShape::straight(Partition::hook(n, j.len()).expect("k < n")).expect("nonempty");
    Tableau { shape, rows }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::factorial;
    use crate::perm::enumerate_sn;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn straight(p: &[usize]) -> SkewShape {
        SkewShape::straight(part(p)).unwrap()
    }

    /// `n! / ∏ hooks`, kept independent of the enumeration code.
    fn hook_length_count(lambda: &Partition) -> u128 {
        let parts = lambda.parts();
        let conj = |c: usize| parts.iter().filter(|&&p| p > c).count();
        let mut prod: u128 = 1;
        for (r, &len) in parts.iter().enumerate() {
            for c in 0..len {
                prod *= ((len - c - 1) + (conj(c) - r - 1) + 1) as u128;
            }
        }
        factorial(lambda.size() as u64) / prod
    }

    #[test]
    fn syt_counts_small_shapes() {
        assert_eq!(enumerate_syt(&straight(&[5])).unwrap().len(), 1);
        assert_eq!(enumerate_syt(&straight(&[2, 2])).unwrap().len(), 2);
        assert_eq!(enumerate_syt(&straight(&[3, 1, 1])).unwrap().len(), 6);
        assert!(enumerate_syt(&straight(&[13])).is_err());
    }

    #[test]
    fn syt_counts_match_hook_length_formula() {
        for n in 1..=9 {
            for lambda in Partition::all(n) {
                let got = enumerate_syt(&SkewShape::straight(lambda.clone()).unwrap()).unwrap();
                assert_eq!(got.len() as u128, hook_length_count(&lambda), "{lambda}");
                assert!(got.iter().all(Tableau::is_standard));
            }
        }
    }

    #[test]
    fn sum_of_squares_is_factorial() {
        for n in 1..=7 {
            let total: u128 = Partition::all(n).iter().map(|l| hook_length_count(l).pow(2)).sum();
            let enumerated: u128 = Partition::all(n)
                .into_iter()
                .map(|l| (enumerate_syt(&SkewShape::straight(l).unwrap()).unwrap().len() as u128).pow(2))
                .sum();
            assert_eq!(total, factorial(n as u64));
            assert_eq!(enumerated, factorial(n as u64));
        }
    }

    #[test]
    fn skew_tableaux() {
        let s = SkewShape::new(part(&[2, 1]), part(&[1])).unwrap();
        let all = enumerate_syt(&s).unwrap();
        assert_eq!(all.len(), 2);
        let descents: Vec<Vec<usize>> = all.iter().map(|t| t.descent_set().to_vec()).collect();
        assert!(descents.contains(&vec![1]) && descents.contains(&vec![]));
        assert!(SkewShape::new(part(&[2]), part(&[2])).is_err());
        assert!(SkewShape::new(part(&[2]), part(&[1, 1])).is_err());
    }

    #[test]
    fn descents_of_rows_columns_and_hooks() {
        let row = &enumerate_syt(&straight(&[4])).unwrap()[0];
        assert!(row.descent_set().is_empty());
        let col = &enumerate_syt(&straight(&[1, 1, 1, 1])).unwrap()[0];
        assert!(col.descent_set().is_full());
        let hook = Tableau::from_rows(vec![vec![1, 2, 3], vec![4], vec![5]]).unwrap();
        assert_eq!(hook.descent_set(), Subset::suffix(4, 2));
    }

    #[test]
    fn hook_descent_sets_each_once() {
        for n in 1..=7 {
            for k in 0..n {
                let shape = SkewShape::straight(Partition::hook(n, k).unwrap()).unwrap();
                let mut got: Vec<Subset> = enumerate_syt(&shape).unwrap().iter().map(Tableau::descent_set).collect();
                got.sort();
                let mut want: Vec<Subset> = Subset::all(n - 1).filter(|s| s.len() == k).collect();
                want.sort();
                assert_eq!(got, want);
            }
        }
    }

    #[test]
    fn hook_with_descent_is_a_bijection() {
        let n = 4;
        let mut seen = BTreeSet::new();
        for j in Subset::all(n - 1) {
            let t = hook_with_descent(&j);
            assert!(t.is_standard());
            assert_eq!(t.descent_set(), j);
            assert!(t.shape().outer().hook_leg().is_some());
            seen.insert(format!("{:?}", t.rows()));
        }
        let hooks: usize = (0..n)
            .map(|k| enumerate_syt(&SkewShape::straight(Partition::hook(n, k).unwrap()).unwrap()).unwrap().len())
            .sum();
        assert_eq!(seen.len(), hooks);
        assert_eq!(hook_with_descent(&Subset::empty(3)).rows(), &[vec![1, 2, 3, 4]]);
        assert_eq!(hook_with_descent(&Subset::full(3)).shape().outer(), &part(&[1, 1, 1, 1]));
    }

    #[test]
    fn ribbons() {
        assert!(straight(&[5]).is_connected_ribbon());
        assert!(!straight(&[2, 2]).is_connected_ribbon());
        assert!(SkewShape::new(part(&[3, 3, 1]), part(&[2])).unwrap().is_connected_ribbon());
        assert!(!SkewShape::new(part(&[2, 1]), part(&[1])).unwrap().is_connected_ribbon());
        assert!(SkewShape::new(part(&[3, 2]), part(&[1])).unwrap().is_connected_ribbon());
        assert!(!SkewShape::new(part(&[3, 1]), part(&[1])).unwrap().is_connected_ribbon());
        assert!(!SkewShape::new(part(&[3, 3]), part(&[1])).unwrap().is_connected_ribbon());
    }

    #[test]
    fn rsk_properties_on_small_groups() {
        for n in 1..=6 {
            for pi in enumerate_sn(n).unwrap() {
                let (p, q) = rsk(&pi);
                assert_eq!(p.shape(), q.shape());
                assert!(p.is_standard() && q.is_standard());
                assert_eq!(q.descent_set(), pi.des_set());
                assert_eq!(rsk(&pi.inverse()), (q.clone(), p.clone()));
                assert_eq!(inverse_rsk(&p, &q).unwrap(), pi);
            }
        }
    }

    #[test]
    fn involutions_of_s4() {
        let all = enumerate_sn(4).unwrap();
        let fixed: Vec<_> = all.iter().filter(|pi| { let (p, q) = rsk(pi); p == q }).collect();
        assert_eq!(fixed.len(), 10);
        assert!(fixed.iter().all(|pi| pi.pow(2).is_identity()));
        let mut from_perms: Vec<Subset> = all.iter().map(Permutation::des_set).collect();
        let mut from_q: Vec<Subset> = all.iter().map(|pi| rsk(pi).1.descent_set()).collect();
        from_perms.sort();
        from_q.sort();
        assert_eq!(from_perms, from_q);
        let id = rsk(&Permutation::identity(4));
        assert_eq!(id.0.rows(), &[vec![1, 2, 3, 4]]);
    }
}
