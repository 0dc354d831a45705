//! Partitions into distinct parts, generalized pentagonal numbers and
//! Franklin's involution.

use crate::perm::Partition;
use crate::poly::IntPolynomial;
use crate::{Error, Result};

/// Largest `k` accepted by [`distinct_partitions`] and [`pd_poly`].
pub const MAX_K: usize = 60;

fn check_k(k: usize) -> Result<()> {
    if k > MAX_K {
        return Err(Error::BoundExceeded { what: "k", value: k, max: MAX_K });
    }
    Ok(())
}

/// Partitions of `k` into distinct parts, largest first part first.
pub fn distinct_partitions(k: usize) -> Result<Vec<Partition>> {
    check_k(k)?;
    fn rec(rest: usize, below: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition::new(cur.clone()).expect("strictly decreasing"));
            return;
        }
        for p in (1..=rest.min(below - 1)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, k + 1, &mut Vec::new(), &mut out);
    Ok(out)
}

/// `Pd_k(x) = Σ_m pd(k, m) x^m`, where `pd(k, m)` counts partitions of `k`
/// into `m` distinct parts.
///
/// Computed by a knapsack over the allowed parts rather than by listing.
pub fn pd_poly(k: usize) -> Result<IntPolynomial> {
    check_k(k)?;
    // table[s][m]: partitions of s into m distinct parts from those seen so far.
    let max_m = (1..=k + 1).take_while(|m| m * (m + 1) / 2 <= k).count() + 1;
    let mut table = vec![vec![0i64; max_m + 1]; k + 1];
    table[0][0] = 1;
    for part in 1..=k {
        for s in (part..=k).rev() {
            for m in (1..=max_m).rev() {
                table[s][m] += table[s - part][m - 1];
            }
        }
    }
    Ok(IntPolynomial::new(table[k].clone()))
}

/// How `k` relates to the numbers `m(3m ± 1)/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pentagonal {
    /// `k = 0`, the `m = 0` term of the Euler product.
    Zero,
    /// `k = m(3m + sign)/2` with `m ≥ 1` and `sign = ±1`.
    Pentagonal { m: usize, sign: i8 },
    NotPentagonal,
}

impl Pentagonal {
    /// True for `k = m(3m±1)/2` with `m ≥ 1`. Zero is reported separately.
    pub fn is_pentagonal(self) -> bool {
        matches!(self, Pentagonal::Pentagonal { .. })
    }

    /// Coefficient of `x^k` in `Π_{m≥1}(1 - x^m)`.
    pub fn euler_coefficient(self) -> i64 {
        match self {
            Pentagonal::Zero => 1,
            Pentagonal::Pentagonal { m, .. } => {
                if m % 2 == 0 {
                    1
                } else {
                    -1
                }
            }
            Pentagonal::NotPentagonal => 0,
        }
    }
}

pub fn is_generalized_pentagonal(k: usize) -> Pentagonal {
    if k == 0 {
        return Pentagonal::Zero;
    }
    let mut m = 1;
    while m * (3 * m - 1) / 2 <= k {
        if m * (3 * m - 1) / 2 == k {
            return Pentagonal::Pentagonal { m, sign: -1 };
        }
        if m * (3 * m + 1) / 2 == k {
            return Pentagonal::Pentagonal { m, sign: 1 };
        }
        m += 1;
    }
    Pentagonal::NotPentagonal
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Franklin {
    Mapped(Partition),
    Fixed,
}

/// Franklin's involution on partitions into distinct parts.
///
/// With `D` the length of the leading run `λ_1, λ_1 - 1, …` and `L` the
/// smallest part: if `D < L`, take one cell from each of the first `D`
/// rows and make them a new last row; otherwise remove the last row and
/// add one cell to each of the first `L` rows. The two staircases where
/// the move would break distinctness are fixed.
pub fn franklin_involution(lambda: &Partition) -> Result<Franklin> {
    if !lambda.has_distinct_parts() {
        return Err(Error::InvalidPartition(format!("{lambda} has repeated parts")));
    }
    let parts = lambda.parts();
    let l = parts.len();
    if l == 0 {
        return Ok(Franklin::Fixed);
    }
    let d = 1 + parts.windows(2).take_while(|w| w[0] == w[1] + 1).count();
    let small = parts[l - 1];
    let mut out = parts.to_vec();
    if d < small {
        if d == l && small == d + 1 {
            return Ok(Franklin::Fixed);
        }
        for p in out.iter_mut().take(d) {
            *p -= 1;
        }
        out.push(d);
    } else {
        if d == l && small == d {
            return Ok(Franklin::Fixed);
        }
        out.pop();
        for p in out.iter_mut().take(small) {
            *p += 1;
        }
    }
    Ok(Franklin::Mapped(Partition::new(out).expect("involution keeps parts distinct")))
}

/// Coefficients `a_0, …, a_k` of `Π_{m=1}^{k}(1 - x^m)`.
pub fn euler_product_coeffs(k: usize) -> Vec<i64> {
    let mut c = vec![0i64; k + 1];
    c[0] = 1;
    for m in 1..=k {
        for s in (m..=k).rev() {
            c[s] -= c[s - m];
        }
    }
    c
}
