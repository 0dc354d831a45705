//! Quasisymmetric functions of fixed degree in the fundamental basis, the
//! monomial basis, and expansion into Schur functions.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::perm::{Partition, Subset};
use crate::poly::IntPolynomial;
use crate::tableaux::{self, SkewShape, Tableau};
use crate::{Error, Result};

/// `Σ c_D F_{n,D}` over `D ⊆ [n-1]`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QSymVector {
    degree: usize,
    coeffs: BTreeMap<Subset, i64>,
}

impl QSymVector {
    pub fn zero(degree: usize) -> Self {
        assert!(degree >= 1, "degree must be positive");
        QSymVector {
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// The single basis element `F_{n,D}`.
    pub fn fundamental(degree: usize, d: Subset) -> Result<Self> {
        qsym_of_set(degree, [d])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &BTreeMap<Subset, i64> {
        &self.coeffs
    }

    pub fn coeff(&self, d: &Subset) -> i64 {
        self.coeffs.get(d).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Sum of all coefficients: the size of the underlying multiset.
    pub fn total(&self) -> i64 {
        self.coeffs.values().sum()
    }

    pub fn add_term(&mut self, d: Subset, c: i64) -> Result<()> {
        if d.universe() + 1 != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: d.universe() + 1,
            });
        }
        let e = self.coeffs.entry(d).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.remove(&d);
        }
        Ok(())
    }

    pub fn add_scaled(&mut self, other: &QSymVector, c: i64) -> Result<()> {
        for (&d, &x) in &other.coeffs {
            self.add_term(d, c * x)?;
        }
        Ok(())
    }
}

impl fmt::Display for QSymVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (j, (d, c)) in self.coeffs.iter().enumerate() {
            if j > 0 {
                write!(f, " + ")?;
            }
            if *c != 1 {
                write!(f, "{c}")?;
            }
            write!(f, "F{d}")?;
        }
        Ok(())
    }
}

/// `Q(A) = Σ_{a ∈ A} F_{n,Des(a)}` from the descent sets of `A`.
pub fn qsym_of_set<I: IntoIterator<Item = Subset>>(degree: usize, items: I) -> Result<QSymVector> {
    let mut v = QSymVector::zero(degree);
    for d in items {
        v.add_term(d, 1)?;
    }
    Ok(v)
}

/// The composition of `n` with partial sums `S`.
pub fn composition_of(s: &Subset, n: usize) -> Vec<usize> {
    let mut parts = Vec::with_capacity(s.len() + 1);
    let mut prev = 0;
    for i in s.iter().chain(std::iter::once(n)) {
        parts.push(i - prev);
        prev = i;
    }
    parts
}

/// `Σ c_α M_α` keyed by compositions of the degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialVector {
    degree: usize,
    coeffs: BTreeMap<Vec<usize>, i64>,
}

impl MonomialVector {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &BTreeMap<Vec<usize>, i64> {
        &self.coeffs
    }

    pub fn coeff(&self, alpha: &[usize]) -> i64 {
        self.coeffs.get(alpha).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

/// Rewrite using `F_{n,D} = Σ_{S ⊇ D} M_{comp(S)}`.
pub fn fundamental_to_monomial(v: &QSymVector) -> MonomialVector {
    let n = v.degree;
    let top = Subset::full(n - 1);
    let mut coeffs: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
    for (d, &c) in &v.coeffs {
        for extra in top.difference(d).subsets() {
            *coeffs.entry(composition_of(&d.union(&extra), n)).or_insert(0) += c;
        }
    }
    coeffs.retain(|_, c| *c != 0);
    MonomialVector { degree: n, coeffs }
}

/// Monomial coefficients are constant along rearrangements of compositions.
pub fn is_symmetric(v: &QSymVector) -> bool {
    let n = v.degree;
    let m = fundamental_to_monomial(v);
    let mut class: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
    for s in Subset::all(n - 1) {
        let alpha = composition_of(&s, n);
        let c = m.coeff(&alpha);
        let mut key = alpha;
        key.sort_unstable_by(|a, b| b.cmp(a));
        match class.get(&key) {
            Some(&prev) if prev != c => return false,
            Some(_) => {}
            None => {
                class.insert(key, c);
            }
        }
    }
    true
}

/// `Q(SYT(λ))`, which is the Schur function `s_λ`.
pub fn schur_in_fundamental(lambda: &Partition) -> Result<QSymVector> {
    skew_schur_in_fundamental(&SkewShape::straight(lambda.clone())?)
}

/// `Q(SYT(λ/μ))`, the skew Schur function. Not decomposed further.
pub fn skew_schur_in_fundamental(shape: &SkewShape) -> Result<QSymVector> {
    let tabs = tableaux::enumerate_syt(shape)?;
    qsym_of_set(shape.size(), tabs.iter().map(Tableau::descent_set))
}

/// `Σ c_λ s_λ` over partitions of the degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SchurExpansion {
    degree: usize,
    coeffs: BTreeMap<Partition, i64>,
}

impl SchurExpansion {
    pub fn new(degree: usize, coeffs: BTreeMap<Partition, i64>) -> Result<Self> {
        if let Some(l) = coeffs.keys().find(|l| l.size() != degree) {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: l.size(),
            });
        }
        let coeffs = coeffs.into_iter().filter(|&(_, c)| c != 0).collect();
        Ok(SchurExpansion { degree, coeffs })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, i64> {
        &self.coeffs
    }

    pub fn coeff(&self, lambda: &Partition) -> i64 {
        self.coeffs.get(lambda).copied().unwrap_or(0)
    }

    pub fn is_positive(&self) -> bool {
        self.coeffs.values().all(|&c| c >= 0)
    }

    /// Back to the fundamental basis.
    pub fn to_qsym(&self) -> Result<QSymVector> {
        let mut v = QSymVector::zero(self.degree);
        for (l, &c) in &self.coeffs {
            v.add_scaled(&schur_in_fundamental(l)?, c)?;
        }
        Ok(v)
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        // Largest partitions first, the usual way to write these.
        for (j, (l, c)) in self.coeffs.iter().rev().enumerate() {
            if j > 0 {
                write!(f, " + ")?;
            }
            if *c != 1 {
                write!(f, "{c}")?;
            }
            write!(f, "s{l}")?;
        }
        Ok(())
    }
}

/// The Schur vectors `s_λ`, `λ ⊢ n`, as fundamental expansions.
pub fn schur_basis(n: usize) -> Result<Vec<(Partition, QSymVector)>> {
    Partition::all(n)
        .into_iter()
        .map(|l| schur_in_fundamental(&l).map(|v| (l, v)))
        .collect()
}

/// Row-reduce `[A | b]` in place; returns the pivot column of each pivot row.
fn row_reduce(m: &mut [Vec<BigRational>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                let (pivot_row, other) = if r < row {
                    let (a, b) = m.split_at_mut(row);
                    (&b[0], &mut a[r])
                } else {
                    let (a, b) = m.split_at_mut(r);
                    (&a[row], &mut b[0])
                };
                for (x, y) in other.iter_mut().zip(pivot_row.iter()) {
                    *x = &*x - &factor * y;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    pivots
}

fn basis_matrix(n: usize, basis: &[(Partition, QSymVector)]) -> Vec<Vec<BigRational>> {
    Subset::all(n - 1)
        .map(|d| {
            basis
                .iter()
                .map(|(_, v)| BigRational::from_integer(BigInt::from(v.coeff(&d))))
                .collect()
        })
        .collect()
}

/// Rank of the Schur vectors of degree `n` inside the fundamental basis.
pub fn schur_basis_rank(n: usize) -> Result<usize> {
    let basis = schur_basis(n)?;
    let mut m = basis_matrix(n, &basis);
    Ok(row_reduce(&mut m, basis.len()).len())
}

/// The unique integer combination of Schur functions equal to `v`.
///
/// Fails with [`Error::NotInSchurSpan`] when the exact rational solve has
/// no solution, or its solution is not integral.
pub fn schur_expand(v: &QSymVector) -> Result<SchurExpansion> {
    let n = v.degree;
    if n > tableaux::DEFAULT_MAX_CELLS {
        return Err(Error::BoundExceeded {
            what: "degree",
            value: n,
            max: tableaux::DEFAULT_MAX_CELLS,
        });
    }
    let basis = schur_basis(n)?;
    let k = basis.len();
    let mut m = basis_matrix(n, &basis);
    for (row, d) in m.iter_mut().zip(Subset::all(n - 1)) {
        row.push(BigRational::from_integer(BigInt::from(v.coeff(&d))));
    }
    let pivots = row_reduce(&mut m, k + 1);
    if pivots.contains(&k) {
        return Err(Error::NotInSchurSpan);
    }
    if pivots.len() != k {
        return Err(Error::InvariantViolation(format!(
            "Schur vectors of degree {n} have rank {} < {k}",
            pivots.len()
        )));
    }
    let mut coeffs = BTreeMap::new();
    for (row, (l, _)) in m.iter().zip(&basis) {
        let x = &row[k];
        if !x.is_integer() {
            return Err(Error::NotInSchurSpan);
        }
        let c = x
            .to_integer()
            .to_i64()
            .ok_or_else(|| Error::InvalidArgument(format!("coefficient {x} overflows i64")))?;
        if c != 0 {
            coeffs.insert(l.clone(), c);
        }
    }
    Ok(SchurExpansion { degree: n, coeffs })
}

/// `Σ_k c_{(n-k,1^k)} x^k`.
pub fn hook_coeffs(e: &SchurExpansion) -> IntPolynomial {
    let n = e.degree;
    IntPolynomial::new(
        (0..n)
            .map(|k| e.coeff(&Partition::hook(n, k).expect("k < n")))
            .collect(),
    )
}
