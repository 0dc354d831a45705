//! Unimodal permutations: words that rise to `n` and then fall.
//!
//! A unimodal `π ∈ S_n` is fixed by the set of values to the left of `n`,
//! so `Δ(n)` has `2^{n-1}` elements and is generated directly rather than
//! filtered out of `S_n`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::arith::{binomial, divisors, mobius};
use crate::perm::{Permutation, Subset};
use crate::poly::IntPolynomial;
use crate::{Error, Result};

/// Largest `n` for [`enumerate_unimodal`] and the sums built on it.
pub const MAX_UNIMODAL_N: usize = 16;
/// Largest `n` for [`enumerate_unimodal_cycles`] and [`brute_delta_count`].
pub const MAX_CYCLE_N: usize = 12;
/// Largest total size for [`span_enumerate`].
pub const MAX_SPAN_N: usize = 12;
/// Largest `n` for [`gannon_count`]; keeps the binomials inside `i128`.
pub const MAX_GANNON_N: usize = 100;

fn check(what: &'static str, value: usize, max: usize) -> Result<()> {
    if value > max {
        return Err(Error::BoundExceeded { what, value, max });
    }
    Ok(())
}

pub fn is_unimodal(p: &Permutation) -> bool {
    let w = p.word();
    let top = unimodal_max(p) - 1;
    w[..=top].windows(2).all(|x| x[0] < x[1]) && w[top..].windows(2).all(|x| x[0] > x[1])
}

/// `m_π = π^{-1}(n)`, the position of the largest value.
pub fn unimodal_max(p: &Permutation) -> usize {
    p.word().iter().position(|&v| v == p.n()).expect("a permutation contains n") + 1
}

/// `U_A(x) = Σ_k u_k x^k`, with `u_k` the number of unimodal members whose
/// maximum sits at `k`.
pub fn unimodal_maxima_poly<'a, I: IntoIterator<Item = &'a Permutation>>(a: I) -> IntPolynomial {
    IntPolynomial::from_counts(a.into_iter().filter(|p| is_unimodal(p)).map(unimodal_max))
}

/// A permutation known to be unimodal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct UnimodalPerm {
    p: Permutation,
}

impl UnimodalPerm {
    pub fn new(p: Permutation) -> Result<Self> {
        if !is_unimodal(&p) {
            return Err(Error::InvalidArgument(format!("{p} is not unimodal")));
        }
        Ok(UnimodalPerm { p })
    }

    pub fn from_word(word: Vec<usize>) -> Result<Self> {
        Self::new(Permutation::new(word)?)
    }

    /// The unimodal permutation of `[n]` with `left` (a subset of `[n-1]`)
    /// ascending before `n` and the rest descending after it.
    pub fn from_left_set(n: usize, left: &Subset) -> Self {
        let mut word = left.to_vec();
        word.push(n);
        word.extend((1..n).rev().filter(|&v| !left.contains(v)));
        UnimodalPerm {
            p: Permutation::from_word_unchecked(word),
        }
    }

    pub fn perm(&self) -> &Permutation {
        &self.p
    }

    pub fn into_perm(self) -> Permutation {
        self.p
    }

    pub fn n(&self) -> usize {
        self.p.n()
    }

    pub fn max_position(&self) -> usize {
        unimodal_max(&self.p)
    }

    pub fn is_full_cycle(&self) -> bool {
        self.p.is_full_cycle()
    }

    fn require_cycle(&self) -> Result<()> {
        if !self.is_full_cycle() {
            return Err(Error::InvalidArgument(format!("{} is not a full cycle", self.p)));
        }
        Ok(())
    }
}

impl fmt::Display for UnimodalPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.p.fmt(f)
    }
}

impl Serialize for UnimodalPerm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.p.serialize(s)
    }
}

/// `Δ(n)` in lexicographic order, `n ≤ 16`.
pub fn enumerate_unimodal(n: usize) -> Result<Vec<UnimodalPerm>> {
    check("n", n, MAX_UNIMODAL_N)?;
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let mut out: Vec<UnimodalPerm> = Subset::all(n - 1).map(|s| UnimodalPerm::from_left_set(n, &s)).collect();
    out.sort();
    Ok(out)
}

/// `Δ_n`: the unimodal full cycles of `[n]`, `n ≤ 12`.
pub fn enumerate_unimodal_cycles(n: usize) -> Result<Vec<UnimodalPerm>> {
    check("n", n, MAX_CYCLE_N)?;
    Ok(enumerate_unimodal(n)?.into_iter().filter(UnimodalPerm::is_full_cycle).collect())
}

/// `|Δ_n^m|` by enumeration.
pub fn brute_delta_count(n: usize, m: usize) -> Result<u64> {
    Ok(enumerate_unimodal_cycles(n)?.iter().filter(|p| p.max_position() == m).count() as u64)
}

fn sign(e: usize) -> i128 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn divide_exactly(num: i128, n: usize, variant: &str) -> Result<i128> {
    if num % n as i128 != 0 {
        return Err(Error::InvariantViolation(format!("{variant} sum {num} is not divisible by {n}")));
    }
    Ok(num / n as i128)
}

fn gannon_first(n: usize, m: usize) -> Result<i128> {
    let mut s = 0i128;
    for d in divisors(n as u64).into_iter().map(|d| d as usize).filter(|&d| d <= n - m) {
        let inner: i128 = (1..=(n - m) / d).map(|j| sign(j) * binomial((n / d) as u64, j as u64)).sum();
        s += mobius(d as u64) as i128 * inner;
    }
    Ok((n == 1) as i128 + divide_exactly(sign(n - m) * s, n, "first")?)
}

fn gannon_second(n: usize, m: usize) -> Result<i128> {
    let mut s = 0i128;
    for d in divisors(n as u64).into_iter().map(|d| d as usize).filter(|&d| d < m) {
        let inner: i128 = (1..m.div_ceil(d)).map(|j| sign(j + n / d) * binomial((n / d) as u64, j as u64)).sum();
        s += mobius(d as u64) as i128 * inner;
    }
    let two = if n == 2 { sign(m + 1) } else { 0 };
    Ok((n == 1) as i128 + two + divide_exactly(sign(n - m + 1) * s, n, "second")?)
}

/// Gannon's Möbius-sum count of unimodal `n`-cycles with maximum at `m`.
///
/// Both published forms of the sum are evaluated and must agree.
pub fn gannon_count(n: usize, m: usize) -> Result<i128> {
    check("n", n, MAX_GANNON_N)?;
    if m == 0 || m > n {
        return Err(Error::InvalidArgument(format!("maximum position {m} outside 1..={n}")));
    }
    let (a, b) = (gannon_first(n, m)?, gannon_second(n, m)?);
    if a != b {
        return Err(Error::InvariantViolation(format!("Gannon forms disagree at ({n}, {m}): {a} vs {b}")));
    }
    Ok(a)
}

/// `Ω_J^{-1} ∘ π|_J ∘ Ω_J`: the shape of `π` on an invariant set `J`.
pub fn restrict(p: &Permutation, j: &Subset) -> Result<Permutation> {
    if j.universe() != p.n() || j.is_empty() {
        return Err(Error::InvalidSubset(format!("{j} is not a non-empty subset of [{}]", p.n())));
    }
    let elems = j.to_vec();
    let rank = |v: usize| elems.binary_search(&v).ok().map(|r| r + 1);
    let word = elems
        .iter()
        .map(|&x| rank(p.apply(x)))
        .collect::<Option<Vec<usize>>>()
        .ok_or_else(|| Error::InvalidSubset(format!("{j} is not invariant under {p}")))?;
    Ok(Permutation::from_word_unchecked(word))
}

/// The shapes of the cycles of `π`, in the order of [`Permutation::cycles`].
pub fn cycle_shapes(p: &Permutation) -> Vec<Permutation> {
    p.cycles()
        .into_iter()
        .map(|c| {
            let j = Subset::new(p.n(), c).expect("cycle inside [n]");
            restrict(p, &j).expect("cycles are invariant")
        })
        .collect()
}

/// `π_1 ⊕_{J_1} … π_k`: each part is carried onto its index set by the
/// order-preserving bijection `Ω_{J_i}`. The result need not be unimodal.
pub fn unimodal_sum(parts: &[Permutation], js: &[Subset]) -> Result<Permutation> {
    if parts.is_empty() || parts.len() != js.len() {
        return Err(Error::InvalidArgument(format!(
            "{} parts but {} index sets",
            parts.len(),
            js.len()
        )));
    }
    let n: usize = parts.iter().map(Permutation::n).sum();
    let mut word = vec![0usize; n];
    for (p, j) in parts.iter().zip(js) {
        if j.universe() != n || j.len() != p.n() {
            return Err(Error::InvalidSubset(format!("{j} does not have {} elements of [{n}]", p.n())));
        }
        let elems = j.to_vec();
        for (x, &at) in elems.iter().enumerate() {
            if word[at - 1] != 0 {
                return Err(Error::InvalidSubset(format!("index sets overlap at {at}")));
            }
            word[at - 1] = elems[p.apply(x + 1) - 1];
        }
    }
    Ok(Permutation::from_word_unchecked(word))
}

/// Every `J ⊆ [n_1 + n_2]` with `π_1 ⊕_J π_2` unimodal and
/// `Ω(m_1) < Ω̄(m_2)`.
fn unimodal_splits(p1: &UnimodalPerm, p2: &UnimodalPerm) -> Result<Vec<Subset>> {
    let (n1, n2) = (p1.n(), p2.n());
    let n = n1 + n2;
    check("n1 + n2", n, MAX_UNIMODAL_N)?;
    let (m1, m2) = (p1.max_position(), p2.max_position());
    let parts = [p1.p.clone(), p2.p.clone()];
    let mut out = Vec::new();
    for bits in 0u64..1 << n {
        if bits.count_ones() as usize != n1 {
            continue;
        }
        let j = Subset::from_bits(n, bits).expect("inside [n]");
        let jbar = Subset::full(n).difference(&j);
        if j.to_vec()[m1 - 1] >= jbar.to_vec()[m2 - 1] {
            continue;
        }
        if is_unimodal(&unimodal_sum(&parts, &[j, jbar])?) {
            out.push(j);
        }
    }
    Ok(out)
}

/// The unique `J` with `σ_1 ⊕_J σ_2` unimodal and `Ω(m_1) < Ω̄(m_2)`, for
/// unimodal full cycles with `n_1 + n_2 ≤ 16`. Fails if the scan finds
/// zero or several.
pub fn find_unique_j(s1: &UnimodalPerm, s2: &UnimodalPerm) -> Result<Subset> {
    s1.require_cycle()?;
    s2.require_cycle()?;
    let mut found = unimodal_splits(s1, s2)?;
    if found.len() != 1 {
        return Err(Error::InvariantViolation(format!(
            "{} ⊕ {} has {} admissible index sets",
            s1,
            s2,
            found.len()
        )));
    }
    Ok(found.pop().expect("one element"))
}

/// `σ_1 ⊕ σ_2` with the index set from [`find_unique_j`].
pub fn pair_sum(s1: &UnimodalPerm, s2: &UnimodalPerm) -> Result<UnimodalPerm> {
    let j = find_unique_j(s1, s2)?;
    let jbar = Subset::full(j.universe()).difference(&j);
    UnimodalPerm::new(unimodal_sum(&[s1.p.clone(), s2.p.clone()], &[j, jbar])?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Grade {
    Acute,
    Grave,
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Grade::Acute => "acute",
            Grade::Grave => "grave",
        })
    }
}

/// Acute when `m ≡ n (mod 2)`. The fixed point `[1]` is acute.
pub fn acute_or_grave(s: &UnimodalPerm) -> Result<Grade> {
    s.require_cycle()?;
    Ok(if (s.n() - s.max_position()).is_multiple_of(2) {
        Grade::Acute
    } else {
        Grade::Grave
    })
}

/// `σ_1 <_Δ σ_2`: in `σ_1 ⊕ σ_2` the top index `n_1 + n_2` belongs to the
/// block of `σ_2`.
pub fn delta_less(s1: &UnimodalPerm, s2: &UnimodalPerm) -> Result<bool> {
    let j = find_unique_j(s1, s2)?;
    Ok(!j.contains(j.universe()))
}

/// Maximum of `kσ`: `km` when `σ` is acute, `k(m - 1) + 1` when grave.
pub fn k_fold_max(s: &UnimodalPerm, k: usize) -> Result<usize> {
    Ok(match acute_or_grave(s)? {
        Grade::Acute => k * s.max_position(),
        Grade::Grave => k * (s.max_position() - 1) + 1,
    })
}

fn span_scan(ms: &CycleShapeMultiset, bound: usize) -> Result<Vec<UnimodalPerm>> {
    let n = ms.total_size();
    check("total size", n, bound)?;
    Ok(enumerate_unimodal(n)?
        .into_iter()
        .filter(|p| CycleShapeMultiset::of(p).is_ok_and(|s| s == *ms))
        .collect())
}

/// `kσ`: the only unimodal permutation with exactly `k` cycles, all of
/// shape `σ`. Requires `k·n ≤ 16`; the closed-form maximum is checked.
pub fn k_fold_sum(s: &UnimodalPerm, k: usize) -> Result<UnimodalPerm> {
    let ms = CycleShapeMultiset::new(vec![(s.clone(), k)])?;
    let mut found = span_scan(&ms, MAX_UNIMODAL_N)?;
    if found.len() != 1 {
        return Err(Error::InvariantViolation(format!("{k}·{s} has {} unimodal realisations", found.len())));
    }
    let p = found.pop().expect("one element");
    let want = k_fold_max(s, k)?;
    if p.max_position() != want {
        return Err(Error::InvariantViolation(format!("{k}·{s} peaks at {}, expected {want}", p.max_position())));
    }
    Ok(p)
}

/// Unimodal full cycles with multiplicities, shapes distinct and sorted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CycleShapeMultiset {
    entries: Vec<(UnimodalPerm, usize)>,
}

impl CycleShapeMultiset {
    pub fn new(mut entries: Vec<(UnimodalPerm, usize)>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidArgument("empty shape multiset".into()));
        }
        for (s, a) in &entries {
            s.require_cycle()?;
            if *a == 0 {
                return Err(Error::InvalidArgument(format!("shape {s} has multiplicity 0")));
            }
        }
        entries.sort();
        if entries.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::InvalidArgument("shapes must be distinct".into()));
        }
        Ok(CycleShapeMultiset { entries })
    }

    /// The shapes of the cycles of a unimodal permutation. Every shape is
    /// itself unimodal; a violation is reported as such.
    pub fn of(p: &UnimodalPerm) -> Result<Self> {
        let mut counts: BTreeMap<Permutation, usize> = BTreeMap::new();
        for s in cycle_shapes(&p.p) {
            *counts.entry(s).or_default() += 1;
        }
        let entries = counts
            .into_iter()
            .map(|(s, a)| {
                UnimodalPerm::new(s)
                    .map(|s| (s, a))
                    .map_err(|_| Error::InvariantViolation(format!("{p} has a non-unimodal cycle")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CycleShapeMultiset { entries })
    }

    pub fn entries(&self) -> &[(UnimodalPerm, usize)] {
        &self.entries
    }

    /// Number of distinct shapes, `l`.
    pub fn distinct(&self) -> usize {
        self.entries.len()
    }

    pub fn total_size(&self) -> usize {
        self.entries.iter().map(|(s, a)| s.n() * a).sum()
    }

    /// `m`: the sum over shapes of the maximum of `a_i σ_i`.
    pub fn block_max_sum(&self) -> usize {
        self.entries
            .iter()
            .map(|(s, a)| k_fold_max(s, *a).expect("shapes are cycles"))
            .sum()
    }

    /// `x^{m-l+1} (1+x)^{l-1}`.
    pub fn predicted_maxima_poly(&self) -> IntPolynomial {
        let l = self.distinct();
        &IntPolynomial::monomial(self.block_max_sum() + 1 - l, 1) * &IntPolynomial::one_plus_x_pow(l - 1)
    }
}

impl fmt::Display for CycleShapeMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[")?;
        for (i, (s, a)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}*{s}")?;
        }
        write!(f, "]]")
    }
}

impl Serialize for CycleShapeMultiset {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            shape: &'a UnimodalPerm,
            multiplicity: usize,
        }
        s.collect_seq(self.entries.iter().map(|(shape, multiplicity)| Entry {
            shape,
            multiplicity: *multiplicity,
        }))
    }
}

/// All unimodal permutations whose cycle shapes are exactly `ms`, by
/// scanning `Δ(N)`, `N ≤ 12`.
pub fn span_enumerate(ms: &CycleShapeMultiset) -> Result<Vec<UnimodalPerm>> {
    span_scan(ms, MAX_SPAN_N)
}

/// Every shape multiset of total size `n` realised in `Δ(n)`, with its
/// members.
pub fn spans_of_size(n: usize) -> Result<BTreeMap<CycleShapeMultiset, Vec<UnimodalPerm>>> {
    check("n", n, MAX_SPAN_N)?;
    let mut out: BTreeMap<CycleShapeMultiset, Vec<UnimodalPerm>> = BTreeMap::new();
    for p in enumerate_unimodal(n)? {
        out.entry(CycleShapeMultiset::of(&p)?).or_default().push(p);
    }
    Ok(out)
}

/// Every multiset of unimodal full cycles with total size exactly `n`.
pub fn shape_multisets(n: usize) -> Result<Vec<CycleShapeMultiset>> {
    check("n", n, MAX_SPAN_N)?;
    let shapes: Vec<UnimodalPerm> = (1..=n)
        .map(enumerate_unimodal_cycles)
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    fn rec(
        shapes: &[UnimodalPerm],
        rest: usize,
        cur: &mut Vec<(UnimodalPerm, usize)>,
        out: &mut Vec<CycleShapeMultiset>,
    ) {
        if rest == 0 {
            if !cur.is_empty() {
                out.push(CycleShapeMultiset::new(cur.clone()).expect("distinct cycles"));
            }
            return;
        }
        let Some((s, tail)) = shapes.split_first() else {
            return;
        };
        rec(tail, rest, cur, out);
        for a in 1..=rest / s.n() {
            cur.push((s.clone(), a));
            rec(tail, rest - a * s.n(), cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(&shapes, n, &mut Vec::new(), &mut out);
    out.sort();
    Ok(out)
}
