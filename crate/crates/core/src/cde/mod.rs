//! Existence of cyclic descent extensions, decided through hook
//! polynomials: a Schur-positive set `A` has one exactly when `1 + x`
//! divides `H_A(x)` with a non-negative quotient.

pub mod pentagonal;

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::arith;
use crate::perm::{self, Partition, Permutation, Subset, SymmetricGroup};
use crate::poly::IntPolynomial;
use crate::{Error, Result};

pub use pentagonal::{
    distinct_partitions, euler_product_coeffs, franklin_involution, is_generalized_pentagonal, pd_poly, Franklin,
    Pentagonal,
};

/// Largest `n` for which permutation classes are listed.
pub const MAX_CLASS_N: usize = 8;

fn class_group(n: usize) -> Result<SymmetricGroup> {
    SymmetricGroup::with_bound(n, MAX_CLASS_N)
}

/// `Σ_k h_k x^k` where `h_k` counts the sets equal to `{n-k, …, n-1}`.
pub fn hook_poly_of_set<I: IntoIterator<Item = Subset>>(n: usize, sets: I) -> IntPolynomial {
    IntPolynomial::from_counts(
        sets.into_iter()
            .filter(|d| d.universe() + 1 == n && *d == Subset::suffix(n - 1, d.len()))
            .map(|d| d.len()),
    )
}

/// Hook polynomial of a list of permutations under `Des`.
pub fn hook_poly_of_perms<'a, I: IntoIterator<Item = &'a Permutation>>(n: usize, perms: I) -> IntPolynomial {
    hook_poly_of_set(n, perms.into_iter().map(Permutation::des_set))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CdeVerdict {
    /// `H = (1 + x) q` with `q ≥ 0`.
    Exists { quotient: IntPolynomial },
    /// `H(-1) ≠ 0`.
    NotDivisible { remainder: i64 },
    /// Divisible, but the quotient has a negative coefficient.
    NegativeQuotient { quotient: IntPolynomial },
}

impl CdeVerdict {
    pub fn exists(&self) -> bool {
        matches!(self, CdeVerdict::Exists { .. })
    }

    pub fn reason(&self) -> Option<String> {
        match self {
            CdeVerdict::Exists { .. } => None,
            CdeVerdict::NotDivisible { remainder } => Some(format!("not divisible by 1+x: H(-1) = {remainder}")),
            CdeVerdict::NegativeQuotient { quotient } => Some(format!("quotient {quotient} has a negative coefficient")),
        }
    }
}

/// Decide existence from the hook polynomial.
pub fn cde_exists(h: &IntPolynomial) -> CdeVerdict {
    let (q, r) = h.div_rem_one_plus_x();
    if r != 0 {
        CdeVerdict::NotDivisible { remainder: r }
    } else if !q.is_nonnegative() {
        CdeVerdict::NegativeQuotient { quotient: q }
    } else {
        CdeVerdict::Exists { quotient: q }
    }
}

/// Families `𝒥` of subsets of `[n-1]` for `D^{-1}_{𝒥,n}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Family {
    Single { j: Subset },
    /// All subsets of `j`.
    PowerSet { j: Subset },
    /// `{K : lower ⊆ K ⊆ upper}`.
    Interval { lower: Subset, upper: Subset },
    /// A saturated chain from `lower` to `upper`, adding the elements of
    /// `upper ∖ lower` in the listed order.
    Chain { lower: Subset, upper: Subset, order: Vec<usize> },
    Explicit { sets: Vec<Subset> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DescentClassSpec {
    n: usize,
    family: Family,
}

impl DescentClassSpec {
    fn check(n: usize, s: &Subset) -> Result<()> {
        if n == 0 || s.universe() + 1 != n {
            return Err(Error::InvalidSubset(format!("{s:?} is not a subset of [{}]", n.saturating_sub(1))));
        }
        Ok(())
    }

    pub fn single(n: usize, j: Subset) -> Result<Self> {
        Self::check(n, &j)?;
        Ok(DescentClassSpec { n, family: Family::Single { j } })
    }

    pub fn power_set(n: usize, j: Subset) -> Result<Self> {
        Self::check(n, &j)?;
        Ok(DescentClassSpec { n, family: Family::PowerSet { j } })
    }

    pub fn interval(n: usize, lower: Subset, upper: Subset) -> Result<Self> {
        Self::check(n, &lower)?;
        Self::check(n, &upper)?;
        if !lower.is_subset_of(&upper) {
            return Err(Error::InvalidArgument(format!("interval needs {lower} ⊆ {upper}")));
        }
        Ok(DescentClassSpec {
            n,
            family: Family::Interval { lower, upper },
        })
    }

    /// A saturated chain; `order` lists `upper ∖ lower` in the order added,
    /// and defaults to increasing.
    pub fn chain(n: usize, lower: Subset, upper: Subset, order: Option<Vec<usize>>) -> Result<Self> {
        Self::check(n, &lower)?;
        Self::check(n, &upper)?;
        if !lower.is_subset_of(&upper) {
            return Err(Error::InvalidArgument(format!("chain needs {lower} ⊆ {upper}")));
        }
        let gap = upper.difference(&lower).to_vec();
        let order = order.unwrap_or_else(|| gap.clone());
        let mut sorted = order.clone();
        sorted.sort_unstable();
        if sorted != gap {
            return Err(Error::InvalidArgument(format!(
                "chain order {order:?} is not an ordering of {:?}, so the chain is not saturated",
                gap
            )));
        }
        Ok(DescentClassSpec {
            n,
            family: Family::Chain { lower, upper, order },
        })
    }

    pub fn explicit(n: usize, sets: Vec<Subset>) -> Result<Self> {
        for s in &sets {
            Self::check(n, s)?;
        }
        let sets: Vec<Subset> = sets.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        Ok(DescentClassSpec {
            n,
            family: Family::Explicit { sets },
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn family_name(&self) -> &'static str {
        match self.family {
            Family::Single { .. } => "single",
            Family::PowerSet { .. } => "powerset",
            Family::Interval { .. } => "interval",
            Family::Chain { .. } => "chain",
            Family::Explicit { .. } => "explicit",
        }
    }

    /// The sets in `𝒥`, sorted.
    pub fn members(&self) -> Vec<Subset> {
        let mut out = match &self.family {
            Family::Single { j } => vec![*j],
            Family::PowerSet { j } => j.subsets(),
            Family::Interval { lower, upper } => upper
                .difference(lower)
                .subsets()
                .into_iter()
                .map(|s| s.union(lower))
                .collect(),
            Family::Chain { lower, order, .. } => {
                let mut cur = *lower;
                let mut v = vec![cur];
                for &x in order {
                    cur.insert(x);
                    v.push(cur);
                }
                v
            }
            Family::Explicit { sets } => sets.clone(),
        };
        out.sort();
        out
    }

    /// `Σ_k j_k x^k` with `j_k = #{J ∈ 𝒥 : |J| = k}`.
    pub fn hook_poly(&self) -> IntPolynomial {
        IntPolynomial::from_counts(self.members().iter().map(Subset::len))
    }

    /// The closed form for the structured families.
    pub fn closed_form_hook_poly(&self) -> IntPolynomial {
        match &self.family {
            Family::Single { j } => IntPolynomial::monomial(j.len(), 1),
            Family::PowerSet { j } => IntPolynomial::one_plus_x_pow(j.len()),
            Family::Interval { lower, upper } => &IntPolynomial::monomial(lower.len(), 1)
                * &IntPolynomial::one_plus_x_pow(upper.len() - lower.len()),
            Family::Chain { lower, upper, .. } => {
                IntPolynomial::new((0..=upper.len()).map(|k| (k >= lower.len()) as i64).collect())
            }
            Family::Explicit { .. } => self.hook_poly(),
        }
    }

    /// The predicate proved for each structured family; `None` for
    /// explicit lists, which are decided from the hook polynomial alone.
    pub fn predicted_cde(&self) -> Option<bool> {
        match &self.family {
            Family::Single { .. } => Some(false),
            Family::PowerSet { j } => Some(!j.is_empty()),
            Family::Interval { lower, upper } => Some(lower != upper),
            Family::Chain { lower, upper, .. } => Some((upper.len() - lower.len()) % 2 == 1),
            Family::Explicit { .. } => None,
        }
    }
}

/// `D^{-1}_{𝒥,n} = {π ∈ S_n : Des(π^{-1}) ∈ 𝒥}`, for `n ≤ 8`.
pub fn generalized_inv_des_class(spec: &DescentClassSpec) -> Result<Vec<Permutation>> {
    let members: BTreeSet<Subset> = spec.members().into_iter().collect();
    Ok(class_group(spec.n)?
        .filter(|p| members.contains(&p.inverse().des_set()))
        .collect())
}

/// `{π ∈ S_n : inv(π) = k}`.
pub fn inv_class(k: usize, n: usize) -> Result<Vec<Permutation>> {
    Ok(class_group(n)?.filter(|p| p.inv_count() == k).collect())
}

/// `{π ∈ S_n : imaj(π) = k}`.
pub fn imaj_class(k: usize, n: usize) -> Result<Vec<Permutation>> {
    Ok(class_group(n)?.filter(|p| p.imaj() == k).collect())
}

/// `{π ∈ S_n : π^d = e}`: the classes with `lcm(λ) | d`.
pub fn roots_of_unity(d: u64, n: usize) -> Result<Vec<Permutation>> {
    if d == 0 {
        return Err(Error::InvalidArgument("order d must be positive".into()));
    }
    Ok(class_group(n)?.filter(|p| d.is_multiple_of(p.order())).collect())
}

/// A conjugacy class has an extension unless it is `(r^s)` with `r`
/// square-free.
pub fn cde_for_conjugacy_class(lambda: &Partition) -> bool {
    !lambda.is_rect_squarefree()
}

/// Verdict for `inv_k(S_n)`, `k < n`: an extension exists exactly when `k`
/// is not a generalized pentagonal number. Cross-checked against the
/// hook polynomial `Pd_k`.
pub fn cde_for_inv_k(k: usize, n: usize) -> Result<bool> {
    if k >= n {
        return Err(Error::InvalidArgument(format!(
            "k = {k} must be below n = {n}; larger k is not covered"
        )));
    }
    let predicted = match is_generalized_pentagonal(k) {
        Pentagonal::Zero => false,
        p => !p.is_pentagonal(),
    };
    let from_poly = cde_exists(&pd_poly(k)?).exists();
    if predicted != from_poly {
        return Err(Error::InvariantViolation(format!(
            "k = {k}: pentagonal test says {predicted}, Pd_k says {from_poly}"
        )));
    }
    Ok(predicted)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootsVerdict {
    /// `d` is a prime power sharing a factor with `n`.
    Yes,
    /// `gcd(d, n) = 1`.
    No,
    /// Neither case is settled; carries the computed answer for `n ≤ 8`.
    Conjectural { brute_force: Option<bool> },
}

impl fmt::Display for RootsVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootsVerdict::Yes => write!(f, "yes"),
            RootsVerdict::No => write!(f, "no"),
            RootsVerdict::Conjectural { .. } => write!(f, "conjectural"),
        }
    }
}

/// Direct computation for `{π ∈ S_n : π^d = e}`, `n ≤ 8`.
pub fn roots_of_unity_verdict(d: u64, n: usize) -> Result<CdeVerdict> {
    let roots = roots_of_unity(d, n)?;
    Ok(cde_exists(&hook_poly_of_perms(n, &roots)))
}

pub fn cde_for_roots_of_unity(d: u64, n: usize) -> Result<RootsVerdict> {
    if d == 0 || n == 0 {
        return Err(Error::InvalidArgument("d and n must be positive".into()));
    }
    let g = arith::gcd(d, n as u64);
    if g == 1 {
        return Ok(RootsVerdict::No);
    }
    if arith::is_prime_power(d) {
        return Ok(RootsVerdict::Yes);
    }
    let brute_force = if n <= MAX_CLASS_N {
        Some(roots_of_unity_verdict(d, n)?.exists())
    } else {
        None
    };
    Ok(RootsVerdict::Conjectural { brute_force })
}

/// All of `S_n` by cycle type, for callers that sweep conjugacy classes.
pub fn conjugacy_classes(n: usize) -> Result<Vec<(Partition, Vec<Permutation>)>> {
    let mut out: Vec<(Partition, Vec<Permutation>)> =
        Partition::all(n).into_iter().map(|l| (l, Vec::new())).collect();
    for p in perm::SymmetricGroup::with_bound(n, MAX_CLASS_N)? {
        let t = p.cycle_type();
        out.iter_mut().find(|(l, _)| *l == t).expect("every cycle type is a partition").1.push(p);
    }
    Ok(out)
}
