//! Bundled identity checks, grouped into suites.
//!
//! Each check sweeps a range of sizes and stops at the first
//! counterexample. Ranges are the smaller of the caller's limits and the
//! bound of the routine being exercised, and the effective range is
//! reported back.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::arith::{binomial, is_prime};
use crate::cde::{
    self, cde_exists, cde_for_conjugacy_class, cde_for_roots_of_unity, conjugacy_classes, euler_product_coeffs,
    franklin_involution, hook_poly_of_perms, imaj_class, inv_class, is_generalized_pentagonal, pd_poly,
    roots_of_unity, roots_of_unity_verdict, DescentClassSpec, Franklin, RootsVerdict,
};
use crate::ncpl::{
    caterpillar_qsym, caterpillar_schur_prediction, enumerate_caterpillars, enumerate_factorizations,
    enumerate_noncrossing_trees, MAX_CATERPILLAR_N, MAX_FACTORIZATION_N,
};
use crate::perm::{enumerate_sn, Partition, Permutation, Subset};
use crate::qsym::{qsym_of_set, schur_expand};
use crate::unimodal::{
    brute_delta_count, enumerate_unimodal, enumerate_unimodal_cycles, find_unique_j, gannon_count, restrict,
    shape_multisets, spans_of_size, unimodal_maxima_poly, UnimodalPerm, MAX_CYCLE_N, MAX_SPAN_N,
};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Caterpillar,
    Qsym,
    Cde,
    Pentagonal,
    Unimodal,
    All,
}

impl Suite {
    /// The concrete suites, in the order `all` runs them.
    pub const EACH: [Suite; 5] = [Suite::Caterpillar, Suite::Qsym, Suite::Cde, Suite::Pentagonal, Suite::Unimodal];
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Caterpillar => "caterpillar",
            Suite::Qsym => "qsym",
            Suite::Cde => "cde",
            Suite::Pentagonal => "pentagonal",
            Suite::Unimodal => "unimodal",
            Suite::All => "all",
        })
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "caterpillar" => Suite::Caterpillar,
            "qsym" => Suite::Qsym,
            "cde" => Suite::Cde,
            "pentagonal" => Suite::Pentagonal,
            "unimodal" => Suite::Unimodal,
            "all" => Suite::All,
            _ => return Err(Error::InvalidArgument(format!("unknown suite {s:?}"))),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Limits {
    pub max_n: usize,
    pub max_k: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_n: 7, max_k: 40 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub suite: Suite,
    pub name: &'static str,
    pub passed: bool,
    /// The range covered on success, the counterexample on failure.
    pub detail: String,
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvariantViolation(msg()))
    }
}

fn range(lo: usize, hi: usize) -> String {
    if lo > hi {
        "nothing in range".into()
    } else {
        format!("n = {lo}..={hi}")
    }
}

type CheckFn = fn(&Limits) -> Result<String>;

fn checks(suite: Suite) -> &'static [(&'static str, CheckFn)] {
    match suite {
        Suite::Caterpillar => &[
            ("caterpillar-count", caterpillar_count),
            ("descents-per-set", descents_per_set),
            ("phi-descents", phi_descents),
            ("linearity-characterization", linearity_characterization),
            ("hurwitz-count", hurwitz_count),
        ],
        Suite::Qsym => &[
            ("caterpillar-schur-expansion", caterpillar_schur),
            ("involutions", involutions),
            ("inv-imaj-equidistribution", equidistribution),
        ],
        Suite::Cde => &[
            ("inverse-descent-classes", inverse_descent_classes),
            ("conjugacy-classes", conjugacy_class_verdicts),
            ("roots-of-unity", roots_of_unity_cases),
        ],
        Suite::Pentagonal => &[
            ("pentagonal-criterion", pentagonal_criterion),
            ("euler-product", euler_product),
            ("franklin-involution", franklin),
        ],
        Suite::Unimodal => &[
            ("gannon-formula", gannon),
            ("prime-cycles-pair-up", prime_cycles),
            ("restriction-is-unimodal", restriction),
            ("span-structure", span_structure),
            ("unique-j", unique_j),
        ],
        Suite::All => &[],
    }
}

/// Runs every check of `suite` (each concrete suite for `All`).
pub fn run_suite(suite: Suite, limits: &Limits) -> Vec<CheckOutcome> {
    let suites: Vec<Suite> = if suite == Suite::All { Suite::EACH.to_vec() } else { vec![suite] };
    let mut out = Vec::new();
    for s in suites {
        for &(name, f) in checks(s) {
            let (passed, detail) = match f(limits) {
                Ok(d) => (true, d),
                Err(e) => (false, e.to_string()),
            };
            out.push(CheckOutcome { suite: s, name, passed, detail });
        }
    }
    out
}

fn caterpillar_count(l: &Limits) -> Result<String> {
    let hi = l.max_n.min(MAX_CATERPILLAR_N);
    for n in 3..=hi {
        let got = enumerate_caterpillars(n)?.len();
        ensure(got == n << (n - 3), || format!("|Ct_{n}| = {got}"))?;
    }
    Ok(range(3, hi))
}

fn descents_per_set(l: &Limits) -> Result<String> {
    let hi = l.max_n.min(9);
    for n in 3..=hi {
        let mut by_set: BTreeMap<Subset, usize> = BTreeMap::new();
        for c in enumerate_caterpillars(n)? {
            *by_set.entry(c.descent_set()).or_default() += 1;
        }
        for j in Subset::all(n - 2) {
            let got = by_set.get(&j).copied().unwrap_or(0);
            ensure(got == j.len() + 1, || format!("n = {n}, J = {j}: {got} caterpillars"))?;
        }
    }
    Ok(range(3, hi))
}

fn phi_descents(l: &Limits) -> Result<String> {
    let hi = l.max_n.min(9);
    for n in 3..=hi {
        for c in enumerate_caterpillars(n)? {
            ensure(c.phi()?.des_set() == c.descent_set(), || format!("Des(φ(c)) ≠ Des(c) for {c}"))?;
        }
    }
    Ok(range(3, hi))
}

fn linearity_characterization(l: &Limits) -> Result<String> {
    let hi = l.max_n.min(8);
    for n in 1..=hi {
        for t in enumerate_noncrossing_trees(n)? {
            ensure(t.is_gy_linear() == t.is_convex_caterpillar_shape(), || {
                format!("{t}: linear {} but caterpillar shape {}", t.is_gy_linear(), t.is_convex_caterpillar_shape())
            })?;
        }
    }
    Ok(range(1, hi))
}

fn hurwitz_count(l: &Limits) -> Result<String> {
    let hi = l.max_n.min(MAX_FACTORIZATION_N);
    for n in 2..=hi {
        let got = enumerate_factorizations(n)?.len();
        ensure(got == n.pow(n as u32 - 2), || format!("|F_{n}| = {got}"))?;
    }
    Ok(range(2, hi))
}

fn caterpillar_schur(l: &Limits) -> Result<String> {
    let hi = l.max_n.min(MAX_CATERPILLAR_N);
    for n in 3..=hi {
        let got = schur_expand(&caterpillar_qsym(n)?)?;
        let want = caterpillar_schur_prediction(n)?;
        ensure(got == want, || format!("n = {n}: {got}"))?;
    }
    Ok(range(3, hi))
}

fn involutions(l: &Limits) -> Result<String> {
    let hi = l.max_n.min(cde::MAX_CLASS_N);
    for n in 2..=hi {
        let inv = roots_of_unity(2, n)?;
        let e = schur_expand(&qsym_of_set(n, inv.iter().map(Permutation::des_set))?)?;
        let all_ones = Partition::all(n).iter().all(|la| e.coeff(la) == 1) && e.coeffs().len() == Partition::all(n).len();
        ensure(all_ones, || format!("n = {n}: {e}"))?;
        let exists = cde_exists(&hook_poly_of_perms(n, &inv)).exists();
        ensure(exists == (n % 2 == 0), || format!("n = {n}: extension {exists}"))?;
    }
    Ok(range(2, hi))
}

fn equidistribution(l: &Limits) -> Result<String> {
    let hi = l.max_n.min(cde::MAX_CLASS_N);
    for n in 1..=hi {
        for k in 0..=n * (n - 1) / 2 {
            let mut a: Vec<Subset> = inv_class(k, n)?.iter().map(Permutation::des_set).collect();
            let mut b: Vec<Subset> = imaj_class(k, n)?.iter().map(Permutation::des_set).collect();
            a.sort();
            b.sort();
            ensure(a == b, || format!("n = {n}, k = {k}"))?;
        }
    }
    Ok(range(1, hi))
}

fn inverse_descent_classes(l: &Limits) -> Result<String> {
    let hi = l.max_n.min(cde::MAX_CLASS_N);
    for n in 2..=hi {
        let mut classes: BTreeMap<Subset, Vec<Permutation>> = BTreeMap::new();
        for p in enumerate_sn(n)? {
            classes.entry(p.inverse().des_set()).or_default().push(p);
        }
        for (j, class) in &classes {
            let h = hook_poly_of_perms(n, class);
            ensure(h == crate::IntPolynomial::monomial(j.len(), 1), || format!("n = {n}, J = {j}: H = {h}"))?;
            ensure(!cde_exists(&h).exists(), || format!("n = {n}, J = {j} has an extension"))?;
        }
        for upper in Subset::all(n - 1) {
            for lower in upper.subsets() {
                let specs = [
                    DescentClassSpec::power_set(n, upper)?,
                    DescentClassSpec::interval(n, lower, upper)?,
                    DescentClassSpec::chain(n, lower, upper, None)?,
                ];
                for spec in specs {
                    let brute = cde_exists(&hook_poly_of_perms(
                        n,
                        spec.members().iter().flat_map(|j| classes.get(j).into_iter().flatten()),
                    ))
                    .exists();
                    ensure(spec.predicted_cde() == Some(brute), || {
                        format!("n = {n}, {} {lower}..{upper}: brute {brute}", spec.family_name())
                    })?;
                }
            }
        }
    }
    Ok(range(2, hi))
}

fn conjugacy_class_verdicts(l: &Limits) -> Result<String> {
    let hi = l.max_n.min(cde::MAX_CLASS_N);
    for n in 1..=hi {
        for (lambda, class) in conjugacy_classes(n)? {
            let brute = cde_exists(&hook_poly_of_perms(n, &class)).exists();
            ensure(brute == cde_for_conjugacy_class(&lambda), || format!("{lambda}: brute {brute}"))?;
        }
    }
    Ok(range(1, hi))
}

fn roots_of_unity_cases(l: &Limits) -> Result<String> {
    let hi = l.max_n.min(cde::MAX_CLASS_N);
    for n in 1..=hi {
        for d in 1..=12u64 {
            let direct = roots_of_unity_verdict(d, n)?.exists();
            let claimed = match cde_for_roots_of_unity(d, n)? {
                RootsVerdict::Yes => true,
                RootsVerdict::No => false,
                RootsVerdict::Conjectural { .. } => continue,
            };
            ensure(direct == claimed, || format!("d = {d}, n = {n}: direct {direct}"))?;
            let u = unimodal_maxima_poly(&roots_of_unity(d, n)?);
            ensure(cde_exists(&u).exists() == direct, || format!("d = {d}, n = {n}: U = {u}"))?;
        }
    }
    Ok(format!("{}, d = 1..=12", range(1, hi)))
}

fn pentagonal_criterion(l: &Limits) -> Result<String> {
    let hi = l.max_n.min(cde::MAX_CLASS_N);
    for n in 1..=hi {
        for k in 0..n {
            let brute = cde_exists(&hook_poly_of_perms(n, &inv_class(k, n)?)).exists();
            let pent = is_generalized_pentagonal(k);
            // k = 0 is the m = 0 pentagonal number.
            let want = !pent.is_pentagonal() && k != 0;
            ensure(brute == want, || format!("n = {n}, k = {k}: brute {brute}"))?;
        }
    }
    Ok(range(1, hi))
}

fn euler_product(l: &Limits) -> Result<String> {
    let hi = l.max_k.min(cde::pentagonal::MAX_K);
    let c = euler_product_coeffs(hi);
    for (k, &a) in c.iter().enumerate() {
        let pd = pd_poly(k)?.eval(-1);
        ensure(pd == a, || format!("k = {k}: Pd_k(-1) = {pd}, product coefficient {a}"))?;
        ensure(is_generalized_pentagonal(k).euler_coefficient() == a, || format!("k = {k}: coefficient {a}"))?;
    }
    Ok(format!("k = 0..={hi}"))
}

fn franklin(l: &Limits) -> Result<String> {
    let hi = l.max_k.min(cde::pentagonal::MAX_K);
    for k in 1..=hi {
        let mut fixed = 0;
        for lambda in cde::distinct_partitions(k)? {
            match franklin_involution(&lambda)? {
                Franklin::Fixed => fixed += 1,
                Franklin::Mapped(mu) => {
                    ensure(mu.len().abs_diff(lambda.len()) == 1, || format!("{lambda} ↦ {mu} keeps the sign"))?;
                    ensure(franklin_involution(&mu)? == Franklin::Mapped(lambda.clone()), || {
                        format!("{lambda} ↦ {mu} is not undone")
                    })?;
                }
            }
        }
        let want = is_generalized_pentagonal(k).is_pentagonal() as usize;
        ensure(fixed == want, || format!("k = {k}: {fixed} fixed points"))?;
    }
    Ok(format!("k = 1..={hi}"))
}

fn gannon(l: &Limits) -> Result<String> {
    let hi = l.max_n.min(MAX_CYCLE_N);
    for n in 1..=hi {
        for m in 1..=n {
            let (g, b) = (gannon_count(n, m)?, brute_delta_count(n, m)?);
            ensure(g == b as i128, || format!("(n, m) = ({n}, {m}): formula {g}, enumeration {b}"))?;
        }
    }
    Ok(range(1, hi))
}

fn prime_cycles(l: &Limits) -> Result<String> {
    let hi = l.max_n.min(MAX_CYCLE_N);
    let mut seen = Vec::new();
    for p in (3..=hi).filter(|&p| is_prime(p as u64)) {
        let mut members: Vec<Permutation> =
            enumerate_unimodal_cycles(p)?.into_iter().map(UnimodalPerm::into_perm).collect();
        for m in 1..p {
            let got = members.iter().filter(|c| crate::unimodal::unimodal_max(c) == m).count() as i128;
            let sign = if m % 2 == 0 { 1 } else { -1 };
            let want = (binomial(p as u64 - 1, m as u64 - 1) + sign) / p as i128;
            ensure(got == want, || format!("p = {p}, m = {m}: {got} cycles"))?;
        }
        members.push(Permutation::identity(p));
        let u = unimodal_maxima_poly(&members);
        ensure(cde_exists(&u).exists(), || format!("p = {p}: U = {u}"))?;
        seen.push(p.to_string());
    }
    Ok(format!("p ∈ {{{}}}", seen.join(", ")))
}

fn restriction(l: &Limits) -> Result<String> {
    let hi = l.max_n.min(10);
    for n in 1..=hi {
        for p in enumerate_unimodal(n)? {
            let cycles = p.perm().cycles();
            for mask in 1u32..1 << cycles.len() {
                let j = Subset::new(
                    n,
                    (0..cycles.len()).filter(|i| mask >> i & 1 == 1).flat_map(|i| cycles[i].iter().copied()),
                )?;
                let r = restrict(p.perm(), &j)?;
                ensure(crate::unimodal::is_unimodal(&r), || format!("{p} on {j} has shape {r}"))?;
            }
        }
    }
    Ok(range(1, hi))
}

fn span_structure(l: &Limits) -> Result<String> {
    let hi = l.max_n.min(MAX_SPAN_N);
    for n in 1..=hi {
        let spans = spans_of_size(n)?;
        let all = shape_multisets(n)?;
        ensure(spans.len() == all.len(), || {
            format!("n = {n}: {} multisets realised out of {}", spans.len(), all.len())
        })?;
        for ms in all {
            let members = spans.get(&ms).map(Vec::as_slice).unwrap_or(&[]);
            ensure(members.len() == 1 << (ms.distinct() - 1), || format!("{ms}: {} members", members.len()))?;
            let u = unimodal_maxima_poly(members.iter().map(UnimodalPerm::perm));
            ensure(u == ms.predicted_maxima_poly(), || format!("{ms}: U = {u}"))?;
        }
    }
    Ok(range(1, hi))
}

fn unique_j(l: &Limits) -> Result<String> {
    let hi = l.max_n.min(MAX_CYCLE_N);
    let cycles: Vec<Vec<UnimodalPerm>> =
        (0..hi).map(|n| if n == 0 { Ok(Vec::new()) } else { enumerate_unimodal_cycles(n) }).collect::<Result<_>>()?;
    let mut pairs = 0usize;
    for total in 2..=hi {
        for n1 in 1..total {
            for s1 in &cycles[n1] {
                for s2 in &cycles[total - n1] {
                    find_unique_j(s1, s2)?;
                    pairs += 1;
                }
            }
        }
    }
    Ok(format!("{pairs} pairs, total size 2..={hi}"))
}
