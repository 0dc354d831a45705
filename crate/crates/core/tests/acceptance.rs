//! The acceptance criteria, each run at its stated size and reported as a
//! PASS/FAIL line. Run with `--nocapture` to see the report.

use std::collections::BTreeMap;
use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use schurkit::cde::{
    cde_exists, generalized_inv_des_class, hook_poly_of_perms, imaj_class, inv_class, is_generalized_pentagonal,
    pd_poly, roots_of_unity, DescentClassSpec, Pentagonal,
};
use schurkit::ncpl::{
    caterpillar_qsym, enumerate_caterpillars, enumerate_factorizations, enumerate_noncrossing_trees,
};
use schurkit::perm::SymmetricGroup;
use schurkit::qsym::{qsym_of_set, schur_expand};
use schurkit::unimodal::{
    brute_delta_count, enumerate_unimodal_cycles, find_unique_j, gannon_count, shape_multisets, span_enumerate,
    unimodal_maxima_poly, UnimodalPerm,
};
use schurkit::{IntPolynomial, Partition, Permutation, Subset};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, budget: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < budget, || format!("took {t:.2?}, budget {budget:?}"))
}

fn c1_caterpillar_count() -> Outcome {
    let start = Instant::now();
    for n in 3..=12 {
        let got = enumerate_caterpillars(n).map_err(|e| e.to_string())?.len();
        ensure(got == n * (1 << (n - 3)), || format!("n = {n}: {got}"))?;
    }
    within(start, Duration::from_secs(1))?;
    Ok(format!("n = 3..=12 in {:.2?}", start.elapsed()))
}

fn c2_caterpillar_schur() -> Outcome {
    let start = Instant::now();
    for n in 3..=7 {
        let e = schur_expand(&caterpillar_qsym(n).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        // Degree n - 1: hooks (n-1-k, 1^k) with weight k + 1.
        let mut want = BTreeMap::new();
        for k in 0..n - 1 {
            want.insert(Partition::hook(n - 1, k).unwrap(), k as i64 + 1);
        }
        ensure(e.coeffs() == &want, || format!("n = {n}: {e}"))?;
    }
    within(start, Duration::from_secs(10))?;
    Ok(format!("n = 3..=7 in {:.2?}", start.elapsed()))
}

fn c3_descents_per_set() -> Outcome {
    for n in 3..=8 {
        let mut counts: BTreeMap<Subset, usize> = BTreeMap::new();
        for c in enumerate_caterpillars(n).unwrap() {
            *counts.entry(c.descent_set()).or_default() += 1;
        }
        for j in Subset::all(n - 2) {
            let got = counts.get(&j).copied().unwrap_or(0);
            ensure(got == j.len() + 1, || format!("n = {n}, J = {j}: {got}"))?;
        }
    }
    Ok("n = 3..=8, every J".into())
}

fn c4_phi_descents() -> Outcome {
    let mut total = 0;
    for n in 3..=8 {
        for c in enumerate_caterpillars(n).unwrap() {
            let phi = c.phi().map_err(|e| e.to_string())?;
            ensure(phi.des_set() == c.descent_set(), || format!("{c}: φ = {phi}"))?;
            total += 1;
        }
    }
    Ok(format!("{total} caterpillars, n = 3..=8"))
}

fn c5_linearity() -> Outcome {
    let mut total = 0;
    for n in 1..=6 {
        for t in enumerate_noncrossing_trees(n).unwrap() {
            ensure(t.is_gy_linear() == t.is_convex_caterpillar_shape(), || format!("{t}"))?;
            total += 1;
        }
    }
    Ok(format!("{total} non-crossing trees, n = 1..=6"))
}

fn c6_hurwitz() -> Outcome {
    for n in 2..=6 {
        let got = enumerate_factorizations(n).unwrap().len();
        ensure(got == n.pow(n as u32 - 2), || format!("n = {n}: {got}"))?;
    }
    Ok("n = 2..=6".into())
}

fn c7_involutions() -> Outcome {
    for n in 2..=7 {
        let inv = roots_of_unity(2, n).unwrap();
        let e = schur_expand(&qsym_of_set(n, inv.iter().map(Permutation::des_set)).unwrap()).unwrap();
        let want: BTreeMap<Partition, i64> = Partition::all(n).into_iter().map(|l| (l, 1)).collect();
        ensure(e.coeffs() == &want, || format!("n = {n}: {e}"))?;
        let exists = cde_exists(&hook_poly_of_perms(n, &inv)).exists();
        ensure(exists == (n % 2 == 0), || format!("n = {n}: extension {exists}"))?;
    }
    Ok("n = 2..=7".into())
}

fn c8_inverse_descent_classes() -> Outcome {
    let mut families = 0;
    for n in 2..=6 {
        for j in Subset::all(n - 1) {
            let class = generalized_inv_des_class(&DescentClassSpec::single(n, j).unwrap()).unwrap();
            let h = hook_poly_of_perms(n, &class);
            ensure(h == IntPolynomial::monomial(j.len(), 1), || format!("n = {n}, J = {j}: {h}"))?;
            ensure(!cde_exists(&h).exists(), || format!("n = {n}, J = {j}: extension"))?;
        }
        for upper in Subset::all(n - 1) {
            for lower in upper.subsets() {
                for spec in [
                    DescentClassSpec::power_set(n, upper).unwrap(),
                    DescentClassSpec::interval(n, lower, upper).unwrap(),
                    DescentClassSpec::chain(n, lower, upper, None).unwrap(),
                ] {
                    let class = generalized_inv_des_class(&spec).unwrap();
                    let brute = cde_exists(&hook_poly_of_perms(n, &class)).exists();
                    ensure(spec.predicted_cde() == Some(brute), || format!("{spec:?}: brute {brute}"))?;
                    families += 1;
                }
            }
        }
    }
    Ok(format!("{families} families, n = 2..=6"))
}

fn c9_pentagonal() -> Outcome {
    for n in 1..=7 {
        for k in 0..n {
            let got = cde_exists(&hook_poly_of_perms(n, &inv_class(k, n).unwrap())).exists();
            let pentagonal = matches!(is_generalized_pentagonal(k), Pentagonal::Zero | Pentagonal::Pentagonal { .. });
            ensure(got == !pentagonal, || format!("n = {n}, k = {k}: extension {got}"))?;
        }
    }
    // Independent Euler product, Π (1 - x^m) truncated at x^40.
    let mut prod = IntPolynomial::one();
    for m in 1..=40 {
        prod = &prod * &(&IntPolynomial::one() - &IntPolynomial::monomial(m, 1));
    }
    for k in 0..=40 {
        let pd = pd_poly(k).unwrap().eval(-1);
        ensure(pd == prod.coeff(k), || format!("k = {k}: Pd_k(-1) = {pd}, product {}", prod.coeff(k)))?;
    }
    Ok("k < n <= 7; Pd_k(-1) for k <= 40".into())
}

fn c10_equidistribution() -> Outcome {
    for n in 1..=6 {
        let all: Vec<Permutation> = SymmetricGroup::new(n).unwrap().collect();
        for k in 0..=n * (n - 1) / 2 {
            let mut a: Vec<Subset> = inv_class(k, n).unwrap().iter().map(Permutation::des_set).collect();
            let mut b: Vec<Subset> = imaj_class(k, n).unwrap().iter().map(Permutation::des_set).collect();
            a.sort();
            b.sort();
            ensure(a == b, || format!("n = {n}, k = {k}"))?;
            let by_hand = all.iter().filter(|p| p.inv_count() == k).count();
            ensure(a.len() == by_hand, || format!("n = {n}, k = {k}: class size"))?;
        }
    }
    Ok("n = 1..=6, all k".into())
}

fn c11_gannon() -> Outcome {
    let start = Instant::now();
    for n in 1..=12 {
        for m in 1..=n {
            let g = gannon_count(n, m).map_err(|e| e.to_string())?;
            let b = brute_delta_count(n, m).unwrap() as i128;
            ensure(g == b, || format!("(n, m) = ({n}, {m}): formula {g}, count {b}"))?;
        }
    }
    within(start, Duration::from_secs(30))?;
    Ok(format!("1 <= m <= n <= 12 in {:.2?}", start.elapsed()))
}

fn c12_roots_of_unity() -> Outcome {
    let u = |d: u64, n: usize| unimodal_maxima_poly(&roots_of_unity(d, n).unwrap());
    for (d, n) in [(3, 3), (3, 6), (5, 5), (2, 4), (2, 6), (7, 7)] {
        let p = u(d, n);
        ensure(cde_exists(&p).exists(), || format!("d = {d}, n = {n}: U = {p} has no extension"))?;
    }
    for (d, n) in [(3, 4), (5, 6), (2, 5)] {
        let p = u(d, n);
        ensure(!cde_exists(&p).exists(), || format!("d = {d}, n = {n}: U = {p} has an extension"))?;
    }
    Ok("6 positive and 3 negative cases".into())
}

fn c13_span_structure() -> Outcome {
    let mut total = 0;
    for n in 1..=10 {
        for ms in shape_multisets(n).unwrap() {
            let members = span_enumerate(&ms).unwrap();
            let l = ms.distinct();
            ensure(members.len() == 1 << (l - 1), || format!("{ms}: {} members", members.len()))?;
            let got = unimodal_maxima_poly(members.iter().map(UnimodalPerm::perm));
            let m = ms.block_max_sum();
            let want = &IntPolynomial::monomial(m + 1 - l, 1) * &IntPolynomial::one_plus_x_pow(l - 1);
            ensure(got == want, || format!("{ms}: U = {got}, expected {want}"))?;
            total += 1;
        }
    }
    Ok(format!("{total} shape multisets, total size <= 10"))
}

fn c14_unique_j() -> Outcome {
    let cycles: Vec<Vec<UnimodalPerm>> = (1..=11).map(|n| enumerate_unimodal_cycles(n).unwrap()).collect();
    let mut pairs = 0;
    for total in 2..=12 {
        for n1 in 1..total {
            for s1 in &cycles[n1 - 1] {
                for s2 in &cycles[total - n1 - 1] {
                    find_unique_j(s1, s2).map_err(|e| e.to_string())?;
                    pairs += 1;
                }
            }
        }
    }
    Ok(format!("{pairs} pairs, total size <= 12"))
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 14] = [
        ("1 caterpillar count", c1_caterpillar_count),
        ("2 caterpillar Schur expansion", c2_caterpillar_schur),
        ("3 descents per set", c3_descents_per_set),
        ("4 phi preserves descents", c4_phi_descents),
        ("5 linearity characterization", c5_linearity),
        ("6 Hurwitz count", c6_hurwitz),
        ("7 involutions", c7_involutions),
        ("8 inverse descent classes", c8_inverse_descent_classes),
        ("9 pentagonal criterion", c9_pentagonal),
        ("10 inv/imaj equidistribution", c10_equidistribution),
        ("11 Gannon formula", c11_gannon),
        ("12 prime-power roots of unity", c12_roots_of_unity),
        ("13 span structure", c13_span_structure),
        ("14 unique J", c14_unique_j),
    ];
    println!();
    let mut failed = Vec::new();
    for (name, f) in criteria {
        let outcome = panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            Err(e.downcast_ref::<String>().cloned().unwrap_or_else(|| "panicked".into()))
        });
        match outcome {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(why) => {
                println!("FAIL {name}: {why}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed: {failed:?}");
}
