//! The three commands, each producing a JSON payload.

use serde_json::{json, Value};

use schurkit::cde::{
    self, cde_exists, cde_for_inv_k, cde_for_roots_of_unity, generalized_inv_des_class,
    hook_poly_of_perms, imaj_class, inv_class, is_generalized_pentagonal, pd_poly, roots_of_unity,
    roots_of_unity_verdict, CdeVerdict, DescentClassSpec, Pentagonal, RootsVerdict,
};
use schurkit::ncpl::{enumerate_caterpillars, Caterpillar};
use schurkit::perm::{conjugacy_class, enumerate_sn};
use schurkit::qsym::{hook_coeffs, is_symmetric, qsym_of_set, schur_expand, QSymVector};
use schurkit::verify::{run_suite, CheckOutcome, Limits, Suite};
use schurkit::{Error, IntPolynomial, Permutation, Subset};

use crate::parse::{self, SetSpec};
use crate::CliError;

fn perms_qsym(n: usize, perms: &[Permutation]) -> Result<QSymVector, CliError> {
    Ok(qsym_of_set(n, perms.iter().map(Permutation::des_set))?)
}

/// `(degree, |A|, Q(A))` for a set spec at size `n`.
fn build_set(spec: &SetSpec, n: usize) -> Result<(usize, usize, QSymVector), CliError> {
    if n == 0 {
        return Err(CliError::Usage("n must be positive".into()));
    }
    let perms = match spec {
        SetSpec::Sn => enumerate_sn(n)?,
        SetSpec::Conj(lambda) => {
            if lambda.size() != n {
                return Err(CliError::Usage(format!("{lambda} is not a partition of {n}")));
            }
            conjugacy_class(lambda)?
        }
        SetSpec::InvK(k) => inv_class(*k, n)?,
        SetSpec::ImajK(k) => imaj_class(*k, n)?,
        SetSpec::InvDes(j) => {
            let j = parse::subset(j, n - 1)?;
            generalized_inv_des_class(&DescentClassSpec::single(n, j)?)?
        }
        SetSpec::URoot(d) => roots_of_unity(*d, n)?,
        SetSpec::Caterpillars => {
            let cats = enumerate_caterpillars(n)?;
            let v = qsym_of_set(n - 1, cats.iter().map(Caterpillar::descent_set))?;
            return Ok((n - 1, cats.len(), v));
        }
    };
    Ok((n, perms.len(), perms_qsym(n, &perms)?))
}

pub fn schur_expand_cmd(set: &str, n: usize) -> Result<(Value, Value), CliError> {
    let spec = SetSpec::parse(set)?;
    let (degree, size, v) = build_set(&spec, n)?;
    let params = json!({ "set": set, "n": n });
    let symmetric = is_symmetric(&v);
    let result = match schur_expand(&v) {
        Ok(e) => {
            let terms: Vec<Value> =
                e.coeffs().iter().map(|(shape, c)| json!({ "shape": shape, "coeff": c })).collect();
            json!({
                "degree": degree,
                "set_size": size,
                "symmetric": symmetric,
                "schur_positive": e.is_positive(),
                "expansion": terms,
                "expression": e.to_string(),
                "hook_poly": hook_coeffs(&e),
            })
        }
        Err(Error::NotInSchurSpan) => json!({
            "degree": degree,
            "set_size": size,
            "symmetric": symmetric,
            "schur_positive": false,
            "expansion": Value::Null,
            "expression": Value::Null,
            "hook_poly": Value::Null,
        }),
        Err(e) => return Err(e.into()),
    };
    Ok((params, result))
}

fn verdict_json(v: &CdeVerdict) -> Value {
    match v {
        CdeVerdict::Exists { quotient } => json!({ "exists": true, "quotient": quotient }),
        CdeVerdict::NotDivisible { remainder } => {
            json!({ "exists": false, "remainder": remainder, "why": v.reason() })
        }
        CdeVerdict::NegativeQuotient { quotient } => {
            json!({ "exists": false, "quotient": quotient, "why": v.reason() })
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

#[derive(Default)]
pub struct CdeArgs {
    pub family: String,
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub d: Option<u64>,
    pub i: Option<String>,
    pub j: Option<String>,
    pub lambda: Option<String>,
    pub order: Option<String>,
}

fn required<T: Clone>(v: &Option<T>, flag: &str, family: &str) -> Result<T, CliError> {
    v.clone().ok_or_else(|| CliError::Usage(format!("--family {family} needs {flag}")))
}

pub fn cde_check_cmd(a: &CdeArgs, max_n: usize) -> Result<(Value, Value), CliError> {
    let fam = a.family.as_str();
    let n = required(&a.n, "--n", fam)?;
    if n == 0 {
        return Err(CliError::Usage("n must be positive".into()));
    }
    crate::check_n(n, max_n)?;
    let mut params = json!({ "family": fam, "n": n });
    let result = match fam {
        "invk" | "imajk" => {
            let k = required(&a.k, "--k", fam)?;
            params["k"] = json!(k);
            let verdict = cde_for_inv_k(k, n)?;
            let h = if n <= cde::MAX_CLASS_N {
                let class = if fam == "invk" { inv_class(k, n)? } else { imaj_class(k, n)? };
                hook_poly_of_perms(n, &class)
            } else {
                pd_poly(k)?
            };
            let direct = cde_exists(&h);
            if direct.exists() != verdict {
                return Err(CliError::Failure(format!("k = {k}, n = {n}: criterion and hook polynomial disagree")));
            }
            let reason = match is_generalized_pentagonal(k) {
                Pentagonal::Zero => "k = 0 is the pentagonal number for m = 0".to_string(),
                Pentagonal::Pentagonal { m, sign } => {
                    let s = if sign < 0 { '-' } else { '+' };
                    format!("k = {k} is a generalized pentagonal number, m(3m{s}1)/2 with m = {m}")
                }
                Pentagonal::NotPentagonal => format!("k = {k} is not a generalized pentagonal number"),
            };
            json!({ "verdict": yes_no(verdict), "exists": verdict, "reason": reason, "hook_poly": h, "check": verdict_json(&direct) })
        }
        "uroot" => {
            let d = required(&a.d, "--d", fam)?;
            params["d"] = json!(d);
            let claimed = cde_for_roots_of_unity(d, n)?;
            let h = if n <= cde::MAX_CLASS_N {
                Some(hook_poly_of_perms(n, &roots_of_unity(d, n)?))
            } else {
                None
            };
            let direct = if n <= cde::MAX_CLASS_N { Some(roots_of_unity_verdict(d, n)?) } else { None };
            let (exists, reason, brute) = match &claimed {
                RootsVerdict::Yes => (json!(true), format!("d = {d} is a prime power with gcd(d, n) > 1"), None),
                RootsVerdict::No => (json!(false), "gcd(d, n) = 1".to_string(), None),
                RootsVerdict::Conjectural { brute_force } => (
                    Value::Null,
                    format!("d = {d} is not a prime power and gcd(d, n) > 1; not covered by a proof"),
                    *brute_force,
                ),
            };
            if let (Some(dv), Some(b)) = (&direct, exists.as_bool()) {
                if dv.exists() != b {
                    return Err(CliError::Failure(format!("d = {d}, n = {n}: proved verdict contradicted")));
                }
            }
            json!({
                "verdict": claimed.to_string(),
                "exists": exists,
                "reason": reason,
                "brute_force": brute,
                "hook_poly": h,
                "check": direct.as_ref().map(verdict_json),
            })
        }
        "conj" => {
            let lambda = parse::partition(&required(&a.lambda, "--lambda", fam)?)?;
            if lambda.size() != n {
                return Err(CliError::Usage(format!("{lambda} is not a partition of {n}")));
            }
            params["lambda"] = json!(lambda);
            let claimed = cde::cde_for_conjugacy_class(&lambda);
            let h = hook_poly_of_perms(n, &conjugacy_class(&lambda)?);
            let direct = cde_exists(&h);
            if direct.exists() != claimed {
                return Err(CliError::Failure(format!("{lambda}: criterion and hook polynomial disagree")));
            }
            let reason = if claimed {
                format!("{lambda} is not a rectangle with square-free part")
            } else {
                format!("{lambda} is a rectangle (r^s) with r square-free")
            };
            json!({ "verdict": yes_no(claimed), "exists": claimed, "reason": reason, "hook_poly": h, "check": verdict_json(&direct) })
        }
        "single" | "powerset" | "interval" | "chain" => {
            let universe = n - 1;
            let jset = parse::subset(&required(&a.j, "--J", fam)?, universe)?;
            params["J"] = json!(jset);
            let spec = match fam {
                "single" => DescentClassSpec::single(n, jset)?,
                "powerset" => DescentClassSpec::power_set(n, jset)?,
                _ => {
                    let iset = parse::subset(&required(&a.i, "--I", fam)?, universe)?;
                    params["I"] = json!(iset);
                    if fam == "interval" {
                        DescentClassSpec::interval(n, iset, jset)?
                    } else {
                        let order = a.order.as_deref().map(parse::list).transpose()?;
                        if let Some(o) = &order {
                            params["order"] = json!(o);
                        }
                        DescentClassSpec::chain(n, iset, jset, order)?
                    }
                }
            };
            family_result(&spec)?
        }
        _ => {
            return Err(CliError::Usage(format!(
                "unknown family {fam:?}; expected invk, imajk, uroot, conj, single, powerset, interval or chain"
            )))
        }
    };
    Ok((params, result))
}

fn family_result(spec: &DescentClassSpec) -> Result<Value, CliError> {
    let h = spec.hook_poly();
    let direct = cde_exists(&h);
    let predicted = spec.predicted_cde().unwrap_or(direct.exists());
    if predicted != direct.exists() {
        return Err(CliError::Failure(format!("{spec:?}: predicate and hook polynomial disagree")));
    }
    let members: Vec<Subset> = spec.members();
    let reason = match spec.family_name() {
        "single" => "the hook polynomial is a single monomial x^|J|".to_string(),
        "powerset" => "the hook polynomial is (1+x)^|J|, divisible exactly when J is non-empty".to_string(),
        "interval" => "the hook polynomial is x^|I| (1+x)^(|J|-|I|), divisible exactly when I ≠ J".to_string(),
        _ => "the hook polynomial is x^|I| + … + x^|J|, divisible exactly when |J| - |I| is odd".to_string(),
    };
    Ok(json!({
        "verdict": yes_no(predicted),
        "exists": predicted,
        "reason": reason,
        "members": members,
        "hook_poly": h,
        "check": verdict_json(&direct),
    }))
}

pub fn verify_cmd(suite: &str, limits: Limits) -> Result<(Value, Value, Vec<CheckOutcome>), CliError> {
    let s: Suite = suite.parse().map_err(|e: Error| CliError::Usage(e.to_string()))?;
    let report = run_suite(s, &limits);
    let passed = report.iter().all(|c| c.passed);
    let params = json!({ "suite": suite, "max_n": limits.max_n, "max_k": limits.max_k });
    let result = json!({ "passed": passed, "checks": report });
    Ok((params, result, report))
}

/// Polynomial coefficients from a JSON array, for the table view.
pub fn poly_from(v: &Value) -> Option<IntPolynomial> {
    v.as_array()
        .map(|a| IntPolynomial::new(a.iter().filter_map(Value::as_i64).collect()))
}
