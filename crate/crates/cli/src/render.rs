//! Aligned text for `--table`.

use serde_json::Value;

use crate::commands::poly_from;

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn rows(out: &mut String, rows: &[(String, String)]) {
    let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    for (k, v) in rows {
        out.push_str(&format!("{k:<width$}  {v}\n"));
    }
}

pub fn schur_expand(params: &Value, result: &Value) -> String {
    let mut out = format!("Q({}) at n = {}\n", scalar(&params["set"]), params["n"]);
    let mut head = vec![
        ("degree".to_string(), scalar(&result["degree"])),
        ("set size".to_string(), scalar(&result["set_size"])),
        ("symmetric".to_string(), scalar(&result["symmetric"])),
        ("schur positive".to_string(), scalar(&result["schur_positive"])),
    ];
    if let Some(h) = poly_from(&result["hook_poly"]) {
        head.push(("hook polynomial".to_string(), h.to_string()));
    }
    rows(&mut out, &head);
    if let Some(terms) = result["expansion"].as_array() {
        out.push('\n');
        let body: Vec<(String, String)> = terms
            .iter()
            .rev()
            .map(|t| {
                let shape: Vec<String> = t["shape"].as_array().into_iter().flatten().map(scalar).collect();
                (format!("s({})", shape.join(",")), scalar(&t["coeff"]))
            })
            .collect();
        rows(&mut out, &body);
    }
    out
}

pub fn cde_check(params: &Value, result: &Value) -> String {
    let mut body: Vec<(String, String)> = params
        .as_object()
        .into_iter()
        .flatten()
        .map(|(k, v)| (k.clone(), scalar(v)))
        .collect();
    body.push(("verdict".into(), scalar(&result["verdict"])));
    body.push(("reason".into(), scalar(&result["reason"])));
    if let Some(h) = poly_from(&result["hook_poly"]) {
        body.push(("hook polynomial".into(), h.to_string()));
    }
    if let Some(b) = result.get("brute_force").filter(|b| !b.is_null()) {
        body.push(("brute force".into(), scalar(b)));
    }
    let mut out = String::new();
    rows(&mut out, &body);
    out
}

pub fn verify(result: &Value, elapsed_ms: Option<u128>) -> String {
    let checks = result["checks"].as_array().cloned().unwrap_or_default();
    let w_suite = checks.iter().map(|c| scalar(&c["suite"]).len()).max().unwrap_or(0);
    let w_name = checks.iter().map(|c| scalar(&c["name"]).len()).max().unwrap_or(0);
    let mut out = String::new();
    for c in &checks {
        let status = if c["passed"].as_bool() == Some(true) { "PASS" } else { "FAIL" };
        out.push_str(&format!(
            "{status}  {:<w_suite$}  {:<w_name$}  {}\n",
            scalar(&c["suite"]),
            scalar(&c["name"]),
            scalar(&c["detail"])
        ));
    }
    let failed = checks.iter().filter(|c| c["passed"].as_bool() != Some(true)).count();
    out.push_str(&format!("{} checks, {failed} failed", checks.len()));
    if let Some(ms) = elapsed_ms {
        out.push_str(&format!(", {ms} ms"));
    }
    out.push('\n');
    out
}
