//! End-to-end runs of the binary. JSON output is compared byte for byte
//! against `tests/golden/`; set `SCHURKIT_BLESS=1` to rewrite the files.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schurkit"))
        .args(args)
        .env_remove("SCHURKIT_MAX_N")
        .output()
        .expect("binary runs")
}

fn golden(name: &str, args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.json"));
    if std::env::var_os("SCHURKIT_BLESS").is_some() {
        std::fs::write(&path, &out.stdout).unwrap();
    }
    let want = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
    let got = String::from_utf8(out.stdout).unwrap();
    assert_eq!(got, want, "{name} differs from its golden file");
    serde_json::from_str(&got).unwrap()
}

fn shapes(v: &Value) -> Vec<(Vec<u64>, i64)> {
    v["result"]["expansion"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| {
            let shape = t["shape"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect();
            (shape, t["coeff"].as_i64().unwrap())
        })
        .collect()
}

#[test]
fn caterpillars_weight_hooks() {
    let v = golden("schur_expand_caterpillars_5", &["schur-expand", "--set", "caterpillars", "--n", "5"]);
    let mut terms = shapes(&v);
    terms.sort();
    assert_eq!(
        terms,
        vec![(vec![1, 1, 1, 1], 4), (vec![2, 1, 1], 3), (vec![3, 1], 2), (vec![4], 1)]
    );
    assert_eq!(v["result"]["set_size"], 20);
    assert_eq!(v["result"]["schur_positive"], true);
}

#[test]
fn involutions_hit_every_shape_once() {
    let v = golden("schur_expand_uroot2_4", &["schur-expand", "--set", "uroot:2", "--n", "4"]);
    let terms = shapes(&v);
    assert_eq!(terms.len(), 5);
    assert!(terms.iter().all(|(_, c)| *c == 1));
}

#[test]
fn inverse_descent_class() {
    let v = golden("schur_expand_invdes1_3", &["schur-expand", "--set", "invdes:{1}", "--n", "3"]);
    assert_eq!(shapes(&v), vec![(vec![2, 1], 1)]);
}

#[test]
fn pentagonal_k_has_no_extension() {
    let v = golden("cde_check_invk_5_7", &["cde-check", "--family", "invk", "--k", "5", "--n", "7"]);
    assert_eq!(v["result"]["verdict"], "no");
    assert!(v["result"]["reason"].as_str().unwrap().contains("pentagonal"));
}

#[test]
fn odd_chain_has_extension() {
    let v = golden("cde_check_chain", &["cde-check", "--family", "chain", "--I", "{}", "--J", "{1,2,3}", "--n", "4"]);
    assert_eq!(v["result"]["verdict"], "yes");
    assert_eq!(v["result"]["members"].as_array().unwrap().len(), 4);
}

#[test]
fn order_six_roots_are_conjectural() {
    let v = golden("cde_check_uroot_6_4", &["cde-check", "--family", "uroot", "--d", "6", "--n", "4"]);
    assert_eq!(v["result"]["verdict"], "conjectural");
    assert!(v["result"]["exists"].is_null());
    assert!(v["result"]["brute_force"].is_boolean());
}

#[test]
fn verify_suites_pass() {
    for (name, args) in [
        ("verify_caterpillar_6", &["verify", "--suite", "caterpillar", "--max-n", "6"][..]),
        ("verify_pentagonal_40", &["verify", "--suite", "pentagonal", "--max-k", "40"][..]),
        ("verify_all_6", &["verify", "--suite", "all", "--max-n", "6"][..]),
    ] {
        let v = golden(name, args);
        assert_eq!(v["result"]["passed"], true, "{name}");
        assert!(v.get("elapsed_ms").is_none());
    }
}

#[test]
fn wall_time_goes_to_stderr() {
    let out = run(&["verify", "--suite", "all", "--max-n", "6"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains(" ms"));
    let out = run(&["--timing", "verify", "--suite", "pentagonal"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["elapsed_ms"].is_u64());
}

#[test]
fn output_is_deterministic() {
    let args = ["schur-expand", "--set", "conj:2,2", "--n", "4"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["schur-expand", "--set", "foo", "--n", "3"][..],
        &["schur-expand", "--set", "sn", "--n", "8"][..],
        &["schur-expand", "--set", "conj:3", "--n", "4"][..],
        &["cde-check", "--family", "invk", "--n", "4"][..],
        &["cde-check", "--family", "nope", "--n", "4"][..],
        &["verify", "--suite", "nope"][..],
        &["verify", "--max-k", "1000"][..],
        &["frobnicate"][..],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn bound_can_be_raised() {
    let out = run(&["--max-n", "8", "schur-expand", "--set", "invk:3", "--n", "8"]);
    assert_eq!(out.status.code(), Some(0));
    let out = Command::new(env!("CARGO_BIN_EXE_schurkit"))
        .args(["schur-expand", "--set", "invk:3", "--n", "8"])
        .env("SCHURKIT_MAX_N", "8")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn table_view_renders() {
    let out = run(&["--table", "schur-expand", "--set", "caterpillars", "--n", "4"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("s(2,1)") && text.contains("schur positive"));
}
