use std::process::Command;

use boolean_kerov::cli::{execute, run, Cli, ResultCache, EXIT_FAILURE, EXIT_OK, EXIT_USAGE};
use clap::Parser;
use serde_json::Value;

fn run_args(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["boolean-kerov", "--no-cache"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn lines(s: &str) -> Vec<&str> {
    s.lines().collect()
}

#[test]
fn observables_examples() {
    let (code, out, _) = run_args(&[
        "observables",
        "--lambda",
        "(2,1)",
        "--kind",
        "boolean",
        "--max-k",
        "4",
        "--format",
        "csv",
    ]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(lines(&out), ["B1,B2,B3,B4", "0,3,0,3"]);
    let (_, out, _) = run_args(&[
        "observables",
        "--lambda",
        "()",
        "--kind",
        "moment",
        "--max-k",
        "3",
        "--format",
        "csv",
    ]);
    assert_eq!(lines(&out)[1], "0,0,0");
    let (_, out, _) = run_args(&[
        "observables",
        "--lambda",
        "(5,3,2,2,1)",
        "--kind",
        "profile",
    ]);
    assert_eq!(out, "minima: -5,-3,0,2,5 | maxima: -4,-2,1,4\n");
    let (_, out, _) = run_args(&[
        "observables",
        "--lambda",
        "2,1",
        "--kind",
        "transition",
        "--format",
        "json",
    ]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["rows"][0]["weight"], "3/8");
    assert_eq!(v["rows"][1]["weight"], "1/4");
}

#[test]
fn parse_errors_are_usage_errors() {
    let (code, _, err) = run_args(&["observables", "--lambda", "(2,x)"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("\"x\""), "{err}");
    let (code, _, _) = run_args(&["expand-boolean", "--max-k", "1"]);
    assert_eq!(code, EXIT_USAGE);
    let (code, _, _) = run_args(&["frobnicate"]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn kerov_boolean_rows() {
    let (code, out, _) = run_args(&["kerov-boolean", "--max-pi-size", "3", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["command"], "kerov-boolean");
    assert_eq!(v["params"]["max-pi-size"], 3);
    let rows = v["rows"].as_array().unwrap();
    let row = |pi: &str| rows.iter().find(|r| r["pi"] == pi).unwrap().clone();
    assert_eq!(row("(1)")["degree"], 0);
    assert_eq!(row("(2)")["iota"], -1);
    assert_eq!(row("(1,1)")["agreement"], true);
    assert_eq!(
        row("(1,1)")["polynomial"],
        serde_json::json!([{"coeff": 1, "vars": [2, 2]}, {"coeff": 1, "vars": [2]}])
    );
    let (_, text, _) = run_args(&["kerov-boolean", "--max-pi-size", "2"]);
    assert!(text
        .lines()
        .any(|l| l.starts_with("(1,1)") && l.contains("x2^2 + x2") && l.ends_with("yes")));
}

#[test]
fn expand_boolean_rows() {
    let (code, out, _) = run_args(&["expand-boolean", "--max-k", "5", "--format", "csv"]);
    assert_eq!(code, EXIT_OK);
    let l = lines(&out);
    assert_eq!(l[0], "k,expansion,support,parity,agreement");
    assert_eq!(l[1], "2,(1): 1,yes,yes,yes");
    assert_eq!(l[2], "3,(2): 1,yes,yes,yes");
    assert_eq!(l[3], "4,\"(3): 1, (1,1): 1\",yes,yes,yes");
    assert_eq!(l[4], "5,\"(4): 1, (2,1): 3, (2): 1\",yes,yes,yes");
}

#[test]
fn latex_tabular() {
    let (_, out, _) = run_args(&["expand-boolean", "--max-k", "4", "--format", "latex"]);
    assert!(out.starts_with("\\begin{tabular}"));
    assert!(out.contains("4 & $\\Sigma_{3} + \\Sigma_{1,1}$ & yes & yes & yes \\\\"));
    assert!(out.trim_end().ends_with("\\end{tabular}"));
}

#[test]
fn verify_quick_passes_and_mutations_fail() {
    let (code, out, _) = run_args(&["verify", "--profile", "quick"]);
    assert_eq!(code, EXIT_OK, "{out}");
    for group in [
        "observables",
        "characters",
        "route-agreement",
        "boolean-kerov-polynomials",
        "boolean-cumulant-expansion",
        "rewriting",
    ] {
        assert!(out.contains(group), "{group} missing from summary");
    }
    let (code, _, err) = run_args(&["verify", "--mutation", "plain-sign"]);
    assert_eq!(code, EXIT_FAILURE);
    assert!(err.contains("FAIL boolean-kerov-polynomials"), "{err}");
    assert!(err.contains("non-negative coefficients"), "{err}");
    let (code, _, _) = run_args(&["verify", "--mutation", "no-curl-dot"]);
    assert_eq!(code, EXIT_FAILURE);
    let (code, _, err) = run_args(&[
        "kerov-boolean",
        "--max-pi-size",
        "2",
        "--mutation",
        "no-curl-dot",
    ]);
    assert_eq!(code, EXIT_FAILURE);
    assert!(err.contains("FAIL P_(2)"), "{err}");
}

#[test]
fn verify_json_lists_every_check() {
    let (code, out, err) = run_args(&["verify", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert!(rows.len() > 100);
    assert!(rows
        .iter()
        .all(|r| r["passed"] == true && r["witness"].is_null()));
    assert!(err.contains("group"), "human summary goes to stderr");
}

#[test]
fn output_is_deterministic() {
    let a = run_args(&["expand-boolean", "--max-k", "6", "--format", "json"]);
    let b = run_args(&["expand-boolean", "--max-k", "6", "--format", "json"]);
    assert_eq!(a, b);
}

#[test]
fn timestamp_is_opt_in() {
    let (_, plain, _) = run_args(&["kerov-boolean", "--max-pi-size", "1", "--format", "json"]);
    assert!(!plain.contains("generated_at_unix"));
    let (_, stamped, _) = run_args(&[
        "kerov-boolean",
        "--max-pi-size",
        "1",
        "--format",
        "json",
        "--timestamp",
    ]);
    assert!(stamped.contains("generated_at_unix"));
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cache = ResultCache::new(dir.path());
    let exec = |args: &[&str], cache: Option<&ResultCache>| {
        let mut argv = vec!["boolean-kerov"];
        argv.extend_from_slice(args);
        let cli = Cli::try_parse_from(argv).unwrap();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = execute(&cli, cache, &mut out, &mut err);
        (code, out)
    };
    for args in [
        &["kerov-boolean", "--max-pi-size", "4", "--format", "json"][..],
        &["expand-boolean", "--max-k", "5", "--format", "csv"][..],
        &["verify", "--format", "text"][..],
    ] {
        let fresh = exec(args, None);
        let first = exec(args, Some(&cache));
        let hit = exec(args, Some(&cache));
        assert_eq!(fresh, first);
        assert_eq!(fresh, hit);
    }
    let entries = std::fs::read_dir(dir.path()).unwrap().count();
    assert_eq!(entries, 1, "one versioned directory");
}

#[test]
fn binary_honours_cache_env_and_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bin = env!("CARGO_BIN_EXE_boolean-kerov");
    let run_bin = |args: &[&str]| {
        Command::new(bin)
            .args(args)
            .env("BK_CACHE_DIR", dir.path())
            .output()
            .unwrap()
    };
    let first = run_bin(&["expand-boolean", "--max-k", "4"]);
    assert_eq!(first.status.code(), Some(0));
    let second = run_bin(&["expand-boolean", "--max-k", "4"]);
    assert_eq!(first.stdout, second.stdout);
    assert!(std::fs::read_dir(dir.path()).unwrap().next().is_some());
    let bad = run_bin(&["observables", "--lambda", "(1,a)"]);
    assert_eq!(bad.status.code(), Some(2));
    let mutated = run_bin(&["verify", "--mutation", "plain-sign"]);
    assert_eq!(mutated.status.code(), Some(1));
}
