#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(format!("{name}.json"))
}

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// Runs `invar --json <args> <fixture>` and returns (exit code, stdout).
pub fn run_json(args: &[&str], name: &str) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_invar"))
        .arg("--json")
        .args(args)
        .arg(fixture(name))
        .env("INVAR_THREADS", "2")
        .output()
        .expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).expect("utf8 output"))
}

const FINITE: [&str; 8] =
    ["d8", "c2-swap", "s3-natural", "c3-scalar", "c4-scalar", "c5-scalar", "pm-identity", "trivial"];
const ALGEBRAIC: [&str; 4] = ["gm", "sl2-binary-quadratic", "c2-variety", "trivial-algebraic"];

/// Every (fixture, arguments) pair covered by golden files.
pub fn cases() -> Vec<(&'static str, Vec<&'static str>)> {
    let mut v = Vec::new();
    for f in FINITE {
        v.push((f, vec!["generators", "--verify"]));
        v.push((f, vec!["separating", "--verify-samples", "20"]));
        v.push((f, vec!["analyze", "molien", "--degree", "12"]));
        v.push((f, vec!["analyze", "classify"]));
        v.push((f, vec!["analyze", "primary"]));
        v.push((f, vec!["analyze", "bounds"]));
    }
    for f in ["c2-swap", "c3-scalar", "c4-scalar", "c5-scalar", "pm-identity", "trivial"] {
        v.push((f, vec!["separating", "--method", "reduce", "--verify-samples", "20"]));
    }
    for f in ALGEBRAIC {
        v.push((f, vec!["generators", "--algorithm", "derksen", "--verify"]));
        v.push((f, vec!["field"]));
        v.push((f, vec!["derksen-ideal"]));
        v.push((f, vec!["separating-variety"]));
    }
    v.push(("c2-swap-gf2", vec!["generators"]));
    v.push(("c2-swap-gf2", vec!["analyze", "classify"]));
    v.push(("c2-swap-gf2", vec!["analyze", "molien", "--degree", "4"]));
    v
}

pub fn golden_name(fixture: &str, args: &[&str]) -> String {
    let tail: Vec<&str> = args.iter().copied().filter(|a| !a.starts_with("--") && a.parse::<u64>().is_err()).collect();
    format!("{fixture}__{}.json", tail.join("-"))
}
