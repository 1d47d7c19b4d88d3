use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn gamman(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gamman"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

#[test]
fn sign_of_handle() {
    let out = gamman(&["sign", "--n", "2", "a b a^-1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["verdict"], "negative");
    assert_eq!(v["witness"], "a^-1 b^-1");
}

#[test]
fn cmp_dehornoy_like() {
    let out = gamman(&["cmp", "--n", "2", "--order", "dlike", "1", "b^-1"]);
    assert_eq!(json(&out)["result"], "Less");
    let out = gamman(&[
        "cmp",
        "--plain",
        "--n",
        "2",
        "--order",
        "dlike",
        "--conj",
        "b a",
        "1",
        "a^-1 b^-1 a",
    ]);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "Less");
    let out = gamman(&["cmp", "--n", "2", "--order", "ddrev", "1", "a"]);
    assert_eq!(json(&out)["result"], "Greater");
}

#[test]
fn nf_oracle_ctx() {
    let v = json(&gamman(&["nf", "--n", "2", "b^-1"]));
    assert_eq!(
        (v["prefix"].as_str(), v["ell"].as_i64()),
        (Some("a^2 b a^2"), Some(-1))
    );
    let v = json(&gamman(&["oracle", "--n", "2", "b a^2 b a^-1"]));
    assert_eq!(v["identity"], true);
    let v = json(&gamman(&[
        "oracle",
        "--n",
        "3",
        "a^-1 b^-2 a",
        "a^2 b a^2 b",
    ]));
    assert_eq!(v["equal"], true);
    let v = json(&gamman(&["ctx", "--n", "4"]));
    assert_eq!(v["min_poly"], serde_json::json!([-1, -1, 1]));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(gamman(&["sign", "--n", "2", "a c"]).status.code(), Some(2));
    assert_eq!(gamman(&["sign", "--n", "0", "a"]).status.code(), Some(2));
    assert_eq!(gamman(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        gamman(&["cmp", "--n", "2", "--order", "xx", "a", "b"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(gamman(&["--help"]).status.code(), Some(0));
}

#[test]
fn b3_subcommands() {
    let v = json(&gamman(&["b3", "sign", "s1 s2^-3"]));
    assert_eq!(v["d_positive"], true);
    assert_eq!(v["dehornoy_like_positive"], true);
    let out = gamman(&["b3", "bridge", "--plain", "s1 s2"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "a");
}

#[test]
fn converge_from_file() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "b^-1\na\n# comment\na b\na b^2").unwrap();
    let out = gamman(&[
        "converge",
        "--n",
        "2",
        "--kmax",
        "5",
        "--elems",
        f.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["rows"].as_array().unwrap().len(), 4);
    assert_eq!(v["minima_differ_from_b_inverse"], true);
    assert_eq!(
        gamman(&["converge", "--n", "2", "--elems", "/nonexistent/file"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn suites_and_cayley() {
    let out = gamman(&["suite", "--n", "3", "--kind", "identity"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["violations"], serde_json::json!([]));
    assert_eq!(
        gamman(&["suite", "--kind", "gamma-mn", "--max-len", "5"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        gamman(&[
            "suite",
            "--n",
            "2",
            "--kind",
            "closure",
            "--max-len",
            "5",
            "--jobs",
            "2"
        ])
        .status
        .code(),
        Some(0)
    );
    let v = json(&gamman(&["suite", "--n", "2", "--max-len", "0"]));
    assert_eq!(v["counts"], serde_json::json!({"identity": 1}));

    let v = json(&gamman(&[
        "cayley", "--n", "2", "--radius", "1", "--format", "json",
    ]));
    assert_eq!(v["nodes"].as_array().unwrap().len(), 5);
    let dot = gamman(&["cayley", "--n", "1", "--radius", "2"]);
    let text = String::from_utf8(dot.stdout).unwrap();
    assert!(text.starts_with("digraph"));
    assert!(text.contains("fillcolor=black"));
    assert_eq!(
        gamman(&["cayley", "--n", "2", "--radius", "9"])
            .status
            .code(),
        Some(2)
    );
}
