use std::process::Command;

use qmat::cli::{run, EXIT_CHECK_FAILED, EXIT_ERROR};
use serde_json::Value;

fn ok(args: &[&str]) -> String {
    let out = run(std::iter::once("qmat").chain(args.iter().copied()));
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    out.stdout
}

fn error_kind(args: &[&str]) -> String {
    let out = run(std::iter::once("qmat").chain(args.iter().copied()));
    assert_eq!(out.code, EXIT_ERROR, "{args:?}");
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(out.stderr.trim()).unwrap();
    v["error"]["kind"].as_str().unwrap().to_string()
}

#[test]
fn algebraic_commands() {
    assert_eq!(ok(&["det"]).trim(), "X[1,1]*X[2,2] - q*X[1,2]*X[2,1]");
    assert_eq!(ok(&["nf", "X[2,1]*X[1,1]"]).trim(), "q^-1*X[1,1]*X[2,1]");
    assert_eq!(ok(&["nf-mod-i1", "X[1,1]*X[2,2] - q*X[1,2]*X[2,1]"]).trim(), "0");
    assert_eq!(ok(&["theta", "X[1,1]*X[2,2]"]).trim(), "y[1]*y[2]*z[1]*z[2]");
    assert_eq!(ok(&["minor", "--m", "3", "--n", "3", "--rows", "1,3", "--cols", "2,3"]).trim(), "X[1,2]*X[3,3] - q*X[1,3]*X[3,2]");
    assert_eq!(ok(&["--q", "2", "det"]).trim(), "X[1,1]*X[2,2] - 2*X[1,2]*X[2,1]");
    assert_eq!(ok(&["commutator", "1", "1", "2", "2"]), "alpha = q^2\nbeta = q\n");
    let coinv = ok(&["coinv", "y[1]*z[2]"]);
    assert!(coinv.contains("coinvariant: true") && coinv.contains("preimage: X[1,2]"), "{coinv}");
    let json: Value = serde_json::from_str(&ok(&["--format", "json", "coinv", "y[1]*y[2]"])).unwrap();
    assert_eq!(json["coinvariant"], false);
}

#[test]
fn hprime_commands() {
    assert_eq!(ok(&["hprimes", "count"]).trim(), "10");
    let json: Value = serde_json::from_str(&ok(&["--format", "json", "hprimes", "count", "--m", "3", "--n", "4"])).unwrap();
    assert_eq!(json["count"], 106);
    let list = ok(&["hprimes", "list"]);
    assert_eq!(list.lines().count(), 10);
    let dot = ok(&["--format", "dot", "hprimes", "hasse"]);
    assert!(dot.starts_with("digraph hspec {"));
    assert_eq!(dot.matches(" -> ").count(), 16);
    assert!(ok(&["iso-check", "--m", "2", "--n", "3", "--rows", "2", "--cols", "3"]).contains("PASS"));
}

#[test]
fn verify_reports_one_line_per_case() {
    let text = ok(&["verify", "theta-kernel", "--max-degree", "3"]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    assert_eq!(lines[2], "PASS theta-kernel m=2 n=2 d=2 expected=1 got=1");
    for line in ok(&["--format", "json", "verify", "s-basis", "--max-degree", "2"]).lines() {
        let v: Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["pass"], true);
    }
    assert!(ok(&["verify", "lemma33"]).starts_with("PASS commutation"));
}

#[test]
fn errors_are_json_on_stderr() {
    assert_eq!(error_kind(&["nf", "X[1,1"]), "syntax");
    assert_eq!(error_kind(&["nf", "X[3,1]"]), "index_out_of_range");
    assert_eq!(error_kind(&["verify", "pbw", "--m", "5"]), "cap_exceeded");
    assert_eq!(error_kind(&["--format", "dot", "det"]), "invalid_argument");
    assert_eq!(error_kind(&["--q", "0", "det"]), "zero_specialization");
    assert_eq!(error_kind(&["--q", "abc", "det"]), "invalid_scalar");
    assert_eq!(error_kind(&["frobnicate"]), "usage");
    assert_eq!(error_kind(&["iso-check", "--rows", "1,2"]), "invalid_pair");
    assert_ne!(EXIT_CHECK_FAILED, EXIT_ERROR);
}

#[test]
fn binary_output_is_identical_across_thread_counts() {
    let exe = env!("CARGO_BIN_EXE_qmat");
    let outputs: Vec<_> = ["1", "4"]
        .iter()
        .map(|threads| {
            Command::new(exe)
                .args(["--format", "json", "verify", "all", "--m", "2", "--n", "3", "--max-degree", "3"])
                .env("RAYON_NUM_THREADS", threads)
                .output()
                .unwrap()
        })
        .collect();
    for o in &outputs {
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    }
    assert!(!outputs[0].stdout.is_empty());
    assert_eq!(outputs[0].stdout, outputs[1].stdout);
}
