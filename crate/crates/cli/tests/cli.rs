use std::process::Command;

use serde_json::Value;

const CUSP: &str = "X0^2*X1 - X2^3 over GF(3)";

fn run(args: &[&str]) -> (i32, Vec<Value>, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_galois-locus"))
        .args(args)
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    let docs = text
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    (out.status.code().unwrap(), docs, text)
}

#[test]
fn check_outer_cusp() {
    let (code, docs, _) = run(&["check", CUSP, "--point", "0:1:1", "--cross-check"]);
    assert_eq!(code, 0);
    let r = &docs[0];
    assert_eq!(r["status"], "galois");
    assert_eq!(r["kind"], "outer");
    assert_eq!(r["group"]["order"], 3);
    assert_eq!(r["config"]["field"], "GF(3)");
    assert_eq!(r["cross_check"]["agrees"], true);
    assert_eq!(r["cross_check"]["linear"]["result"]["found"], 3);
    assert!(r["version"].is_string());
}

#[test]
fn exit_codes() {
    let (code, docs, _) = run(&["check", CUSP, "--point", "0:1:0"]);
    assert_eq!(code, 2);
    assert_eq!(docs[0]["error"]["code"], "singular_point");
    let (code, docs, _) = run(&["check", "X0^2*X1 - X2^ over GF(3)", "--point", "0:1:1"]);
    assert_eq!(code, 1);
    assert_eq!(docs[0]["error"]["code"], "parse");
    let (code, _, _) = run(&["check", CUSP, "--point", "0:1"]);
    assert_eq!(code, 1);
    let (code, docs, _) = run(&["group", CUSP, "--point", "1:2:1"]);
    assert_eq!(code, 2);
    assert_eq!(docs[0]["error"]["code"], "not_galois");
    let out = Command::new(env!("CARGO_BIN_EXE_galois-locus"))
        .args(["check", CUSP, "--bogus"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn field_flag_and_coefficient_vectors() {
    let (code, docs, _) = run(&[
        "check",
        "X0^3*X1 - X2^4",
        "--field",
        "GF(4)",
        "--point",
        "0:1:t",
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        docs[0]["input"]["point"],
        serde_json::json!([[0, 0], [1, 0], [0, 1]])
    );
    assert_eq!(
        docs[0]["group"]["invariant_factors"],
        serde_json::json!([2, 2])
    );
    assert_eq!(docs[0]["config"]["modulus"], serde_json::json!([1, 1, 1]));
}

#[test]
fn classify_reports() {
    let (code, docs, _) = run(&["classify", CUSP]);
    assert_eq!(code, 0);
    assert_eq!(docs[0]["inner"]["found"], true);
    assert_eq!(docs[0]["inner"]["certificate"]["residual"], "0");
    assert_eq!(docs[0]["outer"]["certificate"]["residual"], "0");
    let (_, docs, _) = run(&["classify", "X0^3*X1 + X0^2*X2^2 + X3^4 over GF(2) in P^3"]);
    assert_eq!(docs[0]["inner"]["reason"], "no_vertex");
    assert_eq!(docs[0]["outer"]["found"], true);
    let (_, docs, _) = run(&["classify", "X0^4 + X1^4 + X2^4 + X0*X1*X2^2 over GF(5)"]);
    assert_eq!(docs[0]["inner"]["found"], false);
    assert_eq!(docs[0]["outer"]["found"], false);
    let (_, docs, _) = run(&["classify", CUSP, "--scan", "2"]);
    assert_eq!(docs[0]["scan"]["inner_fraction"], 1.0);
}

#[test]
fn scan_slice_and_group() {
    let (code, docs, _) = run(&["scan", CUSP, "--m", "2"]);
    assert_eq!(code, 0);
    assert_eq!(docs[0]["smooth_points_scanned"], 9);
    assert_eq!(docs[0]["inner_galois"], 9);
    assert_eq!(docs[0]["outer_galois"], 8);
    let (code, docs, _) = run(&[
        "slice",
        "X0^3*X1 - X2^4 over GF(2) in P^3",
        "--point",
        "1:1:1:0",
    ]);
    assert_eq!(code, 0);
    assert_eq!(docs[0]["groups_match"], true);
    let (code, docs, _) = run(&["group", CUSP, "--point", "1:1:1"]);
    assert_eq!(code, 0);
    assert_eq!(docs[0]["table"], serde_json::json!([[0, 1], [1, 0]]));
}

#[test]
fn batch_in_order_and_deterministic() {
    let dir = std::env::temp_dir().join(format!("galois-locus-batch-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("queries.txt");
    std::fs::write(
        &path,
        format!("{CUSP} @ 0:1:1\n# comment\n\nX0^3*X1 - X2^4 over GF(4) @ 1:1:1\n{CUSP} @ 0:1:0\n{CUSP} @ 1:1:1\n"),
    )
    .unwrap();
    let p = path.to_str().unwrap();
    let (code, docs, first) = run(&["check", "--batch", p]);
    assert_eq!(code, 2);
    let statuses: Vec<&str> = docs.iter().map(|d| d["status"].as_str().unwrap()).collect();
    assert_eq!(statuses, ["galois", "galois", "error", "galois"]);
    assert_eq!(docs[1]["group"]["order"], 3);
    let (_, _, second) = run(&["check", "--batch", p]);
    assert_eq!(first, second);
    std::fs::remove_dir_all(&dir).ok();
}
