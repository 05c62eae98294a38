use std::process::{Command, Output};

fn uqplus(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_uqplus")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn roots_text() {
    let o = uqplus(&["roots", "--type", "A", "--rank", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "A2: 3 positive roots, d = [1, 1]\nj = 1 2 1\ni = 2 1 2\n  β_1 = (0,1)\n  β_2 = (1,1)\n  β_3 = (1,0)\nfirst block length 2\n"
    );
}

#[test]
fn pbw_expand_a2() {
    let o = uqplus(&["pbw-expand", "E1 E2", "--type", "A2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "E1 E2 in weight (1,1):\n  (0,1,0) : 1\n  (1,0,1) : q^-1\n");
}

#[test]
fn monomial_json() {
    let o = uqplus(&["monomial", "--type", "A2", "--c", "0,1,0", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["k"], serde_json::json!([1, 1, 0]));
    assert_eq!(v["source"], "closed");
    assert_eq!(v["leading_ok"], true);
}

#[test]
fn canonical_a2() {
    let o = uqplus(&["canonical", "--type", "A2", "--c", "0,1,0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "b_(0,1,0) certified\n  (0,1,0) : 1\n  (1,0,1) : q^-1\n");
}

#[test]
fn verify_exit_codes() {
    assert_eq!(uqplus(&["verify", "words"]).status.code(), Some(0));
    assert_eq!(uqplus(&["verify", "serre", "--type", "B2"]).status.code(), Some(0));
    assert_eq!(uqplus(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(uqplus(&["verify", "dims"]).status.code(), Some(2));
    assert_eq!(uqplus(&["roots", "--type", "Q", "--rank", "2"]).status.code(), Some(2));
    assert_eq!(uqplus(&["monomial", "--type", "A2", "--c", "1,0"]).status.code(), Some(2));
    assert_eq!(uqplus(&["pbw-expand", "E1 E7", "--type", "A2"]).status.code(), Some(2));
    assert_eq!(uqplus(&["pbw-expand", "E1^(9) E2^(9)", "--type", "A2", "--cap", "4"]).status.code(), Some(3));
}

#[test]
fn json_error_shape() {
    let o = uqplus(&["monomial", "--type", "A2", "--c", "x", "--format", "json"]);
    assert_eq!(o.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["exit_code"], 2);
}

#[test]
fn cache_dir_warm_equals_cold() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let args = ["canonical", "--type", "B2", "--weight", "2,2", "--format", "json"];
    let cold = uqplus(&args);
    let mut with_cache = args.to_vec();
    with_cache.extend(["--cache-dir", d]);
    let first = uqplus(&with_cache);
    assert!(dir.path().join("B2.json").exists());
    let warm = uqplus(&with_cache);
    assert_eq!(cold.status.code(), Some(0));
    assert_eq!(stdout(&cold), stdout(&first));
    assert_eq!(stdout(&cold), stdout(&warm));
    std::fs::write(dir.path().join("B2.json"), "garbage").unwrap();
    assert_eq!(stdout(&uqplus(&with_cache)), stdout(&cold));
}

#[test]
fn documented_examples() {
    let o = uqplus(&["roots", "--type", "G", "--rank", "2"]);
    assert!(stdout(&o).contains("\nj = 2 1 2 1 2 1\n"));
    let o = uqplus(&["roots", "--type", "B", "--rank", "9"]);
    assert!(stdout(&o).starts_with("B9: 81 positive roots"));
    let o = uqplus(&["pbw-expand", "E2 E1", "--type", "A2"]);
    assert_eq!(stdout(&o), "E2 E1 in weight (1,1):\n  (1,0,1) : 1\n");
    let o = uqplus(&["pbw-expand", "E1^(2)", "--type", "A2"]);
    assert_eq!(stdout(&o), "E1^(2) in weight (2,0):\n  (0,0,2) : 1\n");
    let o = uqplus(&["canonical", "--type", "B2", "--weight", "1,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).matches("certified").count(), 2);
    let o = uqplus(&["verify", "theorem1", "--type", "B", "--rank", "2", "--max-total", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passed"], true);
}
