use std::process::{Command, Output};

use rmatrix_core::belavindrinfeld::r_cg;
use rmatrix_core::lie::json::two_from_json;
use rmatrix_core::lie::TwoTensor;
use rmatrix_core::yangbaxter::{classify, schouten};
use rmatrix_core::Rational;
use serde_json::Value;

fn rmatrix(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rmatrix")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn construct_text_one_three() {
    let o = rmatrix(&["construct", "cg", "--i", "1", "--n", "3", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for part in ["2*e_12^e_32", "1*e_12^e_21", "1*e_13^e_31", "1*e_23^e_32", "1/3*e_11^e_22"] {
        assert!(text.contains(part), "missing {part} in {text}");
    }
}

#[test]
fn construct_rejects_non_coprime() {
    let o = rmatrix(&["construct", "cg", "--i", "2", "--n", "4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("i and n must be coprime"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [&["bogus"][..], &["construct", "cg", "--i", "2"], &["phi", "--i", "2", "--n", "4"], &["verify-all", "--max-n", "x"]] {
        let o = rmatrix(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
    let o = rmatrix(&["construct", "cg", "--i", "1", "--n", "3", "--colour", "red"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--colour"));
}

#[test]
fn file_round_trip_matches_in_process() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let p = path.to_str().unwrap();
    let o = rmatrix(&["construct", "cg", "--i", "2", "--n", "5", "--out", p]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["v"], 1);
    let back: TwoTensor<Rational> = two_from_json(&v).unwrap();
    let r = r_cg(2, 5).unwrap();
    assert_eq!(back, r);

    let o = rmatrix(&["schouten", "--in", p, "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["class"], classify(&r).tag.to_string());
    let bracket = rmatrix_core::lie::json::three_from_json::<Rational>(&v["schouten"]).unwrap();
    assert_eq!(bracket, schouten(&r));

    let o = rmatrix(&["classify", "--in", p]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["class"], "MCYBE");
    assert_eq!(v["carrier_equals_parabolic"], Value::Null);
}

#[test]
fn boundary_solution_classifies_with_parabolic_carrier() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("b.json");
    let p = path.to_str().unwrap();
    assert_eq!(rmatrix(&["construct", "b", "--i", "3", "--n", "7", "--out", p]).status.code(), Some(0));
    let o = rmatrix(&["classify", "--in", p, "--i", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["class"], "CYBE");
    assert_eq!(v["carrier_equals_parabolic"], true);
    assert_eq!(v["carrier_dim"], 7 * 7 - 1 - 3 * 4);
}

#[test]
fn verify_subprime_passes() {
    let o = rmatrix(&["verify-subprime", "--i", "3", "--n", "7", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let checks = v["checks"].as_object().unwrap();
    for name in ["phi_identity", "b_cybe", "carrier", "schouten_family", "g_r_split", "Vi_alpha0"] {
        assert_eq!(checks[name], true, "{name}");
    }
    let o = rmatrix(&["verify-subprime", "--i", "5", "--n", "12"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_512_and_sweep() {
    let o = rmatrix(&["verify-512", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["checks"].as_object().unwrap().len(), 10);
    assert_eq!(v["module_dim"], 65);
    let o = rmatrix(&["verify-all", "--max-n", "12"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn frobenius_and_phi() {
    let o = rmatrix(&["frobenius", "--i", "5", "--n", "12"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("frobenius: false"));
    let o = rmatrix(&["frobenius", "--i", "2", "--n", "5", "--format", "json", "--r-f"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["frobenius"], true);
    assert!(v["r_f"]["terms"].as_array().is_some_and(|t| !t.is_empty()));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("f.json");
    let p = path.to_str().unwrap();
    let o = rmatrix(&["construct", "functional", "--i", "2", "--n", "5", "--rho", "2", "--mu", "3", "--out", p]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(rmatrix(&["frobenius", "--i", "2", "--n", "5", "--functional", p]).status.code(), Some(0));

    let o = rmatrix(&["phi", "--i", "3", "--n", "7", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["rows"][2][0], "1*t^26");
    assert_eq!(v["rows"][0][3], "-2*t^-2");
}
