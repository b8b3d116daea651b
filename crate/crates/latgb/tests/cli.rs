//! End-to-end tests of the `latgb` binary: output content, file artifacts,
//! and the exit-code contract (0 ok, 1 property failure, 2 parse error,
//! 3 inconsistent lattice, 4 dimension mismatch).

use serde_json::Value;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::sync::atomic::{AtomicU32, Ordering};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

static COUNTER: AtomicU32 = AtomicU32::new(0);

fn temp_path(tag: &str) -> PathBuf {
    let n = COUNTER.fetch_add(1, Ordering::SeqCst);
    std::env::temp_dir().join(format!(
        "latgb-test-{}-{n}-{tag}",
        std::process::id()
    ))
}

fn latgb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_latgb"))
        .args(args)
        .output()
        .expect("spawn latgb")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn analyze_a4_text() {
    let out = latgb(&["analyze", fixture("a4.json").to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("group orders g: [2, 6, 12, 4]"), "{text}");
    assert!(text.contains("projection factors p: [1/2, 1/3, 1/4, 1]"), "{text}");
    assert!(text.contains("[1/12, 1/6, 1/4, 0]"), "{text}");
}

#[test]
fn analyze_a4_json() {
    let out = latgb(&["analyze", fixture("a4.json").to_str().unwrap(), "--json"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["g"], serde_json::json!([2, 6, 12, 4]));
    assert_eq!(v["C_sq"], serde_json::json!(["2", "6", "12", "20"]));
    assert_eq!(v["labels"][1], serde_json::json!([1, 3, 0, 0]));
}

#[test]
fn analyze_d4() {
    let out = latgb(&["analyze", fixture("d4.json").to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("group orders g: [2, 6, 6, 2]"));
}

#[test]
fn analyze_identity_basis() {
    let spec = temp_path("identity.json");
    std::fs::write(&spec, r#"{"basis": [[1, 0], [0, 1]]}"#).unwrap();
    let out = latgb(&["analyze", spec.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("group orders g: [1, 1]"), "{text}");
    assert!(text.contains("[1, 0]") && text.contains("[0, 1]"), "{text}");
    std::fs::remove_file(&spec).ok();
}

#[test]
fn analyze_is_deterministic() {
    let a = latgb(&["analyze", fixture("a4.json").to_str().unwrap(), "--json"]);
    let b = latgb(&["analyze", fixture("a4.json").to_str().unwrap(), "--json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn groebner_a4_files() {
    let table_out = temp_path("a4.table.json");
    let binomials_out = temp_path("a4.ecrgb.txt");
    let out = latgb(&[
        "groebner",
        fixture("a4.json").to_str().unwrap(),
        "--table-out",
        table_out.to_str().unwrap(),
        "--binomials-out",
        binomials_out.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("cosets: 24"), "{text}");

    let binomials = std::fs::read_to_string(&binomials_out).unwrap();
    for line in [
        "x1*x2*x3^2 - x3*x4^3",
        "x3*x4^3 - x1*x2*x3^2",
        "x1*x2*x3^2 - x2^2*x4^2",
        "x2^2*x4^2 - x1*x2*x3^2",
        "x3*x4^3 - x2^2*x4^2",
        "x2^2*x4^2 - x3*x4^3",
    ] {
        assert!(binomials.lines().any(|l| l == line), "missing {line:?}");
    }

    let table: Value = serde_json::from_str(&std::fs::read_to_string(&table_out).unwrap()).unwrap();
    assert_eq!(table["group"], serde_json::json!([2, 6, 12, 4]));
    let records = table["records"].as_array().unwrap();
    assert_eq!(records.len(), 24);
    let rec = records
        .iter()
        .find(|r| r["syndrome"] == serde_json::json!(["5/6", "2/3", "1/2", "0"]))
        .expect("degree-4 coset present");
    assert_eq!(rec["norm"], serde_json::json!(4));
    assert_eq!(rec["leaders"].as_array().unwrap().len(), 3);

    std::fs::remove_file(&table_out).ok();
    std::fs::remove_file(&binomials_out).ok();
}

#[test]
fn groebner_trivial_lattice() {
    let spec = temp_path("trivial.json");
    std::fs::write(&spec, r#"{"basis": [[1, 0], [0, 1]]}"#).unwrap();
    let table_out = temp_path("trivial.table.json");
    let binomials_out = temp_path("trivial.ecrgb.txt");
    let out = latgb(&[
        "groebner",
        spec.to_str().unwrap(),
        "--table-out",
        table_out.to_str().unwrap(),
        "--binomials-out",
        binomials_out.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("binomials: 0"));
    assert_eq!(std::fs::read_to_string(&binomials_out).unwrap(), "");
    for p in [&spec, &table_out, &binomials_out] {
        std::fs::remove_file(p).ok();
    }
}

#[test]
fn decode_a4() {
    let out = latgb(&[
        "decode",
        fixture("a4.json").to_str().unwrap(),
        "--target",
        "5.12,6.3,54,63",
    ]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let candidates = v.as_array().unwrap();
    assert_eq!(candidates.len(), 3);
    let first = &candidates[0];
    let point: Vec<f64> = first["point"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_f64().unwrap())
        .collect();
    for (got, want) in point.iter().zip([4.95, 6.94, 54.27, 62.61]) {
        assert!((got - want).abs() < 0.01);
    }
    assert_eq!(first["label"], serde_json::json!([1, 5, 8, 0]));
}

#[test]
fn decode_d4_single() {
    let out = latgb(&[
        "decode",
        fixture("d4.json").to_str().unwrap(),
        "--target",
        "56.12,46.3,54,63",
    ]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 1);
    assert_eq!(v[0]["provenance"], serde_json::json!("e-prime-smaller"));
}

#[test]
fn decode_rounding_flag() {
    let out = latgb(&[
        "decode",
        fixture("d4.json").to_str().unwrap(),
        "--target",
        "56.12,46.3,54,63",
        "--rounding",
        "half-even",
    ]);
    assert!(out.status.success());
    // No remainder sits on a half-integer here, so the candidate agrees
    // with the default rounding.
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 1);
}

#[test]
fn decode_origin() {
    let out = latgb(&[
        "decode",
        fixture("a4.json").to_str().unwrap(),
        "--target",
        "0,0,0,0",
    ]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 1);
    assert_eq!(v[0]["label"], serde_json::json!([0, 0, 0, 0]));
    assert_eq!(v[0]["l2_to_u"], serde_json::json!(0.0));
}

#[test]
fn decode_dimension_mismatch_exits_4() {
    let out = latgb(&[
        "decode",
        fixture("a4.json").to_str().unwrap(),
        "--target",
        "1.0,2.0",
    ]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn parse_error_exits_2() {
    let spec = temp_path("broken.json");
    std::fs::write(&spec, "{ not json").unwrap();
    let out = latgb(&["analyze", spec.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_file(&spec).ok();
}

#[test]
fn inconsistent_direct_form_exits_3() {
    let spec = temp_path("inconsistent.json");
    std::fs::write(
        &spec,
        r#"{"group": [2], "H": [["1/2"]], "P_sq": ["1/2"], "C_sq": ["3"]}"#,
    )
    .unwrap();
    let out = latgb(&["analyze", spec.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    std::fs::remove_file(&spec).ok();
}

#[test]
fn verify_a4_passes() {
    let out = latgb(&["verify", fixture("a4.json").to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    for name in [
        "coset-leaders",
        "membership",
        "ancestor-closure",
        "reduction-confluence",
    ] {
        assert!(text.contains(&format!("PASS {name}")), "{text}");
    }
}

#[test]
fn verify_corrupted_h_exits_1() {
    // Take the A4 direct form and perturb one entry of H.
    let direct = latgb(&["analyze", fixture("a4.json").to_str().unwrap(), "--json"]);
    assert!(direct.status.success());
    let v: Value = serde_json::from_str(&stdout(&direct)).unwrap();
    let mut h = v["H"].clone();
    h[0][0] = Value::String("1/3".into());
    let spec = serde_json::json!({
        "group": v["g"],
        "H": h,
        "P_sq": v["P_sq"],
        "C_sq": v["C_sq"],
        "labels": v["labels"],
    });
    let path = temp_path("corrupted.json");
    std::fs::write(&path, serde_json::to_string(&spec).unwrap()).unwrap();
    let out = latgb(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("FAIL membership"), "{text}");
    std::fs::remove_file(&path).ok();
}

#[test]
fn verify_respects_group_size_bound() {
    let out = latgb(&[
        "verify",
        fixture("a4.json").to_str().unwrap(),
        "--max-group-size",
        "10",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn groebner_bad_order_exits_2() {
    let out = latgb(&[
        "groebner",
        fixture("a4.json").to_str().unwrap(),
        "--order",
        "1,1,2,3",
    ]);
    assert_eq!(out.status.code(), Some(2));
}
