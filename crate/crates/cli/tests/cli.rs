//! End-to-end tests against the compiled binary: output schemas, exit
//! codes, and the determinism contract.

use std::io::Write;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn cassonkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cassonkit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn write_temp(dir: &Path, name: &str, contents: &str) -> String {
    let path = dir.join(name);
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn lens_output_is_byte_exact() {
    let out = cassonkit(&["lens", "--n", "3", "--q", "1"]);
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8_lossy(&out.stdout),
        "{\"lambda_w\":\"-1/12\",\"rho_sum_eighth\":\"-1/12\"}\n"
    );
}

#[test]
fn mubar_output_is_byte_exact() {
    let out = cassonkit(&["seifert", "mubar", "--a", "2,3,5"]);
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8_lossy(&out.stdout),
        "{\"mu_bar\":\"-1\",\"lambda_sw\":\"1\",\"lambda_fo\":\"-1\",\"rohlin\":1}\n"
    );
}

#[test]
fn torus_free_report_fields() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_temp(
        dir.path(),
        "free.json",
        r#"{"type":"free_mapping_torus","ambient_casson":0,"knot":{"name":"trefoil"},"n":2,"q":1}"#,
    );
    let json = stdout_json(&cassonkit(&["torus", "free", "--input", &input]));
    assert_eq!(json["lambda_sw"], "-3/4");
    assert_eq!(json["lambda_fo"], "3/4");
    assert_eq!(json["integral"], false);
    assert_eq!(json["rohlin_mod2"], "n/a");
    assert_eq!(json["breakdown"]["lens_walker_term"], "0");
    assert!(json["warnings"].as_array().is_some_and(|w| !w.is_empty()));
}

#[test]
fn knot_commands_accept_explicit_matrices() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_temp(
        dir.path(),
        "knot.json",
        r#"{"seifert_matrix":[[1,1],[0,-1]]}"#,
    );
    let json = stdout_json(&cassonkit(&["knot", "alexander", "--input", &input]));
    assert_eq!(json["alexander"], "-t + 3 - t^-1");
    assert_eq!(json["second_derivative_at_1"], "-2");

    let json = stdout_json(&cassonkit(&["knot", "signature", "--input", &input, "--at", "1/2"]));
    assert_eq!(json["signature"], "0");
}

#[test]
fn exit_code_validation_failure() {
    let out = cassonkit(&["lens", "--n", "4", "--q", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["code"], "validation");
    assert!(err["error"]["message"]
        .as_str()
        .unwrap()
        .contains("gcd(n, q) = 1"));
    assert!(out.stdout.is_empty());
}

#[test]
fn exit_code_alexander_root() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_temp(dir.path(), "trefoil.json", r#"{"name":"trefoil"}"#);
    let out = cassonkit(&["knot", "signature", "--input", &input, "--at", "1/6"]);
    assert_eq!(out.status.code(), Some(3));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["code"], "alexander_root");

    let out = cassonkit(&["knot", "signature-sum", "--input", &input, "--n", "6"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn exit_code_missing_file() {
    let out = cassonkit(&["knot", "alexander", "--input", "/nonexistent.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn invalid_seifert_matrix_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_temp(dir.path(), "bad.json", r#"{"seifert_matrix":[[1,0],[0,1]]}"#);
    let out = cassonkit(&["knot", "alexander", "--input", &input]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn wrong_torus_type_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_temp(
        dir.path(),
        "branched.json",
        r#"{"type":"branched_mapping_torus","quotient_casson":0,"branch_knot":{"name":"unknot"},"n":3}"#,
    );
    let out = cassonkit(&["torus", "free", "--input", &input]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_small_suite_passes() {
    let out = cassonkit(&["verify", "mubar", "--samples", "10", "--seed", "7"]);
    assert!(out.status.success());
    let json: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["passed"], true);
    assert_eq!(json["reports"][0]["failures"], 0);
}

#[test]
fn verify_rejects_unknown_suite() {
    let out = cassonkit(&["verify", "spectral"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_is_deterministic_across_runs() {
    let runs: Vec<Vec<u8>> = (0..3)
        .map(|_| {
            let out = cassonkit(&["verify", "all", "--samples", "10", "--seed", "0"]);
            assert!(out.status.success());
            out.stdout
        })
        .collect();
    assert_eq!(runs[0], runs[1]);
    assert_eq!(runs[1], runs[2]);
}

#[test]
fn table_format_renders_rows() {
    let out = cassonkit(&["lens", "--n", "5", "--q", "1", "--format", "table"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("lambda_w"));
    assert!(text.contains("-1/2"));
    assert!(!text.contains('{'));
}

#[test]
fn serialized_rationals_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_temp(
        dir.path(),
        "free.json",
        r#"{"type":"free_mapping_torus","ambient_casson":-2,"knot":{"name":"torus(3,5)"},"n":7,"q":3}"#,
    );
    let json = stdout_json(&cassonkit(&["torus", "free", "--input", &input]));
    let sw = cassonkit_parse(json["lambda_sw"].as_str().unwrap());
    let fo = cassonkit_parse(json["lambda_fo"].as_str().unwrap());
    assert_eq!(sw + fo, cassonkit_parse("0"));
    for key in [
        "casson_term",
        "signature_sum_term",
        "alexander_term",
        "lens_walker_term",
        "lens_rho_sum_term",
    ] {
        let s = json["breakdown"][key].as_str().unwrap();
        assert_eq!(
            cassonkit::arith::rational::format_rational(&cassonkit_parse(s)),
            s
        );
    }
}

fn cassonkit_parse(s: &str) -> cassonkit::Rational {
    cassonkit::arith::rational::parse_rational(s).unwrap()
}

#[test]
fn no_floats_in_invariant_fields() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_temp(
        dir.path(),
        "free.json",
        r#"{"type":"free_mapping_torus","ambient_casson":1,"knot":{"name":"figure8"},"n":5,"q":2}"#,
    );
    let json = stdout_json(&cassonkit(&["torus", "free", "--input", &input]));
    fn assert_no_floats(v: &Value, path: &str) {
        match v {
            Value::Number(n) => {
                assert!(
                    !path.starts_with("float_") && n.is_i64() || n.is_u64(),
                    "float value at {path}"
                );
            }
            Value::Array(items) => {
                for (i, item) in items.iter().enumerate() {
                    assert_no_floats(item, &format!("{path}[{i}]"));
                }
            }
            Value::Object(map) => {
                for (k, item) in map {
                    assert_no_floats(item, k);
                }
            }
            _ => {}
        }
    }
    assert_no_floats(&json, "");
}
