mod common;

use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn seifert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_seifert"))
        .args(args)
        .output()
        .unwrap()
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_seifert"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn fixture(name: &str) -> String {
    common::fixture_path(name).to_str().unwrap().to_string()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn invariants_on_basic_fixtures() {
    let out = seifert(&["invariants", &fixture("basic.pd"), "--json"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["schema"], 1);
    let results = v["results"].as_array().unwrap();
    assert_eq!(results.len(), 3);
    assert!(results.iter().all(|r| r["genus_determined"] == true));
    assert_eq!(results[0]["name"], "trefoil");
    assert_eq!(results[0]["breadth"], 2);
}

#[test]
fn empty_file_is_quiet_success() {
    let out = with_stdin(&["invariants", "-"], "");
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
}

#[test]
fn malformed_line_is_reported_and_fails() {
    let input = "trefoil PD: X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)\nbroken PD: X(1,2,3\nunknot PD:\n";
    let out = with_stdin(&["invariants", "-", "--json"], input);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["results"].as_array().unwrap().len(), 2);
    assert_eq!(v["errors"][0]["line"], 2);
    let text = with_stdin(&["invariants", "-"], input);
    assert!(String::from_utf8(text.stdout)
        .unwrap()
        .contains("error: line 2:"));
}

#[test]
fn links_are_errors_for_invariants() {
    let out = with_stdin(&["invariants", "-"], "hopf PD: X(4,1,3,2) X(2,3,1,4)\n");
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_commands() {
    for f in [
        "alternating_3to8.pd",
        "homogeneous.pd",
        "eleven_crossing.pd",
    ] {
        let out = seifert(&["verify", &fixture(f), "--json"]);
        assert!(out.status.success(), "{f}");
        let v = json(&out);
        assert_eq!(v["summary"]["fail"], 0);
        let results = v["results"].as_array().unwrap();
        let status_of = |id: &str| -> Vec<String> {
            results
                .iter()
                .filter(|r| r["theorem"] == id)
                .map(|r| r["status"].as_str().unwrap().to_string())
                .collect()
        };
        match f {
            "alternating_3to8.pd" => {
                assert!(status_of("crowell-murasugi").iter().all(|s| s == "pass"))
            }
            "homogeneous.pd" => assert!(status_of("homogeneous-genus").iter().all(|s| s == "pass")),
            _ => {
                assert!(status_of("crowell-murasugi")
                    .iter()
                    .all(|s| s == "not-applicable"));
                assert!(status_of("homogeneous-genus")
                    .iter()
                    .all(|s| s == "not-applicable"));
                assert_eq!(status_of("genus-gap"), vec!["pass"; 7]);
            }
        }
    }
    let text = String::from_utf8(seifert(&["verify", &fixture("basic.pd")]).stdout).unwrap();
    assert!(
        text.ends_with("summary: pass 14, fail 0, not-applicable 4\n"),
        "{text}"
    );
}

#[test]
fn matrix_analyze_on_singular_matrices() {
    let out = seifert(&[
        "matrix-analyze",
        &fixture("singular_matrices.txt"),
        "--json",
    ]);
    assert!(out.status.success());
    let v = json(&out);
    let results = v["results"].as_array().unwrap();
    assert_eq!(results.len(), 3);
    assert!(results
        .iter()
        .all(|r| r["det"] == 0 && r["breadth_below_size"] == true));
    assert_eq!(results[0]["rank"], 2);
    let bad = with_stdin(&["matrix-analyze", "-"], "ragged: [[1,2],[3]]\n");
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn other_commands_run() {
    for cmd in ["parse", "decompose", "matrix", "oracle"] {
        let out = seifert(&[cmd, &fixture("basic.pd"), "--json"]);
        assert!(out.status.success(), "{cmd}");
        assert_eq!(json(&out)["results"].as_array().unwrap().len(), 3, "{cmd}");
    }
    let oracle = String::from_utf8(seifert(&["oracle", &fixture("basic.pd")]).stdout).unwrap();
    assert!(oracle.contains("figure_eight: 1 - 3*t + t^2"));
}

#[test]
fn selftest_is_deterministic() {
    let a = seifert(&["selftest", "--seed", "7", "--trials", "50"]);
    let b = seifert(&["selftest", "--seed", "7", "--trials", "50"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(String::from_utf8(a.stdout)
        .unwrap()
        .starts_with("selftest seed 7 trials 50\n"));
    let zero = seifert(&["selftest", "--trials", "0"]);
    assert_eq!(zero.status.code(), Some(2));
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    let args = ["matrix", &fixture("rolfsen_3to9.pd"), "--json"];
    assert_eq!(seifert(&args).stdout, seifert(&args).stdout);
}

#[test]
fn missing_file_is_an_error() {
    let out = seifert(&["invariants", "/nonexistent/file.pd"]);
    assert!(!out.status.success());
}
