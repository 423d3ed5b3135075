use std::fs;
use std::path::Path;
use std::process::Command;

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bimonad"))
}

/// Runs the binary in `dir` and returns the exit code and the parsed report.
fn run(dir: &Path, args: &[&str]) -> (i32, Option<Value>) {
    let out = dir.join("report.json");
    let _ = fs::remove_file(&out);
    let status = bin().current_dir(dir).args(args).arg("--out").arg(&out).output().unwrap();
    let report = fs::read(&out).ok().map(|b| serde_json::from_slice(&b).unwrap());
    (status.status.code().unwrap(), report)
}

fn failing(report: &Value) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    for c in report["checks"].as_array().unwrap() {
        if c["status"] == "fail" {
            let n = c.get("check").or_else(|| c.get("diagram")).unwrap().as_str().unwrap().to_string();
            if !out.contains(&n) {
                out.push(n);
            }
        }
    }
    out.sort();
    out
}

fn fixture_dir() -> tempfile::TempDir {
    let dir = tempfile::tempdir().unwrap();
    let st = bin().args(["fixtures", "--dir"]).arg(dir.path()).status().unwrap();
    assert!(st.success());
    dir
}

#[test]
fn manifest_expectations_hold() {
    let dir = fixture_dir();
    let manifest: Value = serde_json::from_slice(&fs::read(dir.path().join("manifest.json")).unwrap()).unwrap();
    for f in manifest["fixtures"].as_array().unwrap() {
        for e in f["expect"].as_array().unwrap() {
            let args: Vec<&str> = e["args"].as_array().unwrap().iter().map(|a| a.as_str().unwrap()).collect();
            let (code, report) = run(dir.path(), &args);
            assert_eq!(code as i64, e["exit"].as_i64().unwrap(), "{args:?}");
            let mut want: Vec<String> =
                e["failing"].as_array().unwrap().iter().map(|x| x.as_str().unwrap().into()).collect();
            want.sort();
            assert_eq!(failing(&report.unwrap()), want, "{args:?}");
        }
    }
}

#[test]
fn broken_counit_report_has_witness() {
    let dir = fixture_dir();
    let (code, report) = run(dir.path(), &["check-bialgebroid", "broken_eps.json"]);
    assert_eq!(code, 1);
    let r = report.unwrap();
    let c = r["checks"].as_array().unwrap().iter().find(|c| c["check"] == "comonoid-counit").unwrap();
    assert_eq!(c["status"], "fail");
    assert!(c.get("witness").is_some());
    assert_eq!(r["schema"], "1");
    assert_eq!(r["inputs"][0]["sha256"].as_str().unwrap().len(), 64);
}

#[test]
fn input_errors_exit_two() {
    let dir = fixture_dir();
    fs::write(dir.path().join("bad.json"), "{\"R\": \"k\",\n  \"A\": [1,\n").unwrap();
    let out = bin().current_dir(dir.path()).args(["check-bialgebroid", "bad.json"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
    fs::write(
        dir.path().join("shape.json"),
        "{\"R\": \"k\", \"A\": \"k\", \"s\": [], \"t\": [], \"comul\": [], \"counit\": []}",
    )
    .unwrap();
    assert_eq!(run(dir.path(), &["check-bialgebroid", "shape.json"]).0, 2);
    assert_eq!(run(dir.path(), &["check-bialgebroid", "missing.json"]).0, 2);
    assert_eq!(run(dir.path(), &["roundtrip", "grp2.json", "--tests", "Z"]).0, 2);
    assert_eq!(run(dir.path(), &["enumerate-set-algebras", "--c", "5", "--a", "4"]).0, 2);
    assert_eq!(run(dir.path(), &["check-bimonad", "sign_plus.json"]).0, 2);
}

#[test]
fn roundtrip_on_selected_tests() {
    let dir = fixture_dir();
    let (code, report) = run(dir.path(), &["roundtrip", "grp2.json", "--tests", "k,A"]);
    assert_eq!(code, 0);
    let r = report.unwrap();
    for name in ["gamma-match", "pi-match", "mu-match", "eta-match"] {
        assert!(r["checks"].as_array().unwrap().iter().any(|c| c["check"] == name), "{name}");
    }
    assert_eq!(run(dir.path(), &["roundtrip", "broken_eps.json"]).0, 1);
}

#[test]
fn extract_reproduces_the_fixture_file() {
    let dir = fixture_dir();
    let d = dir.path();
    for name in ["grp2", "triv_k", "triv_kxk", "triv_kz2"] {
        let pres = format!("p_{name}.json");
        let back = format!("x_{name}.json");
        assert_eq!(run(d, &["to-bimonad", &format!("{name}.json"), "--emit", &pres]).0, 0);
        assert_eq!(run(d, &["extract", &pres, "--emit", &back]).0, 0);
        assert_eq!(fs::read(d.join(format!("{name}.json"))).unwrap(), fs::read(d.join(&back)).unwrap(), "{name}");
    }
}

#[test]
fn extract_rejects_the_broken_counit() {
    let dir = fixture_dir();
    let d = dir.path();
    assert_eq!(run(d, &["to-bimonad", "broken_eps.json", "--emit", "p.json"]).0, 1);
    let (code, report) = run(d, &["extract", "p.json", "--emit", "x.json"]);
    assert_eq!(code, 1);
    assert!(!d.join("x.json").exists());
    assert!(report.unwrap()["checks"][0]["witness"].is_string());
}

#[test]
fn enumeration_lists_two_tables() {
    let dir = fixture_dir();
    let d = dir.path();
    let (code, report) = run(d, &["enumerate-set-algebras", "--c", "2", "--a", "2", "--emit", "list.json"]);
    assert_eq!(code, 0);
    assert_eq!(report.unwrap()["count"], 2);
    let list: Value = serde_json::from_slice(&fs::read(d.join("list.json")).unwrap()).unwrap();
    assert_eq!(list, serde_json::json!([[0, 0, 1, 1], [0, 1, 0, 1]]));
    let (_, r) = run(d, &["enumerate-set-algebras", "--c", "2", "--a", "3", "--up-to-iso"]);
    let all = run(d, &["enumerate-set-algebras", "--c", "2", "--a", "3"]).1.unwrap();
    assert!(r.unwrap()["count"].as_u64() <= all["count"].as_u64());
    assert_eq!(run(d, &["enumerate-set-algebras", "--c", "3", "--a", "3", "--cap", "10"]).0, 2);
}

#[test]
fn set_bimonad_diagrams() {
    let dir = fixture_dir();
    let (code, report) = run(dir.path(), &["check-set-bimonad", "--c", "2", "--sizes", "0,1,2"]);
    assert_eq!(code, 0);
    assert_eq!(report.unwrap()["checks"][0]["diagram"], "gamma-coassoc");
}

#[test]
fn extra_test_objects_are_read_from_files() {
    let dir = fixture_dir();
    let d = dir.path();
    // k as a bimodule over k: E = k acts by 1
    fs::write(d.join("two.json"), r#"{"base": "E", "dim": 2, "action": [[["1", "0"], ["0", "1"]]]}"#).unwrap();
    let (code, report) = run(d, &["check-bimonad", "grp2.json", "--tests", "two.json"]);
    assert_eq!(code, 0);
    let r = report.unwrap();
    assert_eq!(r["options"]["family"], serde_json::json!(["R", "E", "A", "AA", "two.json"]));
    assert_eq!(r["inputs"].as_array().unwrap().len(), 2);
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let dir = fixture_dir();
    let d = dir.path();
    for args in [
        vec!["check-bialgebroid", "broken_eps.json"],
        vec!["check-bimonad", "triv_kxk.json"],
        vec!["roundtrip", "grp2.json"],
        vec!["check-morphism", "sign_minus.json"],
        vec!["em", "grp2.json", "grp2_modules.json"],
        vec!["enumerate-set-algebras", "--c", "2", "--a", "3"],
    ] {
        let mut bytes = Vec::new();
        for i in 0..2 {
            let out = format!("r{i}.json");
            bin().current_dir(d).args(&args).args(["--out", &out]).output().unwrap();
            bytes.push(fs::read(d.join(&out)).unwrap());
        }
        assert_eq!(bytes[0], bytes[1], "{args:?}");
    }
}
