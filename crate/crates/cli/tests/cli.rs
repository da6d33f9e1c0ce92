use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn jlb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jlb"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write_doc(dir: &tempfile::TempDir, name: &str, body: &str) -> String {
    let p = dir.path().join(name);
    fs::write(&p, body).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn verify_passes_on_a_table_row() {
    let doc = data("iii_v_i.json");
    let o = jlb(&["verify", doc.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("PASS"));
    assert!(stdout(&o).contains("X0 = -X2 - X3, phi0 = -2 X~1"));
}

#[test]
fn verify_fails_when_cocycles_are_not_orthogonal() {
    let doc = data("a1_not_orthogonal.json");
    let o = jlb(&["verify", doc.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("orthogonality  FAIL"));
    let o = jlb(&["verify", "--json", doc.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passed"], false);
    let failed: Vec<&str> = v["conditions"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["passed"] == false)
        .map(|c| c["condition"].as_str().unwrap())
        .collect();
    assert!(failed.contains(&"orthogonality"));
}

#[test]
fn text_and_json_verdicts_agree() {
    for name in ["iii_v_i.json", "a1_not_orthogonal.json"] {
        let doc = data(name);
        let text = jlb(&["verify", doc.to_str().unwrap()]);
        let json = jlb(&["verify", "--json", doc.to_str().unwrap()]);
        assert_eq!(text.status.code(), json.status.code());
        let v: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
        assert_eq!(v["passed"].as_bool().unwrap(), stdout(&text).ends_with("PASS\n"));
    }
}

#[test]
fn malformed_documents_exit_with_usage_status() {
    let dir = tempfile::tempdir().unwrap();
    let broken = write_doc(&dir, "broken.json", "{\n  \"dim\": 2,\n  \"alpha\": [\n");
    let o = jlb(&["verify", &broken]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line"));
    let bad_field = write_doc(
        &dir,
        "bad.json",
        r#"{"alpha":["0","0"],"beta":["0","1/0"],"dim":2,"g":{"name":"A2"},"gstar":[]}"#,
    );
    let o = jlb(&["verify", &bad_field]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("beta[1]"));
    let o = jlb(&["verify", "/no/such/file.json"]);
    assert_eq!(o.status.code(), Some(2));
    let o = jlb(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn equiv_finds_a_witness_over_a1() {
    let dir = tempfile::tempdir().unwrap();
    let doc = |a: [&str; 2]| {
        format!(
            r#"{{"alpha":["{}","{}"],"beta":["0","0"],"dim":2,"g":{{"name":"A1"}},"gstar":[]}}"#,
            a[0], a[1]
        )
    };
    let d1 = write_doc(&dir, "one.json", &doc(["1", "0"]));
    let d2 = write_doc(&dir, "two.json", &doc(["0", "2"]));
    let o = jlb(&["equiv", &d1, &d2]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).starts_with("equivalent, witness A ="));
    let o = jlb(&["equiv", "--json", &d1, &d2]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["status"], "equivalent");
}

#[test]
fn equiv_keeps_the_a2_family_apart() {
    let dir = tempfile::tempdir().unwrap();
    let row = |a: &str, m: &str| {
        format!(
            r#"{{"alpha":["{m}","0"],"beta":["0","{a}"],"dim":2,"g":{{"name":"A2"}},
                "gstar":[{{"i":1,"j":2,"k":2,"value":"1"}}]}}"#
        )
    };
    let d1 = write_doc(&dir, "one.json", &row("1", "-1"));
    let d2 = write_doc(&dir, "two.json", &row("2", "-2"));
    let o = jlb(&["equiv", &d1, &d1]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = jlb(&["equiv", "--json", &d1, &d2]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    // every automorphism of A2 fixes the second component of phi0
    assert_eq!(v["status"], "unknown");
    assert_eq!(o.status.code(), Some(1));
    let other_g = write_doc(
        &dir,
        "a1.json",
        r#"{"alpha":["0","0"],"beta":["0","0"],"dim":2,"g":{"name":"A1"},"gstar":[]}"#,
    );
    let o = jlb(&["equiv", &d1, &other_g]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn identify_reports_the_catalog_algebra() {
    let doc = data("iii_v_i.json");
    let o = jlb(&["identify", doc.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("isomorphic to V"));
    let o = jlb(&["identify", "--json", doc.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["algebra"], "V");
    assert_eq!(v["c"].as_array().unwrap().len(), 3);
}

#[test]
fn verify_tables_reports_row_counts() {
    let o = jlb(&["verify-tables", "--table", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).trim_end().ends_with("2/2 rows pass"));
    let o = jlb(&["verify-tables", "--table", "6", "--samples", "1", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert!(v["rows"].as_array().unwrap().iter().all(|r| r["samples"].as_array().unwrap().len() <= 1));
    let o = jlb(&["verify-tables", "--table", "9"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn classify_lists_rows() {
    let o = jlb(&["classify", "--dim", "2", "--algebra", "A2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("A2 / A2.i"));
    assert!(out.contains("X0 = -s X1, phi0 = s X~2"));
    let o = jlb(&["classify", "--dim", "3", "--algebra", "III"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn catalog_lists_by_dimension() {
    let o = jlb(&["catalog", "--dim", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("A2 (dim 2)"));
    assert!(!out.contains("III"));
}
