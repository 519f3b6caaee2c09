//! End-to-end tests of the command-line binary: exit codes, file round
//! trips, JSON schema fields, and byte-identical reruns.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_schmidt-lab"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn construct_writes_a_readable_group() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m231.cayley");
    let out = run(&["construct", "--p", "2", "--q", "3", "--v", "1", "--out", path.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    assert!(text.contains("order 12"), "{text}");
    assert!(text.contains("u = 2"), "{text}");
    assert!(text.contains("psi(x) = 1 + 1*x + 1*x^2"), "{text}");
    assert!(text.contains("|Z(G)| = 1"), "{text}");
    assert!(text.contains("|G'| = 4"), "{text}");
    let g = schmidt_lab::cayley::read_group(&path).unwrap();
    assert_eq!(g.order(), 12);
}

#[test]
fn construct_rejects_equal_primes() {
    let out = run(&["construct", "--p", "2", "--q", "2", "--v", "1", "--out", "/tmp/nope.cayley"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("distinct primes"));
}

#[test]
fn construct_json_has_schema_field() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m321.cayley");
    let out = run(&[
        "--format", "json",
        "construct", "--p", "3", "--q", "2", "--v", "1", "--out", path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["schema"], 1);
    assert_eq!(doc["order"], 6);
    assert_eq!(doc["u"], 1);
    assert_eq!(doc["psi"], serde_json::json!([1, 1]));
}

fn write_catalog(dir: &Path, name: &str) -> String {
    let path = dir.join(format!("{name}.cayley"));
    let out = run(&["catalog", "--name", name, "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    path.to_str().unwrap().to_string()
}

#[test]
fn endos_reports_counts() {
    let dir = tempfile::tempdir().unwrap();
    let s3 = write_catalog(dir.path(), "S3");
    let out = run(&["endos", &s3]);
    assert!(out.status.success());
    let text = stdout(&out);
    for needle in ["|End| = 10", "|Aut| = 6", "|I_0| = 3"] {
        assert!(text.contains(needle), "{text}");
    }
    // A4 and C2 counts through JSON
    let a4 = write_catalog(dir.path(), "A4");
    let out = run(&["--format", "json", "endos", &a4]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["end_size"], 33);
    assert_eq!(doc["aut_size"], 24);
    assert_eq!(doc["i0_size"], 4);
    let c2 = write_catalog(dir.path(), "C2");
    let out = run(&["--format", "json", "endos", &c2]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["end_size"], 2);
    assert_eq!(doc["aut_size"], 1);
    assert_eq!(doc["i0_size"], 0);
}

#[test]
fn endos_export_is_consumable() {
    let dir = tempfile::tempdir().unwrap();
    let s3 = write_catalog(dir.path(), "S3");
    let export = dir.path().join("end_s3.json");
    let out = run(&["endos", &s3, "--export", export.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&export).unwrap();
    let doc: schmidt_lab::endo::EndoMonoidExport = serde_json::from_str(&text).unwrap();
    assert_eq!(doc.elements.len(), 10);
    // the export feeds the semigroup layer directly
    let sg = schmidt_lab::semigroup::FiniteSemigroup::from_endo_export(&doc).unwrap();
    assert_eq!(sg.idempotent_count(), 5);
}

#[test]
fn compare_end_json_emits_the_bijection() {
    let dir = tempfile::tempdir().unwrap();
    let a4 = write_catalog(dir.path(), "A4");
    let sl = write_catalog(dir.path(), "SL23");
    let out = run(&["--format", "json", "compare-end", &a4, &sl]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["end_isomorphic"], true);
    assert_eq!(doc["groups_isomorphic"], false);
    assert_eq!(doc["end_isomorphic_groups_nonisomorphic"], true);
    let bijection = doc["end_bijection"].as_array().unwrap();
    assert_eq!(bijection.len(), 33);
}

#[test]
fn endos_rejects_malformed_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.cayley");
    std::fs::write(&path, "2\n0 0\n1 0\n").unwrap();
    let out = run(&["endos", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn check_schmidt_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    // S3 passes (exit 0) and agrees with the oracle
    let s3 = write_catalog(dir.path(), "S3");
    let out = run(&["check-schmidt", &s3]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("characterization: pass"), "{text}");
    assert!(text.contains("agreement: yes"), "{text}");

    // S4 fails (exit 1) but still agrees
    let s4 = write_catalog(dir.path(), "S4");
    let out = run(&["check-schmidt", &s4]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("characterization: fail"));

    // SL23 with explicit parameters passes
    let sl = write_catalog(dir.path(), "SL23");
    let out = run(&["check-schmidt", &sl, "--p", "2", "--q", "3", "--v", "1"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));

    // partial parameters are an input error
    let out = run(&["check-schmidt", &sl, "--p", "2"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn check_schmidt_json_report_schema() {
    let dir = tempfile::tempdir().unwrap();
    let s3 = write_catalog(dir.path(), "S3");
    let out = run(&["--format", "json", "check-schmidt", &s3]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["schema"], 1);
    let report = &doc["characterization"];
    assert_eq!(report["group"]["order"], 6);
    assert_eq!(report["verdict"], true);
    assert_eq!(report["inferred_params"]["p"], 3);
    assert_eq!(report["inferred_params"]["q"], 2);
    assert_eq!(report["inferred_params"]["v"], 1);
    assert_eq!(report["inferred_params"]["inferred"], true);
    let candidates = report["candidates"].as_array().unwrap();
    assert_eq!(candidates.len(), 3);
    for c in candidates {
        assert!(c["x_index"].is_number());
        assert_eq!(c["props"].as_array().unwrap().len(), 8);
        assert!(c["witnesses"].is_array());
    }
    assert_eq!(doc["agree"], true);
}

#[test]
fn compare_end_flags_the_counterexample_pair() {
    let dir = tempfile::tempdir().unwrap();
    let a4 = write_catalog(dir.path(), "A4");
    let sl = write_catalog(dir.path(), "SL23");
    let out = run(&["compare-end", &a4, &sl]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("End isomorphic: yes"), "{text}");
    assert!(text.contains("groups isomorphic: no"), "{text}");
    assert!(text.contains("NOTE"), "{text}");

    let s3 = write_catalog(dir.path(), "S3");
    let out = run(&["compare-end", &s3, &s3]);
    let text = stdout(&out);
    assert!(text.contains("End isomorphic: yes"), "{text}");
    assert!(text.contains("groups isomorphic: yes"), "{text}");

    let c6 = write_catalog(dir.path(), "C6");
    let out = run(&["compare-end", &s3, &c6]);
    let text = stdout(&out);
    assert!(text.contains("End isomorphic: no"), "{text}");
    assert!(text.contains("groups isomorphic: no"), "{text}");
}

#[test]
fn sweep_catalog_flags_a4_sl23() {
    let out = run(&["sweep", "--corpus", "catalog", "--max-order", "24"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("disagreements: 0"), "{text}");
    assert!(
        text.contains(r#"schmidt member A4 (u even): counterexample pair with ["SL23"]"#),
        "{text}"
    );
    assert!(
        text.contains(r#"schmidt member SL23 (u even): counterexample pair with ["A4"]"#),
        "{text}"
    );
    assert!(text.contains("schmidt member S3 (u odd): end-unique in corpus"), "{text}");
}

#[test]
fn sweep_small_catalog_is_quiet() {
    let out = run(&["sweep", "--corpus", "catalog", "--max-order", "12"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("S3 (u odd): end-unique"), "{text}");
    // empty corpus still exits 0
    let out = run(&["sweep", "--corpus", "catalog", "--max-order", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("corpus: 0 groups"));
}

#[test]
fn outputs_are_byte_identical_across_runs_and_thread_counts() {
    let dir = tempfile::tempdir().unwrap();
    let sl = write_catalog(dir.path(), "SL23");
    let a = run(&["--format", "json", "check-schmidt", &sl]);
    let b = run(&["--format", "json", "check-schmidt", &sl]);
    let c = run(&["--threads", "1", "--format", "json", "check-schmidt", &sl]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);

    let s = run(&["sweep", "--max-order", "16"]);
    let t = run(&["--threads", "2", "sweep", "--max-order", "16"]);
    assert_eq!(s.stdout, t.stdout);
}

#[test]
fn catalog_listing_is_stable() {
    let out = run(&["catalog", "--list"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let names: Vec<&str> = text.lines().collect();
    assert_eq!(names.len(), 38);
    for expected in ["C1", "C24", "S3", "D4", "Q8", "D5", "D6", "A4", "Dic3", "S4", "SL23", "C3:C4"] {
        assert!(names.contains(&expected), "missing {expected}");
    }
    assert_eq!(run(&["catalog", "--name", "unknown", "--out", "/tmp/x"]).status.code(), Some(3));
}

#[test]
fn max_order_env_var_overrides_caps() {
    let dir = tempfile::tempdir().unwrap();
    let s4 = write_catalog(dir.path(), "S4");
    let out = bin()
        .args(["endos", &s4])
        .env("SCHMIDT_LAB_MAX_ORDER", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("exceeds cap 10"));
}
