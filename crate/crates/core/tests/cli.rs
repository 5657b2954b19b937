//! End-to-end runs of the `sasaki` binary against the shipped manifold files.

use std::path::PathBuf;
use std::process::{Command, Output};

fn manifold(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../manifolds").join(format!("{name}.json"))
}

fn sasaki(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sasaki")).args(args).output().expect("binary runs")
}

fn run_on(cmd: &str, name: &str, extra: &[&str]) -> (i32, String, String) {
    let path = manifold(name);
    let mut args = vec![cmd, path.to_str().unwrap()];
    args.extend_from_slice(extra);
    let out = sasaki(&args);
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn shipped_files_match_builtin_exports() {
    for name in sasaki::builtins::NAMES {
        let on_disk = std::fs::read_to_string(manifold(name)).unwrap();
        assert_eq!(on_disk, sasaki::builtins::document(name).unwrap().to_json(), "{name}");
        let out = sasaki(&["examples", "export", name]);
        assert!(out.status.success());
        assert_eq!(String::from_utf8(out.stdout).unwrap(), on_disk);
    }
}

#[test]
fn validate() {
    let (code, out, _) = run_on("validate", "heisenberg5", &[]);
    assert_eq!(code, 0);
    assert!(out.contains("sasakian: yes"), "{out}");

    let (code, out, _) = run_on("validate", "abelian5", &[]);
    assert_eq!(code, 0);
    assert!(out.contains("contact_metric: no"), "{out}");

    let (code, _, err) = run_on("validate", "broken", &[]);
    assert_eq!(code, 2);
    assert!(err.contains("Jacobi identity fails for (e1, e2, e3)"), "{err}");

    let (code, _, err) = run_on("validate", "missing", &[]);
    assert_eq!(code, 2);
    assert!(err.contains("missing.json"), "{err}");
}

#[test]
fn report_text_and_json() {
    let (code, out, _) = run_on("report", "heisenberg5", &[]);
    assert_eq!(code, 0);
    for needle in ["S(e1,e1) = -2", "r = -4", "λ = 5 + (1/2)(p + 2/5), μ = -5"] {
        assert!(out.contains(needle), "missing {needle}");
    }

    let (code, out, _) = run_on("report", "sphere3", &["--format", "json"]);
    assert_eq!(code, 0);
    let json: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(json["curvature"]["ricci_class"], serde_json::json!({"einstein": {"alpha": "2"}}));

    let (code, out, _) = run_on("report", "abelian5", &[]);
    assert_eq!(code, 0);
    assert!(out.contains("all ∇_{ei} ej = 0") && out.contains("R = 0") && out.contains("r = 0"));
}

#[test]
fn report_is_byte_identical_across_runs() {
    let a = run_on("report", "heisenberg5", &["--format", "json", "--a", "2", "--b", "-1/3"]);
    let b = run_on("report", "heisenberg5", &["--format", "json", "--a", "2", "--b", "-1/3"]);
    assert_eq!(a, b);
}

#[test]
fn soliton() {
    let (code, out, _) = run_on("soliton", "heisenberg5", &["--variant", "star-conformal-eta"]);
    assert_eq!(code, 0);
    assert!(out.contains("unique: λ̃=5, μ=-5; λ+μ = (1/2)(p+2/5): satisfied"), "{out}");

    let (_, out, _) = run_on("soliton", "sphere3", &["--variant", "star-conformal-eta"]);
    assert!(out.contains("unique: λ̃=-1, μ=1"), "{out}");

    let (_, out, _) = run_on("soliton", "abelian5", &["--variant", "ricci"]);
    assert!(out.contains("unique: λ̃=0, μ=0"), "{out}");

    let (code, _, err) = run_on("soliton", "sphere3", &["--variant", "gradient"]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown variant"), "{err}");
}

#[test]
fn check_theorems() {
    let (code, out, _) = run_on("check-theorems", "sphere3", &["--a", "1", "--b", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("Thm 4.1: hypothesis HOLDS, conclusion HOLDS (μ=1)"), "{out}");
    assert!(out.contains("Thm 4.10: hypothesis HOLDS, conclusion HOLDS (μ=1)"), "{out}");

    let (code, out, _) = run_on("check-theorems", "heisenberg5", &["--a", "1", "--b", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("Thm 3.1: hypothesis HOLDS, conclusion HOLDS"), "{out}");
    assert!(out.contains("Thm 3.2: hypothesis FAILS, conclusion n/a"), "{out}");

    let (code, out, _) = run_on("check-theorems", "abelian5", &[]);
    assert_eq!(code, 0);
    let lines: Vec<_> = out.lines().filter(|l| l.starts_with("Thm") || l.starts_with("Cor")).collect();
    assert!(!lines.is_empty());
    assert!(lines.iter().all(|l| l.ends_with("n/a")), "{out}");

    let (code, out, _) = run_on("check-theorems", "sphere3", &["--a", "2", "--b", "-7", "--r-override", "-1"]);
    assert_eq!(code, 0);
    assert!(out.contains("[2n(2n+1)+1]a + 2nb = 0"), "{out}");

    let (code, _, err) = run_on("check-theorems", "sphere3", &["--a", "0"]);
    assert_eq!(code, 2);
    assert!(err.contains("must be nonzero"), "{err}");
    let (code, _, _) = run_on("check-theorems", "sphere3", &["--b", "1/0"]);
    assert_eq!(code, 2);
}

#[test]
fn examples_commands() {
    let out = sasaki(&["examples", "list"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l == "heisenberg5"));

    let out = sasaki(&["examples", "export", "abelian5"]);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["brackets"], serde_json::json!([]));

    let out = sasaki(&["examples", "export", "torus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(sasaki(&[]).status.code(), Some(2));
    assert_eq!(sasaki(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(sasaki(&["--help"]).status.code(), Some(0));
}
