use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name);
    p.to_str().unwrap().to_owned()
}

fn galois(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_galois"))
        .args(args)
        .env_remove("GALOIS_BUDGET")
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn validate_fixture_algebras() {
    for f in ["drastic.json", "idempotent-b.json"] {
        let out = galois(&["validate", &fixture(f)]);
        assert_eq!(code(&out), 0, "{}", stdout(&out));
    }
}

#[test]
fn validate_flipped_residuum() {
    let text = std::fs::read_to_string(fixture("drastic.json")).unwrap();
    let flipped = text.replacen(r#"["b", "1", "1", "1"]"#, r#"["1", "1", "1", "1"]"#, 1);
    assert_ne!(text, flipped);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("flipped.json");
    std::fs::write(&path, flipped).unwrap();

    let out = galois(&["validate", path.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    let s = stdout(&out);
    assert!(s.contains("adjointness    FAIL"), "{s}");
    assert!(s.contains("a⊗1 = a ≰ 0 but 1 ≤ a→0 = 1"), "{s}");
}

#[test]
fn validate_malformed() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, "{\"elements\": [").unwrap();
    assert_eq!(code(&galois(&["validate", path.to_str().unwrap()])), 2);
    assert_eq!(code(&galois(&["validate", "/nonexistent/file.json"])), 2);
}

#[test]
fn validate_needs_params_for_hedges() {
    let dir = tempfile::tempdir().unwrap();
    let hedge = dir.path().join("hedge.json");
    std::fs::write(&hedge, r#"{"star": {"a": "0", "b": "0"}}"#).unwrap();
    let hedge = hedge.to_str().unwrap();
    assert_eq!(code(&galois(&["validate", hedge])), 2);
    let out = galois(&["validate", hedge, "--params", &fixture("star-shift.params.json")]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
}

#[test]
fn fd_closure() {
    let out = galois(&[
        "closure",
        "--params",
        &fixture("fd.params.json"),
        "--theory",
        &fixture("fd.theory.json"),
        "--element",
        r#"["x"]"#,
        "--oracle",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "{x,y,z}");
}

#[test]
fn empty_theory_echoes_element() {
    let out = galois(&[
        "closure",
        "--params",
        &fixture("fd.params.json"),
        "--element",
        r#"["y"]"#,
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "{y}");
}

#[test]
fn semantic_closure_from_context() {
    let out = galois(&[
        "closure",
        "--params",
        &fixture("fd.params.json"),
        "--semantic",
        "--model",
        &fixture("fd.context.json"),
        "--element",
        r#"["y"]"#,
        "--oracle",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "{y,z}");
}

#[test]
fn temporal_closures() {
    let params = fixture("temporal.params.json");
    let out = galois(&[
        "closure",
        "--params",
        &params,
        "--theory",
        &fixture("temporal-step.theory.json"),
        "--element",
        r#"[["y",3]]"#,
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), r#"[["y",3],["z",3]]"#);

    let out = galois(&[
        "closure",
        "--params",
        &params,
        "--theory",
        &fixture("temporal-growth.theory.json"),
        "--element",
        r#"[["y",0]]"#,
        "--budget",
        "1000",
    ]);
    assert_eq!(code(&out), 3);
    assert!(stdout(&out).contains("unbounded"));
}

#[test]
fn budget_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_galois"))
        .args([
            "closure",
            "--params",
            &fixture("temporal.params.json"),
            "--theory",
            &fixture("temporal-growth.theory.json"),
            "--element",
            r#"[["y",0]]"#,
            "--json",
        ])
        .env("GALOIS_BUDGET", "8")
        .output()
        .unwrap();
    assert_eq!(code(&out), 3);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["unbounded"].as_str().unwrap().contains("8 firings"));
}

#[test]
fn prove_and_verify() {
    let dir = tempfile::tempdir().unwrap();
    let proof = dir.path().join("proof.json");
    let params = fixture("fd.params.json");
    let theory = fixture("fd.theory.json");
    let out = galois(&[
        "prove",
        "--params",
        &params,
        "--theory",
        &theory,
        "--implication",
        r#"{"lhs":["x"],"rhs":["z"]}"#,
        "--emit-proof",
        proof.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&proof).unwrap()).unwrap();
    assert_eq!(doc["steps"].as_array().unwrap().len(), 3);

    let out = galois(&[
        "verify-proof",
        "--params",
        &params,
        "--theory",
        &theory,
        "--proof",
        proof.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));

    let mut doc = doc;
    doc["steps"][1]["index"] = serde_json::json!(0);
    std::fs::write(&proof, doc.to_string()).unwrap();
    let out = galois(&[
        "verify-proof",
        "--params",
        &params,
        "--theory",
        &theory,
        "--proof",
        proof.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("step 1"));
}

#[test]
fn prove_verdicts() {
    let params = fixture("fd.params.json");
    let theory = fixture("fd.theory.json");
    let prove = |imp: &str| {
        code(&galois(&[
            "prove",
            "--params",
            &params,
            "--theory",
            &theory,
            "--implication",
            imp,
        ]))
    };
    assert_eq!(prove(r#"{"lhs":["y"],"rhs":["x"]}"#), 1);
    assert_eq!(prove(r#"{"lhs":["x","y"],"rhs":["x","y"]}"#), 0);
    assert_eq!(prove(r#"{"lhs":["w"],"rhs":["x"]}"#), 2);
}

#[test]
fn entailment() {
    let params = fixture("fd.params.json");
    let entails = |model: &str, imp: &str| {
        code(&galois(&[
            "entails",
            "--params",
            &params,
            "--model",
            &fixture(model),
            "--implication",
            imp,
        ]))
    };
    assert_eq!(entails("fd.model.json", r#"{"lhs":["x"],"rhs":["z"]}"#), 0);
    assert_eq!(entails("fd.model.json", r#"{"lhs":["z"],"rhs":["y"]}"#), 1);
    assert_eq!(entails("fd.context.json", r#"{"lhs":["y"],"rhs":["z"]}"#), 0);

    let t = fixture("temporal.params.json");
    let out = galois(&[
        "entails",
        "--params",
        &t,
        "--model",
        &fixture("temporal.context.json"),
        "--implication",
        r#"{"lhs":[["y",0]],"rhs":[["z",0]]}"#,
    ]);
    assert_eq!(code(&out), 0);
}

#[test]
fn check_operator_star_shift() {
    let out = galois(&[
        "check-operator",
        "--params",
        &fixture("star-shift.params.json"),
        "--operator",
        &fixture("zero-or-top.operator.json"),
        "--hedge",
    ]);
    assert_eq!(code(&out), 1);
    let s = stdout(&out);
    for row in ["cl:ext ", "cl:*mon ", "cl:idm "] {
        let line = s.lines().find(|l| l.starts_with(row)).unwrap();
        assert!(line.ends_with("pass"), "{line}");
    }
    let shf = s.lines().find(|l| l.starts_with("cl:*shf")).unwrap();
    assert!(
        shf.contains("FAIL  C({y^b}) = {y^1} ⊈ {y^b} = a*→C({y^0})"),
        "{shf}"
    );
    let idm = s.lines().find(|l| l.starts_with("S:idm")).unwrap();
    assert!(idm.contains("FAIL"), "{idm}");
}

#[test]
fn check_operator_chain() {
    let params = fixture("chain3.params.json");
    let out = galois(&[
        "check-operator",
        "--params",
        &params,
        "--operator",
        &fixture("identity.operator.json"),
    ]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));

    let out = galois(&[
        "check-operator",
        "--params",
        &params,
        "--operator",
        &fixture("non-idempotent.operator.json"),
        "--json",
    ]);
    assert_eq!(code(&out), 1);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let row = |name: &str| {
        v["checks"]
            .as_array()
            .unwrap()
            .iter()
            .find(|r| r["check"] == name)
            .unwrap()["pass"]
            .as_bool()
            .unwrap()
    };
    assert!(!row("S:ord_idm"));
    assert!(row("S:mon_alt"));
    assert!(row("S:ext"));

    let out = galois(&[
        "check-operator",
        "--params",
        &params,
        "--operator",
        &fixture("identity.operator.json"),
        "--hedge",
    ]);
    assert_eq!(code(&out), 2);
}

#[test]
fn check_system() {
    let params = fixture("fd.params.json");
    let out = galois(&[
        "check-system",
        "--params",
        &params,
        "--system",
        &fixture("fd.system.json"),
    ]);
    assert_eq!(code(&out), 0);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sys.json");
    std::fs::write(&path, r#"{"fixpoints": [["x"], ["y"], ["x","y","z"]]}"#).unwrap();
    let out = galois(&[
        "check-system",
        "--params",
        &params,
        "--system",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("{x} ∧ {y} = {} is missing"));
}

#[test]
fn monoid_of_lukasiewicz_filter() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("params.json");
    std::fs::write(
        &path,
        r#"{
          "residuated": {
            "elements": ["0", "0.5", "1"],
            "order": [["0", "0.5"], ["0.5", "1"]],
            "otimes": [["0","0","0"], ["0","0","0.5"], ["0","0.5","1"]],
            "to": [["1","1","1"], ["0.5","1","1"], ["0","0.5","1"]]
          },
          "universe": ["y"],
          "filter": {"members": ["0.5", "1"]}
        }"#,
    )
    .unwrap();
    let out = galois(&["monoid", "--params", path.to_str().unwrap(), "--json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["given"], 2);
    assert_eq!(v["closed"], false);
    assert_eq!(v["size"], 3);
    let new: Vec<&serde_json::Value> = v["members"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|m| m["given"] == false)
        .collect();
    assert_eq!(new.len(), 1);
    assert!(new[0]["lower"]
        .as_object()
        .unwrap()
        .values()
        .all(|x| x == &serde_json::json!({})));

    let out = galois(&["monoid", "--params", path.to_str().unwrap(), "--limit", "2"]);
    assert_eq!(code(&out), 3);
}

#[test]
fn usage_errors() {
    assert_eq!(code(&galois(&[])), 2);
    assert_eq!(code(&galois(&["closure", "--params", "x.json"])), 2);
    assert_eq!(code(&galois(&["--help"])), 0);
}
