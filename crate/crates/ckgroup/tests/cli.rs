use std::process::Command;

use ckgroup::spec_json::SpecDto;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("ckgroup").chain(args.iter().copied());
    let code = ckgroup::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

const GALILEI_0: &str = r#"{"n":3,"sigma":[1,2,3],"j":["nil","nil"]}"#;
const GALILEI: &str = r#"{"n":3,"sigma":[2,1,3],"j":["nil","nil"]}"#;

#[test]
fn describe_names_the_group() {
    let (code, out, _) = run(&["describe", "--spec", GALILEI]);
    assert_eq!(code, 0);
    assert!(out.contains("label: G_v(2)"), "{out}");
    assert!(out.contains("J = ι2"), "{out}");
    assert!(out.contains("pattern:"));
}

#[test]
fn describe_json_round_trips_the_spec() {
    let (code, out, _) = run(&["--format", "json", "describe", "--spec", GALILEI]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let dto: SpecDto = serde_json::from_value(v["spec"].clone()).unwrap();
    let back = dto.to_spec().unwrap();
    let original = ckgroup::spec_json::load_spec(GALILEI).unwrap();
    assert_eq!(back, original);
    assert_eq!(v["matrix"].as_array().unwrap().len(), 3);
}

#[test]
fn verify_formal_group_passes() {
    let (code, out, _) = run(&["verify", "--spec", r#"{"n":3}"#, "--classical"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("PASS Yang-Baxter"));
    assert!(out.contains("PASS classical limit"));
}

#[test]
fn perturbed_r_matrix_fails_yang_baxter() {
    let (code, out, _) = run(&["verify", "--spec", r#"{"n":3}"#, "--perturb-r-tilde", "1,2"]);
    assert_eq!(code, 1);
    assert!(out.contains("FAIL Yang-Baxter (R̃ perturbed at 1,2)"), "{out}");
}

#[test]
fn contract_galilei_sigma0() {
    let (code, out, _) = run(&["contract", "--spec", GALILEI_0]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("label: G_v^0(2)"));
    assert!(out.contains("J = ι1 ι2"), "{out}");
    assert!(out.contains("u31 = -u13 + u12 u23"), "{out}");
    assert!(out.contains("surviving relations (3):"), "{out}");
    assert!(out.contains("S(u13) = -u13 + u12 u23"), "{out}");
    assert!(out.contains("Δ(u13) = 1 ⊗ u13 + u12 ⊗ u23 + u13 ⊗ 1"), "{out}");
}

#[test]
fn contract_json_has_the_report_fields() {
    let (code, out, _) = run(&["--format", "json", "contract", "--spec", GALILEI]);
    assert_eq!(code, 0, "{out}");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    for field in [
        "spec",
        "J",
        "verdicts",
        "eliminated",
        "surviving_relations",
        "hopf_checks",
        "passed",
    ] {
        assert!(v.get(field).is_some(), "missing {field}");
    }
    assert_eq!(v["J"], "ι2");
    assert_eq!(v["eliminated"]["u31"], "-u13 + i/2 v u21 - u21 u23");
}

#[test]
fn contract_rejects_uncontracted_and_mixed_specs() {
    let (code, _, err) = run(&["contract", "--spec", r#"{"n":3}"#]);
    assert_eq!(code, 2);
    assert!(err.contains("nil"));
    let (code, _, err) = run(&["contract", "--spec", r#"{"n":3,"j":["nil","im"]}"#]);
    assert_eq!(code, 2);
    assert!(err.contains("mixing"), "{err}");
}

#[test]
fn classify_counts() {
    let (code, out, _) = run(&["classify", "--n", "3"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("N = 3: 4 classes"), "{out}");
    let (_, out, _) = run(&["classify", "--n", "4"]);
    assert!(out.starts_with("N = 4: 8 classes"));
    let (_, out, _) = run(&["classify", "--n", "4", "--shadow"]);
    assert!(out.starts_with("N = 4: 5 classes"));
}

#[test]
fn classify_json_lists_members() {
    let (code, out, _) = run(&["--format", "json", "classify", "--n", "3"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let classes = v.as_array().unwrap();
    assert_eq!(classes.len(), 4);
    let total: usize = classes.iter().map(|c| c["members"].as_array().unwrap().len()).sum();
    assert_eq!(total, 18);
}

#[test]
fn bad_input_exits_with_two() {
    for args in [
        &["describe", "--spec", r#"{"n":3,"sigma":[1,1,3]}"#][..],
        &["describe", "--spec", "{"],
        &["describe", "--spec", "/no/such/file.json"],
        &["classify", "--n", "9"],
        &["classify", "--n", "4", "--within", "0,5"],
        &["frobnicate"],
    ] {
        let (code, _, err) = run(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(!err.is_empty());
    }
}

#[test]
fn same_seed_same_bytes() {
    let args = ["--seed", "7", "--format", "json", "contract", "--spec", GALILEI_0];
    assert_eq!(run(&args).1, run(&args).1);
}

#[test]
fn out_writes_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("catalog.txt");
    let (code, out, _) = run(&["classify", "--n", "3", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.starts_with("N = 3: 4 classes"));
}

#[test]
fn spec_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.json");
    std::fs::write(&path, GALILEI).unwrap();
    let (code, out, _) = run(&["describe", "--spec", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("G_v(2)"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_ckgroup");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(status(&["describe", "--spec", r#"{"n":3}"#]), Some(0));
    assert_eq!(
        status(&["verify", "--spec", r#"{"n":3}"#, "--perturb-r-tilde", "2,2"]),
        Some(1)
    );
    assert_eq!(status(&["describe"]), Some(2));
}
