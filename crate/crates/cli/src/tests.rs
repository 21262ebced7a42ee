use serde_json::Value;

use super::main_with_io;

struct Output {
    code: i32,
    stdout: Vec<u8>,
    stderr: Vec<u8>,
}

fn run_with_stdin(args: &[&str], stdin: &str) -> Output {
    let argv = std::iter::once("solvkit")
        .chain(args.iter().copied())
        .map(String::from)
        .collect();
    let (mut stdout, mut stderr) = (Vec::new(), Vec::new());
    let code = main_with_io(argv, &mut stdin.as_bytes(), &mut stdout, &mut stderr);
    Output { code, stdout, stderr }
}

fn run(args: &[&str]) -> Output {
    run_with_stdin(args, "")
}

fn payload(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.code, 0, "{}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    v["payload"].clone()
}

fn error(args: &[&str]) -> (i32, Value) {
    let out = run(args);
    assert!(out.stdout.is_empty());
    let e: Value = serde_json::from_slice(&out.stderr).unwrap();
    (out.code, e)
}

#[test]
fn identity_is_a_torus() {
    let p = payload(&["classify", "--type-ii", "[[1,0,0],[0,1,0],[0,0,1]]"]);
    assert_eq!(p["class"], "ComplexTorus");
    let keys: Vec<&str> = p.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(
        keys,
        [
            "admits_complex",
            "admits_kaehler",
            "b1",
            "class",
            "eta",
            "finite_cover_hint",
            "kodaira_dimension",
            "witness"
        ]
    );
}

#[test]
fn help_and_version_exit_0() {
    let out = run(&["--version"]);
    assert_eq!(out.code, 0);
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .contains(env!("CARGO_PKG_VERSION")));
    assert_eq!(run(&["--help"]).code, 0);
}

#[test]
fn report_envelope() {
    let out = run(&["table"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["command"], serde_json::json!(["table"]));
    assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(v["input_digest"].as_str().unwrap().len(), 64);
    assert!(v.get("elapsed_ms").is_none());
    let timed: Value = serde_json::from_slice(&run(&["--timing", "table"]).stdout).unwrap();
    assert!(timed["elapsed_ms"].is_u64());
    assert_eq!(timed["payload"], v["payload"]);
}

#[test]
fn wang_format_and_type_iii() {
    let p = payload(&[
        "classify",
        "--type-ii",
        r#"{"fiber":"Z3","k":1,"monodromy":[[0,0,1],[1,0,0],[0,1,1]]}"#,
    ]);
    assert_eq!(p["class"], "InoueS0");
    let p = payload(&["classify", "--type-iii", r#"{"n":2,"B":[[-1,0],[0,-1]],"eps":1}"#]);
    assert_eq!(p["class"], "SecondaryKodaira");
    assert_eq!(p["eta"], "pi");
    assert_eq!(p["b1"], 1);
}

#[test]
fn validation_errors_exit_2() {
    let (code, e) = error(&["classify", "--type-ii", "[[2,0,0],[0,1,0],[0,0,1]]"]);
    assert_eq!((code, e["error"].as_str()), (2, Some("not_invertible")));
    let (code, e) = error(&["classify", "--type-iii", r#"{"n":1,"B":[[2,1],[1,1]],"eps":-1}"#]);
    assert_eq!((code, e["error"].as_str()), (2, Some("eps_mismatch")));
    let (code, e) = error(&["classify", "--type-ii", "[[1,0],[0,1]"]);
    assert_eq!((code, e["error"].as_str()), (2, Some("invalid_json")));
    let (code, e) = error(&["classify", "--type-ii", "[[1,0],[0,1]]"]);
    assert_eq!((code, e["error"].as_str()), (2, Some("bad_matrix")));
    let (code, e) = error(&["classify", "--bogus"]);
    assert_eq!((code, e["error"].as_str()), (2, Some("usage")));
    let (code, e) = error(&["orbifold", r#"{"euler_base":0,"m":[1]}"#]);
    assert_eq!((code, e["error"].as_str()), (2, Some("invalid_multiplicity")));
    let (code, e) = error(&["cohomology", "--algebra", "no-such-algebra"]);
    assert_eq!((code, e["error"].as_str()), (2, Some("unknown_algebra")));
    let (code, e) = error(&["inoue", "spm", r#"{"n":1,"B":[[1,0],[0,1]],"eps":1}"#]);
    assert_eq!((code, e["error"].as_str()), (2, Some("precondition")));
    assert!(e["detail"].is_string());
}

#[test]
fn strict_mode_flags_unenumerated() {
    // eigenvalue -1 with a Jordan block
    let m = "[[-1,1,0],[0,-1,0],[0,0,1]]";
    let p = payload(&["classify", "--type-ii", m]);
    assert_eq!(p["class"], "OtherNotEnumerated");
    let out = run(&["--strict", "classify", "--type-ii", m]);
    assert_eq!(out.code, 3);
    assert!(!out.stdout.is_empty());
    let out = run(&["--strict", "classify", "--type-ii", "[[1,0,0],[0,1,0],[0,0,1]]"]);
    assert_eq!(out.code, 0);
}

#[test]
fn orbifold_value() {
    let p = payload(&["orbifold", r#"{"euler_base":2,"m":[2,3,7]}"#]);
    assert_eq!(p, serde_json::json!({"value": "-1/42", "type": "hyperbolic"}));
}

#[test]
fn catalog_verify_lists_discrepancy() {
    let p = payload(&["catalog-verify"]);
    assert_eq!(p["entries"].as_array().unwrap().len(), 16);
    for k in ["jacobi", "unimodular", "d_squared_zero", "integrable"] {
        assert_eq!(p["summary"][k], true, "{k}");
    }
    let d = &p["discrepancies"][0];
    assert_eq!(d["entry"], "inoue-spm:1");
    assert_eq!(d["corrected_j"]["integrable"], true);
    assert_eq!(d["transposed_j"]["witness"]["pair"], serde_json::json!([1, 2]));
    assert_eq!(d["transposed_j"]["witness"]["value"][2], "-2*q^2");
    assert_eq!(p["models"]["frame"]["holds"], true);
}

#[test]
fn seed_changes_only_seeded_fields() {
    let a = payload(&["catalog-verify", "--seed", "1"]);
    let b = payload(&["catalog-verify", "--seed", "2"]);
    assert_eq!(a["entries"], b["entries"]);
    assert_eq!(a["models"]["kodaira_group_law"]["seed"], 1);
    assert_eq!(
        a["models"]["kodaira_group_law"]["passing"],
        b["models"]["kodaira_group_law"]["passing"]
    );
}

#[test]
fn geometry_commands() {
    let p = payload(&["cohomology", "--algebra", "example5"]);
    assert_eq!(p["betti"], serde_json::json!([1, 2, 5, 8, 5, 2, 1]));
    assert_eq!(p["pseudo_kahler"]["holds"], true);
    let w = r#"{"degree":2,"terms":[["1",[1,3]],["1",[2,4]]]}"#;
    let p = payload(&["lefschetz", "--algebra", "primary-kodaira4", "--omega", w]);
    assert_eq!(p["symplectic"], true);
    assert_eq!(p["hard_lefschetz"], serde_json::json!([false, true]));
    let p = payload(&["cohomology", "--algebra", "torus4", "--omega", w]);
    assert_eq!(p["betti"], serde_json::json!([1, 4, 6, 4, 1]));
    assert_eq!(p["hard_lefschetz"], serde_json::json!([true, true]));
}

#[test]
fn lattice_and_inoue_commands() {
    let p = payload(&["lattices", "hyperelliptic"]);
    assert_eq!(p["count"], 7);
    assert!(p["classes"].as_array().unwrap().iter().all(|c| c["verified"] == true));
    let p = payload(&[
        "lattices",
        "hyperelliptic",
        "--verify",
        r#"{"eta":"pi/2","pq":[1,0],"st":["1/2","1/2"]}"#,
    ]);
    assert!(p["verified"].is_boolean());
    let p = payload(&["inoue", "s0", "[[0,0,1],[1,0,0],[0,1,1]]"]);
    assert_eq!(p["verified"], true);
    let p = payload(&["inoue", "spm", r#"{"n":1,"B":[[2,1],[1,1]],"eps":1}"#]);
    assert_eq!(p["commutator_ok"], true);
    assert_eq!(p["action_ok"], true);
}

#[test]
fn output_file_and_stdin() {
    let dir = std::env::temp_dir().join(format!("solvkit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("out.json");
    let out = run(&["--output", path.to_str().unwrap(), "table"]);
    assert!(out.code == 0 && out.stdout.is_empty());
    let written: Value = serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    assert_eq!(written["payload"], payload(&["table"]));

    let out = run_with_stdin(&["classify", "--type-ii", "-"], "[[1,1,0],[0,1,0],[0,0,1]]");
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["payload"]["class"], "PrimaryKodaira");
    std::fs::remove_dir_all(&dir).ok();
}
