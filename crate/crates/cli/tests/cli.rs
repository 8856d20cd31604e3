use std::process::Command;

fn mvt() -> Command {
    Command::new(env!("CARGO_BIN_EXE_mvt"))
}

fn run_json(args: &[&str]) -> (serde_json::Value, i32) {
    let out = mvt().args(args).output().expect("spawn mvt");
    let code = out.status.code().unwrap_or(-1);
    let v: serde_json::Value =
        serde_json::from_slice(&out.stdout).unwrap_or(serde_json::Value::Null);
    (v, code)
}

#[test]
fn tab2lusztig_published_example() {
    let (v, code) = run_json(&[
        "tab2lusztig",
        "--json",
        r#"{"rows":[[1,1,2],[2,3,3]]}"#,
        "--no-cache",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["n"], serde_json::json!([1, 0, 2]));
}

#[test]
fn sort_published_example() {
    let (v, code) = run_json(&["sort", "--json", r#"{"rows":[[1,2],[3,4]]}"#, "--no-cache"]);
    assert_eq!(code, 0);
    assert_eq!(v["sort"], serde_json::json!([2, 3, 1]));
}

#[test]
fn roundtrip_datum_tableau() {
    let (v, code) = run_json(&["lusztig2tab", "--json", r#"{"m":3,"n":[1,0,1]}"#, "--no-cache"]);
    assert_eq!(code, 0);
    assert_eq!(v["rows"], serde_json::json!([[1, 2], [3]]));
}

#[test]
fn byte_identical_output() {
    let args = ["tab2ideal", "--json", r#"{"rows":[[1,2],[3]]}"#, "--no-cache"];
    let a = mvt().args(args).output().unwrap();
    let b = mvt().args(args).output().unwrap();
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}

#[test]
fn cache_roundtrip_and_identical_output() {
    let dir = tempfile::tempdir().unwrap();
    let cache_arg = format!("{}", dir.path().display());
    let args = [
        "mdeg",
        "--json",
        r#"{"rows":[[1,2],[3]]}"#,
        "--cache-dir",
        &cache_arg,
    ];
    let cold = mvt().args(args).output().unwrap();
    assert!(cold.status.success());
    // a cache file was written
    assert!(std::fs::read_dir(dir.path()).unwrap().count() >= 1);
    let warm = mvt().args(args).output().unwrap();
    assert_eq!(cold.stdout, warm.stdout);
}

#[test]
fn usage_error_exit_code() {
    let out = mvt().args(["tab2lusztig", "--no-cache"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn invalid_tableau_rejected() {
    let out = mvt()
        .args(["tab2lusztig", "--json", r#"{"rows":[[2,1]]}"#, "--no-cache"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn polytope_paths() {
    let (v, code) = run_json(&["polytope", "--json", r#"{"m":3,"n":[1,0,1]}"#, "--no-cache"]);
    assert_eq!(code, 0);
    assert_eq!(
        v["vertex_path"],
        serde_json::json!([[0, 0], [1, 0], [1, 0], [1, 1]])
    );
    // BZ input road back to the datum
    let (v2, code2) = run_json(&[
        "polytope",
        "--json",
        &v["bz"].to_string(),
        "--no-cache",
    ]);
    assert_eq!(code2, 0);
    assert_eq!(v2["vertex_path"], v["vertex_path"]);
}

#[test]
fn flagfn_one_to_two() {
    let module = r#"{"m":3,"dims":[1,1],"arrows":{"1>2":[["1"]]}}"#;
    let (v, code) = run_json(&["flagfn", "--json", module, "--no-cache"]);
    assert_eq!(code, 0);
    let s = v["flag_function"].as_str().unwrap();
    assert!(s.contains("a1"), "unexpected flag function {s}");
}

#[test]
fn compare_bases_leitfaden() {
    let input = r#"{
        "tableau": {"rows":[[1,2],[3]]},
        "modules": [{"m":3,"dims":[1,1],"arrows":{"1>2":[["1"]]}}]
    }"#;
    let (v, code) = run_json(&["compare-bases", "--json", input, "--no-cache"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], "equal");
}

#[test]
fn crystal_string_reaches_highest_weight() {
    let (v, code) = run_json(&[
        "crystal",
        "--json",
        r#"{"rows":[[1,2],[3,4],[5]]}"#,
        "--apply",
        "e3,e2,e1,e4,e2,e3",
        "--no-cache",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["eps"], serde_json::json!([1, 0, 1, 0]));
    assert_eq!(v["result"], serde_json::json!([[1, 1], [2, 2], [3]]));
}

#[test]
fn case_study_one_passes() {
    let dir = tempfile::tempdir().unwrap();
    let cache_arg = format!("{}", dir.path().display());
    let (v, code) = run_json(&["case-study", "1", "--cache-dir", &cache_arg]);
    assert_eq!(code, 0, "case study 1 failed: {v}");
    assert_eq!(v["all_pass"], serde_json::json!(true));
}
