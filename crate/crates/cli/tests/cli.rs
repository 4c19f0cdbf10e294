use std::process::{Command, Output};

fn partgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_partgraph"))
        .args(args)
        .env_remove("PARTGRAPH_GRAPH_CAP")
        .output()
        .expect("run partgraph")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

#[test]
fn overlay_verification_passes() {
    let out = partgraph(&["verify", "overlay", "--n", "4", "--tau", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["injective"], true);
    assert_eq!(report["violation_count"], 0);
}

#[test]
fn overlay_sweep_lists_every_tau() {
    let out = partgraph(&["verify", "overlay", "--n", "5", "--sweep", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out).as_array().unwrap().len(), 7);
}

#[test]
fn e1_has_an_occurrence_rooted_at_222() {
    let out = partgraph(&["motif", "find", "--template", "e1", "--n", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let found = json(&out);
    let roots: Vec<&str> = found["occurrences"]
        .as_array()
        .unwrap()
        .iter()
        .map(|o| o["roots"][0].as_str().unwrap())
        .collect();
    assert!(roots.contains(&"2,2,2"));
}

#[test]
fn bl1_threshold_is_four() {
    let out = partgraph(&["threshold", "motif", "--template", "bl1", "--max-n", "10"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["first_n"], 4);
    assert_eq!(r["stability_verified_to"], 10);
}

#[test]
fn extremal_threshold() {
    let out = partgraph(&["threshold", "extremal", "--kind", "omega", "--bound", "3", "--max-n", "10"]);
    assert_eq!(json(&out)["first_n"], 4);
}

#[test]
fn build_exports_dot_and_json() {
    let dot = partgraph(&["build", "--n", "2", "--format", "dot"]);
    assert_eq!(
        String::from_utf8(dot.stdout).unwrap(),
        "graph G2 {\n  v0 [label=\"2\"];\n  v1 [label=\"1,1\"];\n  v0 -- v1;\n}\n"
    );
    let g = json(&partgraph(&["build", "--n", "4"]));
    assert_eq!(g["vertex_count"], 5);
    assert_eq!(g["edges"].as_array().unwrap().len(), 5);
}

#[test]
fn repeated_runs_are_byte_identical() {
    for args in [
        &["invariants", "--from", "1", "--to", "10"][..],
        &["motif", "find", "--template", "rsq", "--n", "9"],
        &["atlas", "--from", "1", "--to", "8"],
    ] {
        let a = partgraph(args);
        let b = partgraph(args);
        let single = partgraph(&[args, &["--workers", "1"]].concat());
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.stdout, single.stdout, "{args:?}");
    }
}

#[test]
fn atlas_writes_json_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("atlas.json");
    let out = partgraph(&[
        "atlas",
        "--from",
        "1",
        "--to",
        "6",
        "--templates",
        "e1,k3",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let atlas: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(atlas["range"], serde_json::json!([1, 6]));
    assert_eq!(atlas["records"].as_array().unwrap().len(), 6);
    let csv = std::fs::read_to_string(dir.path().join("atlas.csv")).unwrap();
    assert!(csv.starts_with("n,metric,value\n"));
}

#[test]
fn template_files_are_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("claw.json");
    std::fs::write(
        &path,
        r#"{"name": "claw", "vertices": 4, "edges": [[0,1],[0,2],[0,3]], "roots": [0], "min_n": null}"#,
    )
    .unwrap();
    let out = partgraph(&["motif", "find", "--template", path.to_str().unwrap(), "--n", "8", "--limit", "1"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(json(&out)["template"], "claw");
}

#[test]
fn usage_and_domain_errors_exit_one() {
    for args in [
        &["--bogus"][..],
        &["build"],
        &["build", "--n", "0"],
        &["build", "--n", "41"],
        &["build", "--n", "3", "--format", "png"],
        &["verify", "overlay", "--n", "4", "--tau", "1,2"],
        &["verify", "overlay", "--n", "4"],
        &["motif", "find", "--template", "a1", "--n", "5"],
        &["motif", "find", "--template", "nope", "--n", "5"],
        &["invariants", "--from", "5", "--to", "3"],
        &["profile", "--kind", "delta", "--over", "delta", "--from", "1", "--to", "3"],
        &["--graph-cap", "0", "build", "--n", "3"],
    ] {
        let out = partgraph(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn caps_come_from_flags_then_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_partgraph"))
        .args(["build", "--n", "8"])
        .env("PARTGRAPH_GRAPH_CAP", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let out = Command::new(env!("CARGO_BIN_EXE_partgraph"))
        .args(["build", "--n", "8", "--graph-cap", "10"])
        .env("PARTGRAPH_GRAPH_CAP", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn help_exits_zero() {
    let out = partgraph(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("verify"));
}

#[test]
fn profile_ratios() {
    let out = partgraph(&["profile", "--kind", "edges", "--over", "vertices", "--from", "1", "--to", "3"]);
    let points = json(&out)["points"].clone();
    assert_eq!(points[2]["ratio"]["value"], "0.666667");
}
