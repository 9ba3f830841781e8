use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn qgg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qgg")).args(args).output().expect("binary runs")
}

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

#[test]
fn rank_of_examples() {
    for (file, rank) in [("k32_balanced.qgg", 2), ("theta111_mixed.qgg", 4), ("c7.qgg", 7)] {
        let out = qgg(&["rank", &data(file), "--output", "json"]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(json(&out)["rank"], rank, "{file}");
    }
}

#[test]
fn both_methods_agree_in_both_towers() {
    for tower in ["exact", "float"] {
        let out = qgg(&["rank", &data("theta111_mixed.qgg"), "--method", "both", "--tower", tower, "--output", "json"]);
        assert_eq!(out.status.code(), Some(0));
        let v = json(&out);
        assert_eq!((v["rank"].as_u64(), v["adjoint_rank"].as_u64(), v["agrees"].as_bool()), (Some(4), Some(4), Some(true)));
    }
}

#[test]
fn edgeless_graph_has_rank_zero() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("empty.qgg");
    std::fs::write(&f, "#qgg v1\nn 3\n").unwrap();
    let out = qgg(&["rank", f.to_str().unwrap()]);
    assert_eq!(String::from_utf8_lossy(&out.stdout), "rank 0\n");
}

#[test]
fn classify_reports_relation_and_case() {
    let v = json(&qgg(&["classify", &data("triangle_with_multiple.qgg"), "--output", "json"]));
    assert_eq!((v["girth"].as_u64(), v["rank"].as_u64(), v["relation"].as_str()), (Some(3), Some(2), Some("g-1")));
    assert_eq!(v["case"], "rank = g-1: reduced graph is a Type 4 triangle");
    let v = json(&qgg(&["classify", &data("k32_balanced.qgg"), "--output", "json"]));
    assert_eq!((v["girth"].as_u64(), v["rank"].as_u64(), v["relation"].as_str()), (Some(4), Some(2), Some("g-2")));
    assert_eq!(v["shortest_cycle_type"], "Type1");
    assert_eq!(v["prediction_agrees"], true);
}

#[test]
fn classify_rejects_disconnected_input() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("two.qgg");
    std::fs::write(&f, "#qgg v1\nn 4\ne 1 2 1 0 0 0\ne 3 4 1 0 0 0\n").unwrap();
    assert_eq!(qgg(&["classify", f.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn reduce_leaves_the_triangle() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("reduced.qgg");
    let out = qgg(&["reduce", &data("triangle_with_multiple.qgg"), "-o", out_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&out_path).unwrap();
    assert!(text.starts_with("#qgg v1\n# removed 3\n"));
    assert!(text.contains("\nn 3\n"));
    let rank = qgg(&["rank", out_path.to_str().unwrap()]);
    assert_eq!(String::from_utf8_lossy(&rank.stdout), "rank 2\n");
}

#[test]
fn girth_of_c7() {
    let out = qgg(&["girth", &data("c7.qgg")]);
    assert_eq!(String::from_utf8_lossy(&out.stdout), "girth 7\ncycle 1 2 3 4 5 6 7\n");
}

#[test]
fn random_is_seeded() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = data("k4_edges.txt");
    for set in ["lipschitz", "hurwitz", "uniform"] {
        let a = dir.path().join(format!("a-{set}.qgg"));
        let b = dir.path().join(format!("b-{set}.qgg"));
        for p in [&a, &b] {
            let out = qgg(&["random", &k4, "--seed", "7", "--gain-set", set, "-o", p.to_str().unwrap()]);
            assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
        }
        let (ta, tb) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
        assert_eq!(ta, tb);
        let tower = if set == "uniform" { "float" } else { "exact" };
        let out = qgg(&["rank", a.to_str().unwrap(), "--tower", tower]);
        assert_eq!(out.status.code(), Some(0));
    }
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(qgg(&["rank", "/nonexistent.qgg"]).status.code(), Some(2));
    assert_eq!(qgg(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(qgg(&["verify", "--suite", "girth-bound", "--max-n", "8"]).status.code(), Some(2));
    assert_eq!(qgg(&["frobnicate"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("bad.qgg");
    std::fs::write(&f, "#qgg v1\nn 2\ne 1 2 2 0 0 0\n").unwrap();
    assert_eq!(qgg(&["rank", f.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn verify_suites_pass() {
    let out = qgg(&["verify", "--suite", "formulas", "--max-n", "12", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let out = qgg(&["verify", "--suite", "girth-bound", "--max-n", "5", "--samples", "10", "--seed", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let out = qgg(&["verify", "--suite", "tables", "--seed", "1"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_json_is_reproducible_across_thread_caps() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_qgg"))
            .args(["verify", "--suite", "classifications", "--max-n", "5", "--samples", "3", "--seed", "4", "--output", "json"])
            .env("QGG_THREADS", threads)
            .output()
            .unwrap()
            .stdout
    };
    let a = run("1");
    assert_eq!(a, run("4"));
    let v: Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(v["passed"], true);
}

#[test]
fn falsifications_write_witness_files() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.json");
    let out = qgg(&["verify", "--suite", "k4", "--gain-set", "hurwitz", "--output", "json", "-o", report.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    let files = v["witness_files"].as_array().unwrap();
    assert!(!files.is_empty());
    for f in files {
        let f = f.as_str().unwrap();
        assert!(f.contains("witness-") && f.ends_with(".qgg"));
        let rank = qgg(&["rank", f]);
        assert_eq!(String::from_utf8_lossy(&rank.stdout), "rank 3\n");
    }
}
