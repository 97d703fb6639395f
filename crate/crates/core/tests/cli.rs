use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn cuttree(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cuttree"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_temp(name: &str, content: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("cuttree-test-{}-{name}", std::process::id()));
    fs::write(&path, content).unwrap();
    path
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn tree_on_single_edge() {
    let g = write_temp("single.txt", "2 1\n0 1 5\n");
    let out = cuttree(&["tree", g.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "0 1 5\n");
}

#[test]
fn counterexample_prints_figure_weights() {
    let out = cuttree(&["counterexample", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("5 7\n"));
    for line in ["0 1 2\n", "1 2 4\n", "2 3 7\n"] {
        assert!(text.contains(line), "missing {line:?} in {text}");
    }
    // every star edge has weight 1
    for i in 0..=3 {
        assert!(text.contains(&format!("{i} 4 1\n")));
    }
}

#[test]
fn verify_rejects_corrupted_tree() {
    let g = write_temp("star.txt", "4 3\n0 1 1\n0 2 1\n0 3 1\n");
    let out = cuttree(&["tree", g.to_str().unwrap()]);
    assert!(out.status.success());
    let good = write_temp("star-tree.txt", &stdout(&out));
    let ok = cuttree(&["verify", g.to_str().unwrap(), good.to_str().unwrap(), "--all-pairs"]);
    assert!(ok.status.success());

    let bad = write_temp("star-tree-bad.txt", &stdout(&out).replacen("1\n", "2\n", 1));
    let fail = cuttree(&["verify", g.to_str().unwrap(), bad.to_str().unwrap()]);
    assert_eq!(fail.status.code(), Some(1));
    assert!(!stdout(&fail).is_empty());
}

#[test]
fn input_errors_exit_2() {
    let unknown = cuttree(&["frobnicate"]);
    assert_eq!(unknown.status.code(), Some(2));
    let missing = cuttree(&["tree", "/nonexistent/graph.txt"]);
    assert_eq!(missing.status.code(), Some(2));
    let g = write_temp("disconnected.txt", "4 2\n0 1 1\n2 3 1\n");
    let disconnected = cuttree(&["tree", g.to_str().unwrap()]);
    assert_eq!(disconnected.status.code(), Some(2));
}

#[test]
fn per_component_builds_a_forest() {
    let g = write_temp("forest.txt", "4 2\n0 1 1\n2 3 2\n");
    let out = cuttree(&["tree", g.to_str().unwrap(), "--per-component"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "0 1 1\n2 3 2\n");
}

#[test]
fn mincut_and_spectrum_output() {
    let g = write_temp("path.txt", "3 2\n0 1 2\n1 2 3\n");
    let out = cuttree(&["mincut", g.to_str().unwrap(), "0", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "lambda 2\nsmallest {0}\nlargest {0}\n");

    let out = cuttree(&["spectrum", g.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "2\n3\n");

    let out = cuttree(&["spectrum", g.to_str().unwrap(), "--decimal", "2"]);
    assert_eq!(stdout(&out), "2.00\n3.00\n");
}

#[test]
fn laminar_output_is_deterministic() {
    let g = write_temp("kite.txt", "4 5\n0 1 3\n0 2 1\n1 2 2\n1 3 4\n2 3 2\n");
    let first = cuttree(&["laminar", g.to_str().unwrap()]);
    assert!(first.status.success());
    let second = cuttree(&["laminar", g.to_str().unwrap()]);
    assert_eq!(first.stdout, second.stdout);
    assert!(!first.stdout.is_empty());
}

#[test]
fn check_properties_registry() {
    let ok = cuttree(&["check-properties", "pairs:4"]);
    assert!(ok.status.success());
    let table = write_temp("bad-table.txt", "0 0\n1 1\n2 1\n3 3\n4 3\n5 1\n6 1\n7 0\n");
    let bad = cuttree(&["check-properties", &format!("table:{}", table.to_str().unwrap())]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("submodularity"));

    let nonsense = cuttree(&["check-properties", "bogus:thing"]);
    assert_eq!(nonsense.status.code(), Some(2));
}

#[test]
fn enum_cap_env_is_respected() {
    // within the default cap this succeeds
    let ok = cuttree(&["check-properties", "pairs:5"]);
    assert!(ok.status.success());
    // the env var overrides the cap
    let blocked = Command::new(env!("CARGO_BIN_EXE_cuttree"))
        .args(["check-properties", "pairs:5"])
        .env("CUTTREE_MAX_ENUM", "4")
        .output()
        .unwrap();
    assert_eq!(blocked.status.code(), Some(2));
    // and is itself bounded by the hard limit
    let over = Command::new(env!("CARGO_BIN_EXE_cuttree"))
        .args(["check-properties", "pairs:5"])
        .env("CUTTREE_MAX_ENUM", "25")
        .output()
        .unwrap();
    assert_eq!(over.status.code(), Some(2));
}
