use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn kempe(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kempe"))
        .args(args)
        .output()
        .unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("kempe-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn lines(o: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&o.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn classes_of_the_prism() {
    let path = scratch("prism.g6");
    std::fs::write(&path, "E{Sw\n").unwrap();
    let o = kempe(&["classes", "--input", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let rec = &lines(&o)[0];
    assert_eq!(rec["colorings"], 12);
    assert_eq!(rec["sizes"], serde_json::json!([6, 6]));
}

#[test]
fn edge_lists_are_accepted() {
    let path = scratch("k33.txt");
    std::fs::write(&path, "6 9\n0 3\n0 4\n0 5\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n").unwrap();
    let o = kempe(&["analyze", "--input", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(lines(&o)[0]["route"], "claw");
}

#[test]
fn solve_writes_a_replayable_witness() {
    let g = scratch("k33.g6");
    let k33 = kempe::graph::named::k33();
    std::fs::write(&g, kempe::graph::graph6::encode(&k33)).unwrap();
    let all = kempe::coloring::enumerate_colorings(&k33, 3, 1 << 20).unwrap();
    let (a, b) = (
        serde_json::to_string(&all[0].colors).unwrap(),
        serde_json::to_string(&all[all.len() - 1].colors).unwrap(),
    );
    let out = scratch("witness.json");
    let o = kempe(&[
        "solve",
        "--input",
        g.to_str().unwrap(),
        "--pair",
        &a,
        &b,
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let rec = &lines(&o)[0];
    assert_eq!(rec["valid"], true);
    let w: kempe::KempeSequence =
        serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(serde_json::to_value(&w).unwrap(), rec["witness"]);
}

#[test]
fn prism_across_classes_fails_verification() {
    let path = scratch("prism2.g6");
    std::fs::write(&path, "E{Sw\n").unwrap();
    let o = kempe(&[
        "solve",
        "--input",
        path.to_str().unwrap(),
        "--pair",
        "[1,2,3,2,3,1]",
        "[1,2,3,3,1,2]",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(lines(&o)[0]["equivalent"], false);
}

#[test]
fn exit_codes() {
    assert_eq!(kempe(&["bogus"]).status.code(), Some(2));
    assert_eq!(kempe(&["gen", "--n", "9"]).status.code(), Some(2));
    assert_eq!(
        kempe(&["solve", "--input", "/nonexistent", "--pair", "[1]", "[1]"])
            .status
            .code(),
        Some(2)
    );
    let bad = scratch("bad.g6");
    std::fs::write(&bad, "E{Sw\n???\n").unwrap();
    assert_eq!(
        kempe(&["verify", "--input", bad.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        kempe(&["verify", "--gen", "6,8", "--pairs", "5"])
            .status
            .code(),
        Some(0)
    );
}

#[test]
fn output_does_not_depend_on_thread_count() {
    let one = kempe(&[
        "verify", "--gen", "6,8,10", "--pairs", "3", "--seed", "4", "--jobs", "1",
    ]);
    let four = kempe(&[
        "verify", "--gen", "6,8,10", "--pairs", "3", "--seed", "4", "--jobs", "4",
    ]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
    let summary = lines(&one).pop().unwrap();
    assert_eq!(summary["summary"], "26 graphs, 26 PASS");
}

#[test]
fn gen_writes_to_a_file() {
    let out = scratch("cubic10.g6");
    let o = kempe(&["gen", "--n", "10", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(out).unwrap();
    assert_eq!(kempe::graph::graph6::parse_many(&text).unwrap().len(), 19);
}
