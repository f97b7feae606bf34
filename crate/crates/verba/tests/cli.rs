//! End-to-end checks of the command-line surface: outputs, file formats,
//! and exit codes (0 ok, 2 parse, 3 composition/realization, 4 refuted,
//! 5 i/o).

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_verba"))
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn parse_prints_the_tree() {
    let out = bin().args(["parse", "shape1 is at shape2"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("(Start[]"));
    assert!(text.contains("(NP[-pro, -wh] (SHAPE[] shape1))"));
    assert!(text.contains("(SP[] at)"));
}

#[test]
fn parse_errors_use_exit_code_two() {
    let out = bin().args(["parse", "shape1 at"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("position 2"), "stderr was: {err}");

    let out = bin().args(["parse", "hello"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("hello"));
}

#[test]
fn interpret_prints_canonical_and_paper_forms() {
    let out = bin()
        .args(["interpret", "shape1 is at shape2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out).trim(),
        "SPATIAL_RELATION[relation=at, region=ttp-nttp, action=ACTION[action=is, \
         tense=present], trajector=SHAPE[shape=shape1], landmark=SHAPE[shape=shape2]]"
    );

    let out = bin()
        .args(["interpret", "shape1 is at shape2", "--paper-style"])
        .output()
        .unwrap();
    assert_eq!(
        stdout(&out).trim(),
        "SPATIAL_RELATION['at', \"SHAPE['shape1']\", 'ttp-nttp', \"SHAPE['shape2']\", \
         \"ACTION['is', 'present']\"]"
    );

    let out = bin()
        .args(["interpret", "add shape1 to shape2", "--paper-style"])
        .output()
        .unwrap();
    assert_eq!(
        stdout(&out).trim(),
        "ACTION['add', \"SHAPE['shape1']\", \"SHAPE['shape2']\"]"
    );

    let out = bin()
        .args(["interpret", "shape1 is on shape2", "--json"])
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["category"], "SPATIAL_RELATION");
    assert_eq!(v["attributes"]["region"], "ec-ttp");
}

#[test]
fn convert_switches_styles() {
    let out = bin()
        .args(["convert", "shape1 is at shape2", "--to", "constructive"])
        .output()
        .unwrap();
    assert_eq!(stdout(&out).trim(), "draw shape1 at shape2");

    let out = bin()
        .args(["convert", "draw shape1 at shape2", "--to", "from-above"])
        .output()
        .unwrap();
    assert_eq!(stdout(&out).trim(), "shape1 is at shape2");

    // A bare action has no spatial relation to assert from above.
    let out = bin()
        .args(["convert", "add shape1 to shape2", "--to", "from-above"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_reports_and_uses_exit_codes() {
    let out = bin()
        .args(["verify", "--sentence", "shape2 is in shape1"])
        .arg("--shape1")
        .arg(data("outer.json"))
        .arg("--shape2")
        .arg(data("inner.json"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "verified (NTPP)");

    let out = bin()
        .args(["verify", "--sentence", "shape2 is on shape1"])
        .arg("--shape1")
        .arg(data("square.json"))
        .arg("--shape2")
        .arg(data("adjacent.json"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "verified (EC)");

    // Externally connected squares refute 'at': exit 4.
    let out = bin()
        .args(["verify", "--sentence", "shape1 is at shape2"])
        .arg("--shape1")
        .arg(data("square.json"))
        .arg("--shape2")
        .arg(data("adjacent.json"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));
    assert!(stdout(&out).contains("refuted (EC)"));

    // Missing file: exit 5.
    let out = bin()
        .args(["verify", "--sentence", "shape1 is at shape2"])
        .arg("--shape1")
        .arg(data("absent.json"))
        .arg("--shape2")
        .arg(data("outer.json"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(5));
}

#[test]
fn render_writes_deterministic_svg() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("square.svg");
    let run = || {
        let out = bin()
            .args(["render"])
            .arg("--shape")
            .arg(data("square.json"))
            .arg("--out")
            .arg(&out_path)
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0));
        std::fs::read_to_string(&out_path).unwrap()
    };
    let first = run();
    assert_eq!(first.matches("<path").count(), 4);
    assert_eq!(first, run());
}

#[test]
fn derive_writes_trace_and_report() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("report");
    let run = |target: &Path| {
        let out = bin()
            .args(["derive"])
            .arg("--rules")
            .arg(data("rules.json"))
            .arg("--init")
            .arg(data("init.json"))
            .args(["--steps", "3", "--strategy", "random", "--seed", "7"])
            .arg("--out")
            .arg(target)
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    };
    run(&out_dir);
    let trace: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(out_dir.join("trace.json")).unwrap())
            .unwrap();
    assert_eq!(trace["termination"], "max-steps");
    assert_eq!(trace["steps"].as_array().unwrap().len(), 3);
    assert_eq!(trace["steps"][0]["transform"].as_array().unwrap().len(), 6);
    for file in [
        "index.html",
        "step_001.svg",
        "step_001_shape1.svg",
        "step_001_shape2.svg",
        "step_003.svg",
    ] {
        assert!(out_dir.join(file).exists(), "missing {file}");
    }
    let html = std::fs::read_to_string(out_dir.join("index.html")).unwrap();
    assert!(html.contains("step_001_shape2.svg"));
    assert!(!html.contains("&lt;shape2&gt;"), "references must be images");

    // Same seed, byte-identical trace.
    let second = dir.path().join("again");
    run(&second);
    assert_eq!(
        std::fs::read(out_dir.join("trace.json")).unwrap(),
        std::fs::read(second.join("trace.json")).unwrap()
    );
}

#[test]
fn derive_zero_steps_is_a_valid_run() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin()
        .args(["derive"])
        .arg("--rules")
        .arg(data("rules.json"))
        .arg("--init")
        .arg(data("init.json"))
        .args(["--steps", "0"])
        .arg("--out")
        .arg(dir.path().join("empty"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let trace: serde_json::Value = serde_json::from_str(
        &std::fs::read_to_string(dir.path().join("empty").join("trace.json")).unwrap(),
    )
    .unwrap();
    assert_eq!(trace["termination"], "max-steps");
    assert_eq!(trace["steps"].as_array().unwrap().len(), 0);
}
