//! End-to-end runs of the `twc` binary.

use std::process::Command;

use twc::cli::Report;

fn twc(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_twc")).args(args).output().expect("run twc");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn temp_file(name: &str, body: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("twc-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

#[test]
fn remark_fixture_value() {
    let (code, out, _) = twc(&["permanent", "--fixture", "b1-3-3-remark-selection", "--json"]);
    assert_eq!(code, 0);
    let r = Report::from_json(&out).unwrap();
    assert_eq!(r.result["permanent"], -8);
}

#[test]
fn exit_codes() {
    assert_eq!(twc(&["check", "12", "path:5"]).0, 0);
    assert_eq!(twc(&["check", "12", "cycle:3"]).0, 2);
    assert_eq!(twc(&["check", "22", "b3:1,1,2"]).0, 0);
    assert_eq!(twc(&["check", "13", "b2:3,3,4"]).0, 0);
    let (code, _, err) = twc(&["check", "12", "no-such-graph"]);
    assert_eq!(code, 1);
    assert!(err.contains("no-such-graph"));
    assert_eq!(twc(&["frobnicate"]).0, 1);
}

#[test]
fn pind_exhaustive_prints_witness() {
    let (code, out, _) = twc(&["pind", "B", "cycle:4", "--max", "2", "--method", "exhaustive"]);
    assert_eq!(code, 0);
    assert!(out.contains("Certified") && out.contains("columns:"), "{out}");
}

#[test]
fn json_is_canonical_and_deterministic() {
    for args in [
        ["classify", "b1:3,3", "--json"].as_slice(),
        &["check", "13", "cycle:6", "--json"],
        &["weighting", "b2:3,3,2", "--random", "2,2", "--seed", "4", "--json"],
        &["matrix", "B", "b3:1,1,1", "--orient", "random", "--seed", "2", "--json"],
        &["matchings", "star:4", "--line-graph", "--json"],
        &["split", "cycle:5", "--edge", "1,2", "--json"],
        &["family", "b2:3,3,2", "--json"],
    ] {
        let (_, a, _) = twc(args);
        let (_, b, _) = twc(args);
        let (ra, rb) = (Report::from_json(&a).unwrap(), Report::from_json(&b).unwrap());
        assert_eq!(ra.result, rb.result, "{args:?}");
        assert_eq!(ra.to_json(), a.trim_end(), "{args:?} re-serializes identically");
    }
}

#[test]
fn graph_and_list_files() {
    let g = temp_file("p3.txt", "# P3\n3 2\n1 2\n2 3\n");
    let lists = temp_file("p3.lists", "V 1 0 1\nV 2 0 1/2\nV 3 -1.5 2\nE 1 2 1 2\nE 2 3 3 4\n");
    let (code, out, _) = twc(&["weighting", g.to_str().unwrap(), "--lists", lists.to_str().unwrap()]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("proper weighting found"));

    let bad = temp_file("bad.txt", "3 2\n1 2\n2 x\n");
    let (code, _, err) = twc(&["classify", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("bad.txt") && err.contains("line 3"), "{err}");

    let bad_lists = temp_file("bad.lists", "V 1 0 1\nV 2 0 q\n");
    let (code, _, err) = twc(&["weighting", g.to_str().unwrap(), "--lists", bad_lists.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("bad.lists") && err.contains("line 2"), "{err}");

    let matrix = temp_file("m.txt", &twc::matrix::fixture("theorem-4-2-c").unwrap().to_text());
    let (code, out, _) = twc(&["permanent", matrix.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.starts_with("per = -4"), "{out}");
}

#[test]
fn size_cap_env_var() {
    let out = Command::new(env!("CARGO_BIN_EXE_twc"))
        .args(["permanent", "complete:6"])
        .env("TWC_SIZE_CAP", "permanent=10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("TWC_SIZE_CAP"));
}
