use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn meg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_meg")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, body: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn compute_small_graphs() {
    let dir = tempfile::tempdir().unwrap();
    let p5 = write(dir.path(), "p5", "5 4\n0 1\n1 2\n2 3\n3 4\n");
    let c4 = write(dir.path(), "c4", "# square\n4 4\n0 1\n1 2\n2 3\n3 0\n");
    let two = write(dir.path(), "two", "5 3\n0 1\n1 2\n3 4\n");
    let o = meg(&["compute", s(&p5)]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("meg=2 set={0,4}\n"));
    assert!(stdout(&meg(&["compute", s(&c4)])).starts_with("meg=4 set={0,1,2,3}\n"));
    assert!(stdout(&meg(&["compute", s(&two)])).starts_with("meg=4 set={0,2,3,4}\n"));
}

#[test]
fn delete_uses_tag_sidecar() {
    let dir = tempfile::tempdir().unwrap();
    let grid = dir.path().join("g33");
    assert!(meg(&["generate", "grid", "3", "3", "--out", s(&grid)]).status.success());
    // (2,1)-(2,2) is 3-4
    let o = meg(&["--json", "delete", s(&grid), "--edge", "3 4"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["meg_before"], 8);
    assert_eq!(v["meg_after"], 6);
    assert_eq!(v["prediction"]["value"], 6);
    assert_eq!(v["verdict"], "match");

    let c6 = write(dir.path(), "c6", "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
    let text = stdout(&meg(&["delete", s(&c6), "--edge", "2-3"]));
    assert!(text.contains("meg before 3, after 2"), "{text}");
    assert!(text.contains("verdict match"), "{text}");
}

#[test]
fn bounds_and_monitors() {
    let dir = tempfile::tempdir().unwrap();
    let p4 = write(dir.path(), "p4", "4 3\n0 1\n1 2\n2 3\n");
    let o = meg(&["bounds", s(&p4), "--edge", "0 1"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("pendant"));
    let o = meg(&["monitors", s(&p4), "0", "2"]);
    assert_eq!(stdout(&o), "(0,2): 0-1 1-2\n");
    assert_eq!(meg(&["monitors", s(&p4), "0"]).status.code(), Some(2));
    let f = stdout(&meg(&["forced", s(&p4)]));
    assert_eq!(f, "forced={0,3}\nexcluded={1,2}\n");
}

#[test]
fn errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad", "3 2\n0 1\n");
    assert_eq!(meg(&["compute", s(&bad)]).status.code(), Some(2));
    assert_eq!(meg(&["compute", "/nonexistent/graph"]).status.code(), Some(2));
    assert_eq!(meg(&["verify", "no-such-suite"]).status.code(), Some(2));
    let p3 = write(dir.path(), "p3", "3 2\n0 1\n1 2\n");
    assert_eq!(meg(&["delete", s(&p3), "--edge", "0 2"]).status.code(), Some(2));
    assert_eq!(meg(&["generate", "grid", "1"]).status.code(), Some(2));
}

#[test]
fn verify_is_byte_stable() {
    let args = ["--json", "--seed", "7", "--trials", "20", "verify", "tree-deletion"];
    let a = meg(&args);
    let b = meg(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    let r = &v["reports"][0];
    assert_eq!(r["instances"], 20);
    assert_eq!(r["violations"], 0);
    assert!(r.get("wall_time").is_none());
    let other = meg(&["--json", "--seed", "8", "--trials", "20", "verify", "tree-deletion"]);
    assert_ne!(a.stdout, other.stdout);
}

#[test]
fn generate_families() {
    let dir = tempfile::tempdir().unwrap();
    let ext = dir.path().join("ext");
    assert!(meg(&["generate", "extremal-tree", "2", "--pads", "1,0,2", "--out", s(&ext)]).status.success());
    let tag: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("ext.tag.json")).unwrap()).unwrap();
    assert_eq!(tag["tag"]["designated"].as_array().unwrap().len(), 2);
    let text = stdout(&meg(&["generate", "split-counterexample", "8"]));
    assert!(text.starts_with("8 "));
    let o = meg(&["--json", "--seed", "3", "generate", "random-tree", "9"]);
    assert_eq!(o.stdout, meg(&["--json", "--seed", "3", "generate", "random-tree", "9"]).stdout);
    let listed = stdout(&meg(&["list-suites"]));
    assert_eq!(listed.lines().count(), 14);
}
