use std::path::PathBuf;
use std::process::{Command, Output};

fn u3(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_u3")).args(args).output().expect("run u3")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn file(name: &str, body: &str) -> String {
    let p = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&p, body).unwrap();
    p.to_string_lossy().into_owned()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout(o)).expect("json output")
}

#[test]
fn roots_counts() {
    let o = u3(&["roots", "--max-depth", "2"]);
    assert!(o.status.success());
    assert_eq!(json(&o).as_array().unwrap().len(), 9);
    let o = u3(&["roots", "--max-height", "1"]);
    let rows = json(&o);
    assert_eq!(rows.as_array().unwrap().len(), 3);
    assert_eq!(rows[0]["height"], 1);
    let o = u3(&["roots", "--max-depth", "3", "--format", "tsv"]);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 22);
    assert!(lines[0].starts_with("x\ty\tz\tdepth"));
}

#[test]
fn inversion_set_of_a_word() {
    let o = u3(&["inv", "121"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["length"], 3);
    assert_eq!(v["inversions"], serde_json::json!(["[1,0,0]", "[2,1,0]", "[3,2,0]"]));
}

#[test]
fn usage_errors_are_one_line_with_exit_2() {
    for args in [
        &["roots", "--bogus"][..],
        &["roots"][..],
        &["inv", "14"][..],
        &["roots", "--max-depth", "0"][..],
        &["snake", "--input", "/nonexistent/file.json"][..],
        &["check", "no-such-suite"][..],
    ] {
        let o = u3(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        let e = stderr(&o);
        assert_eq!(e.trim_end().lines().count(), 1, "{args:?}: {e}");
        assert!(e.starts_with("error: usage:"), "{args:?}: {e}");
    }
}

#[test]
fn invalid_descriptor_is_a_usage_error() {
    let p = file("bad.json", r#"{"kind":"infinite","line":[1,1,-1],"side":"far","boundary":{"side":"left","mode":"cofinite","k":1}}"#);
    let o = u3(&["snake", "--input", &p]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("without roots"));
}

#[test]
fn snake_meets_for_a_finite_set() {
    let p = file("f12.json", r#"{"kind":"finite","word":[1,2]}"#);
    let trace = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("f12.trace.json");
    let o = u3(&["snake", "--input", &p, "--trace", trace.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o).trim(), "MeetAt s1 s2; enclosed edges: 2; separation: verified (3 tangent lines)");
    let t: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(trace).unwrap()).unwrap();
    assert!(t["s1"].is_array() && t["s2"].is_array());
}

#[test]
fn snake_limits_for_a_half_plane() {
    let p = file("sec.json", r#"{"kind":"infinite","line":[1,1,-2],"side":"far","boundary":{"side":"left","mode":"cofinite","k":1}}"#);
    let svg = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("sec.svg");
    let o = u3(&["snake", "--input", &p, "--svg", svg.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o).trim(), "Limits: two disjoint arcs; H_snake = [1,1,-2]; separation: verified");
    assert!(std::fs::read_to_string(svg).unwrap().contains("<polyline class=\"snake\""));
}

#[test]
fn monochromatic_input_fails_with_exit_1() {
    let p = file("empty.json", r#"{"kind":"finite","word":[]}"#);
    let o = u3(&["snake", "--input", &p]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stderr(&o).trim_end().lines().count(), 1);
}

#[test]
fn bipartition_input() {
    // Inv(s1 s2) stored as an explicit coloring
    let p = file("bp.json", r#"{"depth":6,"red":[[1,0,0],[2,1,0]]}"#);
    let o = u3(&["snake", "--input", &p, "--depth", "6"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).starts_with("MeetAt s1 s2;"));
    let bad = file("bp_bad.json", r#"{"depth":6,"red":[[1,1,0]]}"#);
    assert_eq!(u3(&["snake", "--input", &bad]).status.code(), Some(2));
}

#[test]
fn closure_and_join() {
    let a = file("ja.json", r#"{"kind":"finite","word":[1]}"#);
    let b = file("jb.json", r#"{"kind":"finite","word":[2]}"#);
    let o = u3(&["join", "--input", &a, &b, "--N", "10", "--M", "30", "--verify"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v = json(&o);
    assert_eq!(v["verified"], true);
    assert_eq!(v["stable"], true);
    let roots = file("two.json", r#"{"height_bound":10,"roots":[[1,0,0],[0,1,0]]}"#);
    let o = u3(&["closure", "--two", "--input", &roots, "--N", "10", "--M", "30"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let o2 = u3(&["closure", "--convex", "--input", &roots, "--N", "10", "--M", "30"]);
    assert!(o2.status.success(), "{}", stderr(&o2));
    assert_eq!(json(&o)["set"], json(&o2)["set"]);
}

#[test]
fn check_exit_codes() {
    let o = u3(&["check", "heightnorm", "--depth", "6"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("PASS criterion 1 heightnorm"));
    let o = u3(&["check", "svg", "--json"]);
    assert!(o.status.success());
    assert_eq!(json(&o)["passed"], true);
}

#[test]
fn render_is_deterministic() {
    let a = u3(&["render", "--depth", "4"]);
    let b = u3(&["render", "--depth", "4"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).starts_with("<?xml"));
}
