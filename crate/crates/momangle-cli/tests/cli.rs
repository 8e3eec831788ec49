//! End-to-end tests of the momangle binary: exit codes, output text,
//! the JSON envelope, and the .scx round trip.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_momangle"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_scx(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn skeleton_emits_golden_text_and_round_trips() {
    let out = run(&["skeleton", "4", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text, "vertices: 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");

    // Feeding the printed document back in reproduces the same complex.
    let dir = TempDir::new().unwrap();
    let path = write_scx(&dir, "k.scx", &text);
    let direct = momangle::scomplex::SimplicialComplex::skeleton(4, 2).unwrap();
    let wedge = momangle::decomposer::decompose(&direct).unwrap();
    let expected = format!("{}\n", wedge.realize(1).unwrap());
    let out = run(&["decompose", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), expected);
}

#[test]
fn decompose_matches_published_multiset() {
    let dir = TempDir::new().unwrap();
    let path = write_scx(&dir, "pts3.scx", "vertices: 3\n1\n2\n3\n");
    let out = run(&["decompose", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "S^3 x3, S^4 x2\n");
}

#[test]
fn poincare_prints_coefficients_and_equality_tag() {
    let dir = TempDir::new().unwrap();
    let path = write_scx(&dir, "pts3.scx", "vertices: 3\n1\n2\n3\n");
    let out = run(&["poincare", "--order", "4", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("coefficients: 1 3 6 12 24"), "{text}");
    assert!(text.contains("equality (Golod: shifted)"), "{text}");
}

#[test]
fn poincare_tags_upper_bound_without_certificate() {
    let dir = TempDir::new().unwrap();
    // The 4-cycle is not shifted under any vertex order.
    let path = write_scx(&dir, "cyc.scx", "vertices: 4\n1 3\n1 4\n2 3\n2 4\n");
    let out = run(&["poincare", "--order", "4", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("upper bound"), "{}", stdout(&out));
}

#[test]
fn oracle_check_agrees_on_a_skeleton() {
    let dir = TempDir::new().unwrap();
    let text = stdout(&run(&["skeleton", "6", "3"]));
    let path = write_scx(&dir, "s63.scx", &text);
    let out = run(&["oracle-check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "agree\n");
}

#[test]
fn exit_codes_follow_the_contract() {
    let dir = TempDir::new().unwrap();

    // 0 (success) is covered above; 1: domain errors and bad usage.
    let cyc = write_scx(&dir, "cyc.scx", "vertices: 4\n1 3\n1 4\n2 3\n2 4\n");
    let out = run(&["decompose", cyc.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("not shifted"), "{}", stderr(&out));

    let out = run(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(1));

    let out = run(&["decompose"]);
    assert_eq!(out.status.code(), Some(1));

    let missing = dir.path().join("missing.scx");
    let out = run(&["betti", missing.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));

    // 2: size-cap refusals.
    let mut big = String::from("vertices: 12\n");
    big.push_str("1 2\n");
    let big = write_scx(&dir, "big.scx", &big);
    let out = run(&["is-shifted", "--search", big.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("at most 10"), "{}", stderr(&out));

    let wide = write_scx(&dir, "wide.scx", "vertices: 21\n1\n");
    let out = run(&["betti", wide.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("at most 20"), "{}", stderr(&out));

    // --help succeeds.
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn parse_errors_name_the_line() {
    let dir = TempDir::new().unwrap();

    let dup = write_scx(&dir, "dup.scx", "vertices: 2\n1 1\n");
    let out = run(&["betti", dup.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(
        stderr(&out).contains("line 2: duplicate vertex"),
        "{}",
        stderr(&out)
    );

    let range = write_scx(&dir, "range.scx", "vertices: 2\n1\n3\n");
    let out = run(&["betti", range.to_str().unwrap()]);
    assert!(stderr(&out).contains("line 3"), "{}", stderr(&out));

    let headerless = write_scx(&dir, "head.scx", "1 2\nvertices: 2\n");
    let out = run(&["betti", headerless.to_str().unwrap()]);
    assert!(stderr(&out).contains("line 1"), "{}", stderr(&out));
}

#[test]
fn json_envelope_is_complete_and_repeatable() {
    let dir = TempDir::new().unwrap();
    let path = write_scx(&dir, "pts3.scx", "vertices: 3\n1\n2\n3\n");
    let first = run(&["--json", "betti", path.to_str().unwrap()]);
    let second = run(&["--json", "betti", path.to_str().unwrap()]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout, "JSON output must be stable");

    let text = stdout(&first);
    assert_eq!(text.lines().count(), 1, "one line of JSON");
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    let obj = value.as_object().unwrap();
    for key in ["command", "input_hash", "result", "warnings", "millis"] {
        assert!(obj.contains_key(key), "missing {key}");
    }
    assert_eq!(obj["command"], "betti");
    assert_eq!(obj["millis"], 0);
    let hash = obj["input_hash"].as_str().unwrap();
    assert!(hash.starts_with("sha256:") && hash.len() == 7 + 64);
}

#[test]
fn compose_union_reports_wedge_and_plausibility() {
    let dir = TempDir::new().unwrap();
    let edge = write_scx(&dir, "edge.scx", "vertices: 2\n1 2\n");
    let pt = write_scx(&dir, "pt.scx", "vertices: 1\n1\n");
    let out = run(&[
        "compose",
        "union",
        edge.to_str().unwrap(),
        pt.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("t = 0"), "{text}");
    assert!(text.contains("spheres: S^3 x2, S^4 x1"), "{text}");
    assert!(text.contains("t0 plausible: yes"), "{text}");
}

#[test]
fn compose_rejects_face_outside_glue() {
    let dir = TempDir::new().unwrap();
    let pt = write_scx(&dir, "pt.scx", "vertices: 1\n1\n");
    let out = run(&[
        "compose",
        "union",
        "--face",
        "1=1",
        pt.to_str().unwrap(),
        pt.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(
        stderr(&out).contains("--face only applies to glue"),
        "{}",
        stderr(&out)
    );
}

#[test]
fn trace_lists_every_regular_step() {
    let dir = TempDir::new().unwrap();
    let path = write_scx(&dir, "path.scx", "vertices: 3\n1 2\n1 3\n");
    let out = run(&["decompose", "--trace", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("initial fibre: "), "{text}");
    assert!(text.contains("step 1 (iteration1, adjoin {1,2})"), "{text}");
    assert!(text.contains("step 2 (iteration1, adjoin {1,3})"), "{text}");
    assert!(text.contains("final fibre: Sigma^1 Omega{2,3}"), "{text}");
    assert!(text.ends_with("S^3 x1\n"), "{text}");
}
