//! Behavior of the mvp binary: exit codes, output bytes, determinism.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn mvp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mvp")).args(args).output().unwrap()
}

fn mvp_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mvp"))
        .args(args)
        .env(key, value)
        .output()
        .unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn temp_json(content: &str) -> tempfile::NamedTempFile {
    let mut file = tempfile::Builder::new().suffix(".json").tempfile().unwrap();
    file.write_all(content.as_bytes()).unwrap();
    file
}

fn fixture_arg(name: &str) -> String {
    fixture(name).to_str().unwrap().to_string()
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(code(&mvp(&["--help"])), 0);
    assert_eq!(code(&mvp(&["--version"])), 0);
    assert_eq!(code(&mvp(&["op", "--help"])), 0);
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(code(&mvp(&[])), 64);
    assert_eq!(code(&mvp(&["no-such-command"])), 64);
    assert_eq!(code(&mvp(&["graph", "--type", "A2"])), 64);
    assert_eq!(
        code(&mvp(&["graph", "--type", "A2", "--lambda", "1,1", "--depth", "2"])),
        64
    );
    assert_eq!(
        code(&mvp(&["graph", "--type", "A2", "--depth", "2", "--format", "svg"])),
        64
    );
    assert_eq!(code(&mvp(&["graph", "--type", "Z9", "--depth", "2"])), 64);
    assert_eq!(code(&mvp(&["op", "fj", "--j", "0", &fixture_arg("fix-a2.json")])), 64);
    assert_eq!(code(&mvp(&["op", "fj", "--j", "3", &fixture_arg("fix-a2.json")])), 64);
    assert_eq!(code(&mvp(&["verify", "/no/such/file.json"])), 64);
}

#[test]
fn verify_fixture_files() {
    for name in ["fix-a2.json", "fix-a2-f1.json", "fix-top-a2.json", "fix-c3-x2.json"] {
        let out = mvp(&["verify", &fixture_arg(name)]);
        assert_eq!(code(&out), 0, "{name}");
        let text = String::from_utf8(out.stdout).unwrap();
        assert!(text.contains("edge inequalities: "), "{name}: {text}");
        assert!(text.contains(", 0 violated"), "{name}: {text}");
        assert!(text.contains("tropical relations: "), "{name}: {text}");
        assert!(text.ends_with("ok\n"), "{name}: {text}");
    }
    // The A2 hexagon has one defined relation position and no doubly-laced
    // ones; the C3 file has some of the latter.
    let a2 = String::from_utf8(mvp(&["verify", &fixture_arg("fix-a2.json")]).stdout).unwrap();
    assert!(
        a2.contains("tropical relations: 1 hold, 0 vacuous, 0 unsupported, 0 violated"),
        "{a2}"
    );
    let c3 =
        String::from_utf8(mvp(&["verify", &fixture_arg("fix-c3-x2.json")]).stdout).unwrap();
    assert!(!c3.contains(" 0 unsupported"), "{c3}");
}

#[test]
fn verify_rejects_broken_output_with_diagnostics() {
    let out = mvp(&["verify", &fixture_arg("fix-c3-am1-x2.json")]);
    assert_eq!(code(&out), 2);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("lhs -2, rhs -3"), "{err}");
}

#[test]
fn unsupported_and_nonfinite_cartans() {
    let g2 = temp_json(
        r#"{"cartan": [[2,-1],[-3,2]], "labels": "none", "entries": []}"#,
    );
    assert_eq!(code(&mvp(&["verify", g2.path().to_str().unwrap()])), 3);
    let affine = temp_json(
        r#"{"cartan": [[2,-2],[-2,2]], "labels": "none", "entries": []}"#,
    );
    assert_eq!(code(&mvp(&["verify", affine.path().to_str().unwrap()])), 64);
}

#[test]
fn malformed_files_exit_64() {
    let not_json = temp_json("{");
    assert_eq!(code(&mvp(&["verify", not_json.path().to_str().unwrap()])), 64);

    let text = std::fs::read_to_string(fixture("fix-a2.json")).unwrap();
    let base = mvp::format::parse(&text).unwrap();
    let run = |file: &mvp::format::BZFile| {
        let tmp = temp_json(&mvp::format::render(file));
        let out = mvp(&["verify", tmp.path().to_str().unwrap()]);
        (code(&out), String::from_utf8(out.stderr).unwrap())
    };

    let mut dup = base.clone();
    dup.entries[0] = dup.entries[1].clone();
    let (c, err) = run(&dup);
    assert_eq!(c, 64);
    assert!(err.contains("duplicate"), "{err}");

    let mut missing = base.clone();
    missing.entries.pop();
    let (c, err) = run(&missing);
    assert_eq!(c, 64);
    assert!(err.contains("missing entry"), "{err}");

    let mut unknown_key = base.clone();
    unknown_key.entries[0].key = "L1:-7,1".into();
    unknown_key.entries[0].pretty = None;
    assert_eq!(run(&unknown_key).0, 64);

    let mut bad_level = base.clone();
    bad_level.entries[0].key = format!("L2:{}", &base.entries[0].key[3..]);
    bad_level.entries[0].pretty = None;
    assert_eq!(run(&bad_level).0, 64);

    let mut bad_pretty = base.clone();
    bad_pretty.entries[0].pretty = Some("13".into());
    assert_eq!(run(&bad_pretty).0, 64);

    let mut bad_labels = base.clone();
    bad_labels.labels = "B".into();
    assert_eq!(run(&bad_labels).0, 64);

    // Pretty names are only allowed with a chart.
    let mut chartless = base.clone();
    chartless.labels = "none".into();
    assert_eq!(run(&chartless).0, 64);
}

#[test]
fn lowering_matches_golden_file() {
    let out = mvp(&["op", "fj", "--j", "1", &fixture_arg("fix-a2.json")]);
    assert_eq!(code(&out), 0);
    let expect = std::fs::read(fixture("fix-a2-f1.json")).unwrap();
    assert_eq!(out.stdout, expect);
}

#[test]
fn raising_at_the_top_exits_one() {
    let out = mvp(&["op", "ej", "--j", "1", &fixture_arg("fix-top-a2.json")]);
    assert_eq!(code(&out), 1);
    assert!(out.stdout.is_empty());
    let out = mvp(&["op", "ejstar", "--j", "2", &fixture_arg("fix-top-a2.json")]);
    assert_eq!(code(&out), 1);
}

#[test]
fn raising_undoes_lowering_through_files() {
    let down = mvp(&["op", "fj", "--j", "2", &fixture_arg("fix-a2.json")]);
    assert_eq!(code(&down), 0);
    let down_file = temp_json(std::str::from_utf8(&down.stdout).unwrap());
    let up = mvp(&["op", "ej", "--j", "2", down_file.path().to_str().unwrap()]);
    assert_eq!(code(&up), 0);
    assert_eq!(up.stdout, std::fs::read(fixture("fix-a2.json")).unwrap());

    let starred = mvp(&["op", "fjstar", "--j", "1", &fixture_arg("fix-a2.json")]);
    assert_eq!(code(&starred), 0);
    let starred_file = temp_json(std::str::from_utf8(&starred.stdout).unwrap());
    let back = mvp(&["op", "ejstar", "--j", "1", starred_file.path().to_str().unwrap()]);
    assert_eq!(code(&back), 0);
    assert_eq!(back.stdout, std::fs::read(fixture("fix-a2.json")).unwrap());
}

#[test]
fn candidate_operator_report_and_output() {
    let out = mvp(&["op", "am", "--j", "1", &fixture_arg("fix-c3-x2.json")]);
    assert_eq!(code(&out), 0);
    assert_eq!(out.stdout, std::fs::read(fixture("fix-c3-am1-x2.json")).unwrap());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("c = -1"), "{err}");
    assert!(err.contains("first lhs = -2, rhs = -3"), "{err}");
    assert!(err.contains("equals f: no"), "{err}");
    assert!(err.contains("contained in f image: yes"), "{err}");
}

#[test]
fn counterexample_command_round_trips() {
    let out = mvp(&["counterexample"]);
    assert_eq!(code(&out), 0);
    assert_eq!(out.stdout, std::fs::read(fixture("fix-c3-x2.json")).unwrap());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("input vertices: (0,0,0), (0,0,2), (0,2,0), (0,2,2)"), "{err}");
    assert!(err.contains("letter 1: c = -1"), "{err}");
    assert!(err.contains("first lhs = -2, rhs = -3"), "{err}");
    assert!(err.contains("  1-3 = -3"), "{err}");
    assert!(err.contains("  1-2-3 = -4"), "{err}");
    assert!(err.contains("at 1-2: -3 there, candidate -2"), "{err}");
    assert!(
        err.contains(
            "true image vertices: (-1,1,0), (-1,1,2), (-1,2,1), \
             (0,0,0), (0,0,2), (0,2,0), (0,2,2)"
        ),
        "{err}"
    );
    let again = mvp(&["counterexample", "--x", "2"]);
    assert_eq!(again.stdout, out.stdout);
    let wide = String::from_utf8(mvp(&["counterexample", "--x", "3"]).stderr).unwrap();
    assert!(wide.contains("  1-3 = -4"), "{wide}");
    assert!(
        wide.contains(
            "true image vertices: (-1,1,0), (-1,1,3), (-1,2,1), (-1,2,2), \
             (0,0,0), (0,0,3), (0,2,0), (0,2,3)"
        ),
        "{wide}"
    );
    assert_eq!(code(&mvp(&["counterexample", "--x", "1"])), 2);
}

#[test]
fn graph_output_is_deterministic() {
    let a = mvp(&["graph", "--type", "C2", "--lambda", "1,1", "--format", "json"]);
    let b = mvp(&["graph", "--type", "C2", "--lambda", "1,1", "--format", "json"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());

    let c = mvp(&["graph", "--type", "A2", "--depth", "3"]);
    let d = mvp(&["graph", "--type", "A2", "--depth", "3"]);
    assert_eq!(code(&c), 0);
    assert_eq!(c.stdout, d.stdout);
    let dot = String::from_utf8(c.stdout).unwrap();
    assert!(dot.starts_with("digraph crystal {"));
    assert!(dot.contains("label=\"1\""));
}

#[test]
fn graph_respects_word_and_cap() {
    let out = mvp(&["graph", "--type", "A2", "--depth", "2", "--word", "2,1,2", "--format", "json"]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8(out.stdout).unwrap().contains("\"word\": ["));

    let capped = mvp_env(&["graph", "--type", "A2", "--depth", "6"], "MVP_NODE_CAP", "5");
    assert_eq!(code(&capped), 4);
    let bad_cap = mvp_env(&["graph", "--type", "A2", "--depth", "2"], "MVP_NODE_CAP", "lots");
    assert_eq!(code(&bad_cap), 64);

    let bad_word = mvp(&["graph", "--type", "A2", "--depth", "2", "--word", "1,2"]);
    assert_eq!(code(&bad_word), 2);
    let bad_letter = mvp(&["graph", "--type", "A2", "--depth", "2", "--word", "1,2,9"]);
    assert_eq!(code(&bad_letter), 64);
}

#[test]
fn scan_reports_failures() {
    let clean = mvp(&["amscan", "--type", "A2", "--depth", "3"]);
    assert_eq!(code(&clean), 0);
    let text = String::from_utf8(clean.stdout).unwrap();
    assert_eq!(text.lines().last(), Some("0 failures"), "{text}");

    let broken = mvp(&["amscan", "--type", "C3", "--depth", "6", "--j", "1"]);
    assert_eq!(code(&broken), 0);
    let text = String::from_utf8(broken.stdout).unwrap();
    assert!(text.contains("failure node = "), "{text}");
    let last = text.lines().last().unwrap();
    assert!(last.ends_with(" failures"), "{text}");
    assert_ne!(last, "0 failures", "{text}");
}

#[test]
fn non_dominant_lambda_is_rejected() {
    let out = mvp(&["graph", "--type", "A2", "--lambda", "1,-1"]);
    assert_eq!(code(&out), 2);
}
