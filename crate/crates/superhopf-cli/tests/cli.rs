//! End-to-end tests of the binary: determinism, round trips, verdict exit
//! codes, and the report lines the examples pin.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_superhopf"))
}

fn gallery(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("gallery")
        .join(name)
        .display()
        .to_string()
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn strip_time(s: &str) -> String {
    s.lines()
        .filter(|l| !l.starts_with("time_ms"))
        .collect::<Vec<_>>()
        .join("\n")
}

#[test]
fn reports_are_deterministic_modulo_timing() {
    let sweedler = gallery("sweedler.alg");
    for args in [
        vec!["integral", "builtin:exterior", "3"],
        vec!["torsor", "builtin:alphaq", "3", "1"],
        vec!["verify", sweedler.as_str()],
        vec!["lie", "dualbasis", "builtin:borel"],
        vec!["integral", "builtin:borel", "--window", "4"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert!(a.status.success(), "{args:?}: {}", String::from_utf8_lossy(&a.stderr));
        assert_eq!(
            strip_time(&stdout(&a)),
            strip_time(&stdout(&b)),
            "{args:?} not deterministic"
        );
    }
}

#[test]
fn exterior_integral_report_values() {
    let out = run(&["integral", "builtin:exterior", "3"]);
    let text = stdout(&out);
    assert!(text.contains("parity odd"));
    assert!(text.contains("unimodular true"));
    assert!(text.contains("right w1w2w3 1"));
    assert!(text.contains("total false"));
    assert!(text.contains("gamma_is_identity true"));
}

#[test]
fn alphaq_torsor_report_values() {
    let out = run(&["torsor", "builtin:alphaq", "3", "1"]);
    let text = stdout(&out);
    assert!(out.status.success());
    for line in [
        "dim_invariants 4",
        "strongly_free true",
        "beta_bijective true",
        "dim_relative_tensor 36",
        "dim_b_tensor_a 36",
        "projective true",
        "faithful true",
        "generator true",
        "torsor true",
        "trivializable_primitive_lift false",
    ] {
        assert!(text.contains(line), "missing `{line}` in:\n{text}");
    }
    // the τ = 0 control is trivializable
    let out = run(&["torsor", "builtin:alphaq", "3", "1", "--tau", "0"]);
    let text = stdout(&out);
    assert!(text.contains("torsor true"));
    assert!(text.contains("trivializable_primitive_lift true"));
}

#[test]
fn borel_reports() {
    let out = run(&["lie", "unimodular", "builtin:borel"]);
    let text = stdout(&out);
    assert!(text.contains("delta h 1"));
    assert!(text.contains("unimodular false"));

    let out = run(&["integral", "builtin:borel", "--window", "6"]);
    let text = stdout(&out);
    assert!(text.contains("phi w1 1"));
    assert!(text.contains("gamma t1"));
    assert!(text.contains("pi_gamma t1"));
    assert!(text.contains("unimodular false"));
    assert!(text.contains("window_verified true"));
}

#[test]
fn semisimple_lie_file_is_unimodular() {
    let out = run(&["lie", "unimodular", &gallery("osp12.lie")]);
    let text = stdout(&out);
    assert!(out.status.success());
    assert!(text.contains("delta h 0"));
    assert!(text.contains("unimodular true"));
}

#[test]
fn gl11_unimodular() {
    let out = run(&["lie", "unimodular", "builtin:gl11"]);
    let text = stdout(&out);
    assert!(text.contains("unimodular true"));
}

#[test]
fn parse_round_trips_gallery_files() {
    for name in [
        "exterior2.alg",
        "z2.alg",
        "sweedler.alg",
        "alphaq31.act",
        "borel.lie",
        "osp12.lie",
        "borel.laurent",
    ] {
        let path = gallery(name);
        let out = run(&["parse", &path]);
        assert!(out.status.success(), "{name}");
        let original = std::fs::read_to_string(&path).unwrap();
        assert_eq!(stdout(&out), original, "{name} round trip");
    }
}

#[test]
fn action_file_torsor_matches_builtin() {
    let out = run(&["torsor", &gallery("alphaq31.act")]);
    let text = stdout(&out);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(text.contains("torsor true"));
    assert!(text.contains("dim_invariants 4"));
}

#[test]
fn verify_commands() {
    for (input, expect) in [
        (gallery("exterior2.alg"), "verdict pass"),
        (gallery("sweedler.alg"), "verdict pass"),
        (gallery("gl11.lie"), "verdict pass"),
        (gallery("borel.laurent"), "verdict pass"),
        (gallery("alphaq31.act"), "axiom coaction ok"),
    ] {
        let out = run(&["verify", &input, "--window", "3"]);
        assert!(out.status.success(), "{input}");
        assert!(stdout(&out).contains(expect), "{input}");
    }
}

#[test]
fn failed_verdict_still_exits_zero() {
    // mutate a structure constant; the verdict is fail but the run succeeds
    let dir = std::env::temp_dir().join("superhopf-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let mutated = std::fs::read_to_string(gallery("exterior2.alg"))
        .unwrap()
        .replace("mult w1 w2 w1w2 1", "mult w1 w2 w1w2 2");
    let path = dir.join("mutated.alg");
    std::fs::write(&path, mutated).unwrap();
    let out = run(&["verify", path.to_str().unwrap(), "--witnesses"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("verdict fail"));
    assert!(text.contains("witness"), "{text}");
}

#[test]
fn errors_exit_nonzero() {
    // unreadable input
    let out = run(&["verify", "/nonexistent/file.alg"]);
    assert_eq!(out.status.code(), Some(1));
    // syntax error with line number
    let dir = std::env::temp_dir().join("superhopf-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("dup.alg");
    std::fs::write(&path, "algebra\nfield q\nbasis a 0\nbasis a 0\nend\n").unwrap();
    let out = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 4"));
    // usage error
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bosonized_torsor_flags_agree_with_base() {
    let base = stdout(&run(&["torsor", "builtin:alphaq", "3", "1"]));
    let hat = stdout(&run(&["torsor", "builtin:alphaq", "3", "1", "--bosonized"]));
    for key in ["beta_surjective", "beta_bijective", "torsor", "strongly_free"] {
        let get = |text: &str| {
            text.lines()
                .find(|l| l.starts_with(&format!("{key} ")))
                .map(str::to_string)
        };
        assert_eq!(get(&base), get(&hat), "{key}");
    }
    assert!(hat.contains("dim_relative_tensor 144"));
    assert!(hat.contains("injective_comodule true"));
}

#[test]
fn action_with_missing_reference_is_a_resolution_error() {
    let dir = std::env::temp_dir().join("superhopf-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("dangling.act");
    std::fs::write(&path, "action\na missing.alg\nb missing.alg\nend\n").unwrap();
    let out = run(&["torsor", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("missing.alg"));
}

#[test]
fn bosonize_writes_canonical_output() {
    let dir = std::env::temp_dir().join("superhopf-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("sweedler-out.alg");
    let out = run(&[
        "bosonize",
        "builtin:exterior",
        "1",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("dim_out 4"));
    assert!(text.contains("antipode_involutive false"));
    assert!(text.contains("antipode_order 4"));
    assert!(text.contains("mode noncommutative"));
    let written = std::fs::read_to_string(&path).unwrap();
    let golden = std::fs::read_to_string(gallery("sweedler.alg")).unwrap();
    assert_eq!(written, golden);
}

#[test]
fn field_flag_controls_builtins() {
    let out = run(&["integral", "builtin:z2", "--field", "fp:2"]);
    let text = stdout(&out);
    assert!(text.contains("field fp 2"));
    assert!(text.contains("total true"));
    let out = run(&["verify", "builtin:exterior", "2", "--field", "fp:7"]);
    assert!(stdout(&out).contains("verdict pass"));
    let out = run(&["verify", "builtin:exterior", "2", "--field", "fp:6"]);
    assert_eq!(out.status.code(), Some(2));
}
