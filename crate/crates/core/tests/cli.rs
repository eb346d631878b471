//! The command line, driven in-process.

use std::fs;
use std::path::{Path, PathBuf};

use tempfile::TempDir;
use zxcanon::cli::run;

const DATA: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/data");

fn data(name: &str) -> String {
    format!("{DATA}/{name}")
}

fn zxcf(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("zxcf").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn path(dir: &TempDir, name: &str) -> PathBuf {
    dir.path().join(name)
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn compile_validate_render_decompile() {
    let dir = TempDir::new().unwrap();
    let json = path(&dir, "shor.json");
    let dot = path(&dir, "shor.dot");
    let (code, _, err) = zxcf(&["compile", &data("shor.tab"), "-o", s(&json), "--dot", s(&dot)]);
    assert_eq!(code, 0, "{err}");
    assert!(fs::read_to_string(&dot).unwrap().starts_with("graph zxcf {"));

    let (code, out, _) = zxcf(&["validate", s(&json)]);
    assert_eq!((code, out.as_str()), (0, "ok\n"));

    let (code, out, _) = zxcf(&["render", s(&json)]);
    assert_eq!(code, 0);
    assert_eq!(out, fs::read_to_string(&dot).unwrap());

    let tab = path(&dir, "back.tab");
    assert_eq!(zxcf(&["decompile", s(&json), "-o", s(&tab)]).0, 0);
    let (code, out, _) = zxcf(&["eq", s(&tab), &data("shor.tab")]);
    assert_eq!((code, out.as_str()), (0, "equal\n"));
}

#[test]
fn compile_is_deterministic() {
    let first = zxcf(&["compile", &data("steane.tab")]);
    let second = zxcf(&["compile", &data("steane.tab")]);
    assert_eq!(first.0, 0);
    assert_eq!(first, second);
}

#[test]
fn circuits_compile_like_their_tableaus() {
    let (_, from_circuit, _) = zxcf(&["compile", &data("repetition.circ")]);
    let (_, from_tableau, _) = zxcf(&["compile", &data("repetition.tab")]);
    assert_eq!(from_circuit, from_tableau);
}

#[test]
fn equality_exit_codes() {
    let (code, out, err) = zxcf(&["eq", &data("repetition.circ"), &data("repetition_alt.circ"), "--oracle"]);
    assert_eq!((code, out.as_str()), (0, "equal\n"));
    assert!(err.contains("oracle: images equal"));

    let (code, out, _) = zxcf(&["eq", &data("repetition.tab"), &data("bell.tab")]);
    assert_eq!((code, out.as_str()), (1, "unequal\n"));

    let dir = TempDir::new().unwrap();
    let flipped = path(&dir, "flipped.tab");
    fs::write(&flipped, "-ZZ\n").unwrap();
    let (code, out, err) = zxcf(&["eq", &data("repetition.tab"), s(&flipped), "--oracle"]);
    assert_eq!((code, out.as_str()), (1, "unequal\n"));
    assert!(err.contains("oracle: images differ"));
}

#[test]
fn synth_output_is_a_circuit_for_the_same_code() {
    let dir = TempDir::new().unwrap();
    let circ = path(&dir, "five.circ");
    assert_eq!(zxcf(&["synth", &data("five_qubit.tab"), "-o", s(&circ)]).0, 0);
    assert!(fs::read_to_string(&circ).unwrap().contains("wires=5"));
    let (code, out, _) = zxcf(&["eq", s(&circ), &data("five_qubit.tab"), "--oracle"]);
    assert_eq!((code, out.as_str()), (0, "equal\n"));
}

#[test]
fn count_and_enumerate() {
    assert_eq!(zxcf(&["count", "2", "1"]), (0, "30 30 30\n".into(), String::new()));
    assert_eq!(zxcf(&["count", "1", "2"]).0, 2);

    let (code, out, _) = zxcf(&["enumerate", "2", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 30);
    let (_, limited, _) = zxcf(&["enumerate", "2", "1", "--limit", "4"]);
    assert_eq!(limited.lines().count(), 4);
    assert!(out.starts_with(&limited));

    let dir = TempDir::new().unwrap();
    for (i, line) in out.lines().enumerate() {
        let f = path(&dir, &format!("{i}.json"));
        fs::write(&f, line).unwrap();
        assert_eq!(zxcf(&["validate", s(&f)]).0, 0, "{line}");
    }
}

#[test]
fn rule_violations_exit_one() {
    let dir = TempDir::new().unwrap();
    let f = path(&dir, "bad.json");
    // Output 0 carries a Hadamard and a phase.
    fs::write(&f, r#"{"n":2,"k":2,"m":[],"a":[[0,1]],"phase":[1,0],"had":[true,false]}"#).unwrap();
    let (code, out, _) = zxcf(&["validate", s(&f)]);
    assert_eq!(code, 1);
    assert!(!out.is_empty() && out != "ok\n");
}

#[test]
fn errors_exit_two() {
    let dir = TempDir::new().unwrap();
    let missing = path(&dir, "missing.tab");
    let (code, _, err) = zxcf(&["compile", s(&missing)]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error:"));

    let anti = path(&dir, "anti.tab");
    fs::write(&anti, "XI\nZI\n").unwrap();
    assert_eq!(zxcf(&["compile", s(&anti)]).0, 2);

    let garbage = path(&dir, "garbage.json");
    fs::write(&garbage, "not json").unwrap();
    assert_eq!(zxcf(&["validate", s(&garbage)]).0, 2);

    assert_eq!(zxcf(&["frobnicate"]).0, 2);
    assert_eq!(zxcf(&["--help"]).0, 0);
}

#[test]
fn short_selftest_passes() {
    let (code, out, _) = zxcf(&["selftest", "--max-n", "3", "--limit", "20"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.lines().all(|l| l.starts_with("[PASS]") || l.starts_with("[WARN]") || l.starts_with("  ")), "{out}");
}
