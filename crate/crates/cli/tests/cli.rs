use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn gcsets(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gcsets")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).to_string_lossy().into_owned()
}

fn generate(dir: &TempDir, kind: &str, degree: &str, seed: &str) -> String {
    let file = path(dir, &format!("{kind}-{degree}-{seed}.json"));
    let out = gcsets(&["generate", "--kind", kind, "--degree", degree, "--seed", seed, "-o", &file]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    file
}

#[test]
fn generate_every_kind() {
    let dir = TempDir::new().unwrap();
    for kind in ["chung-yao", "carnicer-gasca", "principal", "cg-prescribed"] {
        let file = generate(&dir, kind, "3", "2");
        let text = fs::read_to_string(&file).unwrap();
        assert_eq!(text.matches("\"/").count() + text.matches('[').count() > 0, true);
        let out = gcsets(&["analyze", &file]);
        assert!(out.status.success());
        assert!(stdout(&out).contains("3-correct: yes"));
    }
}

#[test]
fn analyze_principal_lattice() {
    let dir = TempDir::new().unwrap();
    let file = generate(&dir, "principal", "2", "1");
    let text = stdout(&gcsets(&["analyze", &file]));
    assert!(text.contains("classification: carnicer-gasca"));
    assert!(text.contains("maximal lines: 3"));
}

#[test]
fn fundpoly_with_and_without_factorization() {
    let dir = TempDir::new().unwrap();
    let file = generate(&dir, "principal", "2", "1");
    let plain = stdout(&gcsets(&["fundpoly", &file, "--node", "0"]));
    assert!(plain.contains("p* = 1 - 3/2*x - 3/2*y + 1/2*x^2 + x*y + 1/2*y^2"));
    assert!(!plain.contains("factorization"));
    let factored = stdout(&gcsets(&["fundpoly", &file, "--node", "0", "--factor"]));
    assert!(factored.contains("factorization:\n  x + y - 2 = 0\n  x + y - 1 = 0\n"));
    assert_eq!(gcsets(&["fundpoly", &file, "--node", "6"]).status.code(), Some(2));
}

#[test]
fn fundpoly_reports_missing_factorization() {
    let dir = TempDir::new().unwrap();
    let file = path(&dir, "perturbed.json");
    fs::write(
        &file,
        r#"{"degree":2,"nodes":[["0","0"],["1","0"],["2","0"],["0","1"],["4/3","5/7"],["0","2"]]}"#,
    )
    .unwrap();
    let out = stdout(&gcsets(&["fundpoly", &file, "--node", "0", "--factor"]));
    assert!(out.contains("no census factorization"), "{out}");
    let out = stdout(&gcsets(&["fundpoly", &file, "--node", "4", "--factor"]));
    assert!(out.contains("factorization:\n  y = 0\n  x = 0\n"), "{out}");
}

#[test]
fn triplets_all_and_by_node() {
    let dir = TempDir::new().unwrap();
    let file = generate(&dir, "principal", "2", "1");
    let by_node = stdout(&gcsets(&["triplets", &file, "--node", "0"]));
    assert!(by_node.starts_with("special triplets: 1\n"));
    let all = stdout(&gcsets(&["triplets", &file, "--all"]));
    assert_eq!(all, stdout(&gcsets(&["triplets", &file])));
    assert!(!gcsets(&["triplets", &file, "--all", "--node", "1"]).status.success());
}

#[test]
fn verify_exit_codes() {
    let dir = TempDir::new().unwrap();
    let file = generate(&dir, "cg-prescribed", "3", "1");
    for suite in ["all", "usage-bound", "collinearity", "peel", "gc6"] {
        let out = gcsets(&["verify", &file, "--suite", suite]);
        assert_eq!(out.status.code(), Some(0), "{suite}: {}", stdout(&out));
        assert!(!stdout(&out).contains(" fail "));
    }
    assert_eq!(gcsets(&["verify", &file, "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(gcsets(&["verify", &path(&dir, "missing.json"), "--suite", "all"]).status.code(), Some(2));
    let bad = path(&dir, "bad.json");
    fs::write(&bad, r#"{"degree":1,"nodes":[["0","0"],["0","0"],["0","1"]]}"#).unwrap();
    assert_eq!(gcsets(&["verify", &bad, "--suite", "all"]).status.code(), Some(2));
}

#[test]
fn verify_non_correct_set_is_vacuous() {
    let dir = TempDir::new().unwrap();
    let file = path(&dir, "moved.json");
    fs::write(&file, r#"{"degree":2,"nodes":[["0","0"],["1","0"],["2","0"],["0","1"],["1","1"],["3","0"]]}"#).unwrap();
    let out = gcsets(&["verify", &file, "--suite", "usage-bound"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.lines().all(|l| l.contains(" vacuous ")), "{text}");
}

#[test]
fn render_is_deterministic_and_highlights() {
    let dir = TempDir::new().unwrap();
    let file = generate(&dir, "cg-prescribed", "3", "1");
    let a = path(&dir, "a.svg");
    let b = path(&dir, "b.svg");
    assert!(gcsets(&["render", &file, "-o", &a]).status.success());
    assert!(gcsets(&["render", &file, "-o", &b, "--min-k", "3"]).status.success());
    let svg = fs::read_to_string(&a).unwrap();
    assert_eq!(svg, fs::read_to_string(&b).unwrap());
    assert_eq!(svg.matches("class=\"used2\"").count(), 3);
    let c = path(&dir, "c.svg");
    assert!(gcsets(&["render", &file, "-o", &c, "--min-k", "2", "--highlight", "0"]).status.success());
    let all_lines = fs::read_to_string(&c).unwrap();
    assert_eq!(all_lines.matches("<line class=\"line").count(), 25);
    assert_eq!(gcsets(&["render", &file, "-o", &c, "--highlight", "99"]).status.code(), Some(2));
    assert!(Path::new(&c).exists());
}
