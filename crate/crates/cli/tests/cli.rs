use std::path::{Path, PathBuf};
use std::process::Command;

use polypres_cli::run;

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

/// `(exit code, stdout, stderr)`.
fn polypres(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("polypres").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn heawood_is_a_generalized_triangle() {
    let (code, out, _) = polypres(&["check-graph", &data("heawood.tab"), "--m-gon", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("generalized 3-gon: yes"), "{out}");
    assert!(out.contains("girth 6; diameter 3"));
}

#[test]
fn complete_bipartite_is_not_a_generalized_triangle() {
    let (code, out, _) = polypres(&["check-graph", &data("k33.tab"), "--m-gon", "3"]);
    assert_eq!(code, 1);
    assert!(out.contains("generalized 3-gon: no (girth 4, expected 6)"), "{out}");
}

#[test]
fn theorem4_reports_genus() {
    let (code, out, _) = polypres(&["theorem4", "--m", "4"]);
    assert_eq!(code, 0);
    assert!(out.contains("genus = 3"));
    assert!(out.contains("W = a1 b1 b2' a1' "));
    assert!(out.contains("centre link: 8-cycle"));
    let (code, _, err) = polypres(&["theorem4", "--m", "5"]);
    assert_eq!(code, 2);
    assert!(err.contains("bad parameter"));
}

#[test]
fn wicks_check_reports_first_violation() {
    let (code, out, _) = polypres(&["wicks-check", "a a' b b'"]);
    assert_eq!(code, 1);
    assert!(out.contains("condition (ii) violated at position 0"), "{out}");
    let (code, out, _) = polypres(&["wicks-check", "a b a' b'"]);
    assert_eq!(code, 0);
    assert!(out.contains("oriented Wicks form"));
}

#[test]
fn words_from_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w.txt");
    std::fs::write(&path, "a b c\na' b' c'\n").unwrap();
    let arg = format!("@{}", path.display());
    let (code, out, _) = polypres(&["wicks-genus", &arg]);
    assert_eq!(code, 0);
    assert!(out.contains("genus = 1"));
    assert!(out.contains("vertices = 2, edges = 3"));
    let (code, _, err) = polypres(&["wicks-genus", "@/nonexistent/word"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error:"));
}

#[test]
fn malformed_input_exits_two() {
    let (code, _, err) = polypres(&["wicks-check", "a'' b"]);
    assert_eq!(code, 2);
    assert!(!err.is_empty());
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.tab");
    std::fs::write(&bad, "x1: y1\n").unwrap();
    let (code, _, err) = polypres(&["check-graph", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 1"), "{err}");
    let (code, _, _) = polypres(&["no-such-command"]);
    assert_eq!(code, 2);
    let (code, _, _) = polypres(&["wicks-enum", "--max", "12"]);
    assert_eq!(code, 2);
}

fn build(dir: &Path, name: &str, args: &[&str]) -> PathBuf {
    let out = dir.join(name);
    let mut argv = vec!["build"];
    argv.extend_from_slice(args);
    let o = out.to_str().unwrap().to_string();
    argv.extend(["--out", &o]);
    let (code, stdout, err) = polypres(&argv);
    assert_eq!(code, 0, "{err}");
    assert!(stdout.starts_with("wrote "));
    out
}

#[test]
fn build_round_trips_through_verification() {
    let dir = tempfile::tempdir().unwrap();
    for (name, args) in [
        ("a.pres", vec![data("k22.tab"), "--k".into(), "2".into()]),
        ("b.pres", vec![data("heawood.tab"), "--k".into(), "3".into()]),
        ("c.pres", vec![data("k33.tab"), data("k33.tab"), "--seed".into(), "7".into()]),
    ] {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let p = build(dir.path(), name, &args);
        let p = p.to_str().unwrap();
        let (code, out, _) = polypres(&["verify-presentation", p]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("axiom (3): ok"));
        let (code, out, _) = polypres(&["verify-links", p]);
        assert_eq!(code, 0, "{out}");
        assert!(out.ends_with("links: ok\n"));
    }
}

#[test]
fn build_is_reproducible_for_a_seed() {
    let dir = tempfile::tempdir().unwrap();
    let h = data("heawood.tab");
    let a = build(dir.path(), "a.pres", &[&h, "--k", "2", "--seed", "42"]);
    let b = build(dir.path(), "b.pres", &[&h, "--k", "2", "--seed", "42"]);
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let (code, stdout, _) = polypres(&["build", &h, "--k", "2", "--seed", "42"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.as_bytes(), std::fs::read(&a).unwrap());
}

#[test]
fn complex_commands() {
    let dir = tempfile::tempdir().unwrap();
    let p = build(dir.path(), "p.pres", &[&data("k22.tab"), "--k", "3"]);
    let p = p.to_str().unwrap();
    let (code, out, _) = polypres(&["check-mn", p]);
    assert_eq!(code, 0);
    assert_eq!(out, "m = 4, n = 6, mn >= 2(m + n): yes\n");
    let (code, out, _) = polypres(&["build-complex", p]);
    assert_eq!(code, 0);
    assert!(out.starts_with("cells: 6 vertices, 12 edges, 4 faces\n"), "{out}");
    let (code, out, _) = polypres(&["--format", "tableau", "build-complex", p]);
    assert_eq!(code, 0);
    assert_eq!(out.matches("graph v").count(), 6);
    let (code, out, _) = polypres(&["verify-links", p, "--graphs", &data("heawood.tab")]);
    assert_eq!(code, 1);
    assert!(out.contains("6 vertices but 1 graphs"));
}

#[test]
fn compat_and_periodic() {
    let (code, out, _) = polypres(&["compat", &data("k22.tab"), &data("c8.tab")]);
    assert_eq!(code, 1);
    assert!(out.starts_with("incompatible"));
    let (code, out, _) = polypres(&["compat", &data("k22.tab"), &data("k22.tab")]);
    assert_eq!(code, 0);
    assert!(out.starts_with("compatible\n"));

    let dir = tempfile::tempdir().unwrap();
    let p2 = build(dir.path(), "p2.pres", &[&data("k33.tab"), "--k", "2"]);
    let (code, out, _) = polypres(&["periodic", p2.to_str().unwrap()]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("s = 2\n"));
    assert!(out.contains("quadratic: yes"));
    assert!(out.contains("rectangle angle sums: yes"));
    let hyperbolic = build(dir.path(), "h.pres", &[&data("heawood.tab"), "--k", "2"]);
    let (code, out, _) = polypres(&["periodic", hyperbolic.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.starts_with("no flat strip: "), "{out}");
    let p3 = build(dir.path(), "p3.pres", &[&data("k22.tab"), "--k", "3"]);
    let (code, _, err) = polypres(&["periodic", p3.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("x y u v"));
}

#[test]
fn theorem3_reports_the_genus_it_finds() {
    let (code, out, _) = polypres(&["theorem3", "--k", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("genus = 2\n"));
    let (code, out, _) = polypres(&["theorem3", "--k", "5"]);
    assert_eq!(code, 1);
    assert!(out.contains("genus = 4\n"));
    assert!(out.contains("target genus 2k - 4 = 6: not met"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_polypres");
    let status = Command::new(bin).args(["wicks-check", "a b a' b'"]).output().unwrap().status;
    assert_eq!(status.code(), Some(0));
    let status = Command::new(bin).args(["wicks-check", "a a' b b'"]).output().unwrap();
    assert_eq!(status.status.code(), Some(1));
    let status = Command::new(bin).args(["wicks-check", "a''"]).output().unwrap();
    assert_eq!(status.status.code(), Some(2));
    assert!(!status.stderr.is_empty());
}
