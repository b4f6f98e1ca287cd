use std::io::Write;
use std::process::{Command, Output, Stdio};

const EXAMPLE: &str = "0 0 0 1\n0 1 0 0\n1 -1 1 0\n0 1 0 0\n";
const NONEQI: &str = "0 0 1 0\n1 0 -1 1\n0 1 0 0\n0 0 1 0\n";

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_asmprism"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(args: &[&str], stdin: &str) -> String {
    let out = run(args, stdin);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn every_polynomial_route_agrees() {
    let expected = "x1^3*x2^2 + x1^3*x2*x3\n";
    for model in ["bigr", "parabolic", "schubert-sum", "multidegree"] {
        assert_eq!(stdout(&["poly", "--model", model], EXAMPLE), expected, "{model}");
    }
    assert_eq!(stdout(&["poly"], NONEQI), "x1^3\n");
}

#[test]
fn reads_the_matrix_from_a_file() {
    let path = std::env::temp_dir().join(format!("asmprism-cli-{}.txt", std::process::id()));
    std::fs::write(&path, NONEQI).unwrap();
    let out = stdout(&["--asm", path.to_str().unwrap(), "perm-set"], "");
    std::fs::remove_file(&path).unwrap();
    assert_eq!(out, "3 4 1 2\n4 1 2 3\n");
}

#[test]
fn permutation_verbs() {
    assert_eq!(stdout(&["min-perm"], NONEQI), "4 1 2 3\n");
    assert_eq!(stdout(&["deg"], NONEQI), "3\n");
    assert_eq!(stdout(&["deg"], EXAMPLE), "5\n");
}

#[test]
fn diagram_verbs() {
    assert_eq!(stdout(&["diagram"], EXAMPLE), "(1,1) (1,2) (1,3) (2,1) (3,2)\n");
    assert_eq!(stdout(&["essential"], EXAMPLE), "(1,3) (2,1) (3,2)\n");
    assert_eq!(stdout(&["triangle"], EXAMPLE), "4\n2 4\n1 3 4\n1 2 3 4\n");
}

#[test]
fn prism_and_facet_listings() {
    let tableaux = stdout(&["prism", "list"], EXAMPLE);
    assert_eq!(tableaux.lines().count(), 2);
    let all = stdout(&["prism", "list", "--all"], EXAMPLE);
    assert_eq!(all.lines().count(), 6);
    let bigr = stdout(&["prism", "list", "--model", "bigr", "--all"], EXAMPLE);
    assert_eq!(bigr.lines().count(), 3);
    let fmax = stdout(&["facets", "--max"], EXAMPLE);
    assert_eq!(fmax.lines().count(), 2);
    assert!(stdout(&["facets"], EXAMPLE).lines().count() >= 2);
}

#[test]
fn ideal_verb() {
    let init = stdout(&["ideal", "--init"], EXAMPLE);
    assert_eq!(init, "z[1][1]\nz[1][2]\nz[1][3]\nz[2][1]\nz[2][2]*z[3][1]\n");
    let facets = stdout(&["ideal", "--facets"], EXAMPLE);
    assert!(!facets.is_empty());
}

#[test]
fn counting_and_structured_output() {
    assert_eq!(stdout(&["count", "5"], ""), "429\n");
    let line = stdout(&["--format", "structured", "count", "4"], "");
    let v: serde_json::Value = serde_json::from_str(line.trim()).unwrap();
    assert_eq!(v["count"], 42);
    let poly = stdout(&["--format", "structured", "poly"], NONEQI);
    let v: serde_json::Value = serde_json::from_str(poly.trim()).unwrap();
    assert_eq!(v["polynomial"], "x1^3");
}

#[test]
fn verify_checks_pass() {
    for check in ["theorem1", "bijection", "groebner", "lattice", "schur", "deg", "multidegree", "schubert"] {
        let out = stdout(&["--n", "3", "verify", check], "");
        assert!(out.starts_with("OK"), "{check}: {out}");
    }
    let out = stdout(&["--n", "3", "--relaxed", "verify", "theorem1"], "");
    assert!(out.starts_with("OK"));
}

#[test]
fn completion_of_a_partial_matrix() {
    let out = stdout(&["complete"], "0 1\n1 -1\n");
    let rows: Vec<&str> = out.lines().collect();
    assert!(rows.len() >= 2);
    assert!(rows[0].starts_with("0 1"));
    assert!(rows[1].starts_with("1 -1"));
}

#[test]
fn bad_input_exits_with_one() {
    let out = run(&["poly"], "1 2\n");
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
    let out = run(&["poly"], "1 0\n1 0\n");
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["verify", "nonsense"], "");
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["no-such-verb"], "");
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(run(&["--help"], "").status.code(), Some(0));
}
