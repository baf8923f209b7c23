use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const FIELD_ALGEBRA: &str = "field: 2\nname: K\ndim: 1\nunit: 1\nmul 0 0: 1\n";

const DUAL: &str = "\
# F[x]/(x^2)
field: 2
name: D
dim: 2
unit: 1 0
mul 0 0: 1 0
mul 0 1: 0 1
mul 1 0: 0 1
mul 1 1: 0 0
";

const TRI: &str = "\
field: 2
name: S
dim: 3
unit: 1 0 1
mul 0 0: 1 0 0
mul 0 1: 0 1 0
mul 0 2: 0 0 0
mul 1 0: 0 0 0
mul 1 1: 0 0 0
mul 1 2: 0 1 0
mul 2 0: 0 0 0
mul 2 1: 0 0 0
mul 2 2: 0 0 1
";

const N: &str = "\
field: 2
name: N
algebra: S
dim: 1
left 0:
0
left 1:
0
left 2:
1
right 0:
1
right 1:
0
right 2:
0
";

fn algcoh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_algcoh")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn cohomology_of_dual_numbers() {
    let dir = TempDir::new().unwrap();
    let k = write(&dir, "k.alg", FIELD_ALGEBRA);
    let out = algcoh(&["cohomology", s(&k)]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    for line in ["H¹(K⋉K) = 2", "Der(K⋉K) = 2", "Der(K,K) = 0", "der = 1", "E(K) = 1", "decomposition.h1: pass"] {
        assert!(text.contains(line), "missing `{line}`:\n{text}");
    }
}

#[test]
fn fixture_example_sn() {
    let out = algcoh(&["fixture", "example_SN", "--field", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    for line in ["h¹ = 1", "H¹(S,N) = 0", "E(N) = 0", "triangular representation: none"] {
        assert!(text.contains(line), "missing `{line}`:\n{text}");
    }
}

#[test]
fn fixture_over_rationals() {
    let out = algcoh(&["fixture", "tri_fff", "--field", "Q"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("over Q"));
}

#[test]
fn unknown_fixture_is_input_error() {
    let out = algcoh(&["fixture", "nope"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("unknown fixture"));
}

#[test]
fn check_paper_passes_and_is_deterministic() {
    let a = algcoh(&["check-paper"]);
    let b = algcoh(&["check-paper"]);
    assert_eq!(a.status.code(), Some(0), "{}", stderr(&a));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn check_paper_with_corrupted_fixture_fails() {
    let out = algcoh(&["check-paper", "--corrupt", "example_SN"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(
        stderr(&out).contains("check failed: example_SN.no_triangular_representation.F2"),
        "{}",
        stderr(&out)
    );
    assert!(stdout(&out).contains("example_SN.no_triangular_representation.F2: FAIL"));
}

#[test]
fn not_prime_field() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.alg", &DUAL.replace("field: 2", "field: 4"));
    let out = algcoh(&["validate", s(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("4 is not prime"), "{}", stderr(&out));
}

#[test]
fn missing_mul_line_is_named() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.alg", &DUAL.replace("mul 1 1: 0 0\n", ""));
    let out = algcoh(&["validate", s(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("mul 1 1"), "{}", stderr(&out));
}

#[test]
fn missing_file_is_input_error() {
    let out = algcoh(&["validate", "/nonexistent/file.alg"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bad_flag_is_input_error() {
    let out = algcoh(&["fixture", "dual_numbers", "--field", "6"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("6 is not prime"));
}

#[test]
fn validate_with_bimodule() {
    let dir = TempDir::new().unwrap();
    let a = write(&dir, "s.alg", TRI);
    let m = write(&dir, "n.bim", N);
    let out = algcoh(&["validate", s(&a), s(&m)]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("l.Ann(N) ∩ r.Ann(N) = 1"));
}

#[test]
fn bimodule_over_wrong_algebra() {
    let dir = TempDir::new().unwrap();
    let a = write(&dir, "s.alg", TRI);
    let m = write(&dir, "n.bim", &N.replace("algebra: S", "algebra: T"));
    let out = algcoh(&["cohomology", s(&a), s(&m)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("declared over `T`"));
}

#[test]
fn triangular_on_files() {
    let dir = TempDir::new().unwrap();
    let a = write(&dir, "s.alg", TRI);
    let m = write(&dir, "n.bim", N);
    let out = algcoh(&["triangular", s(&a), s(&m)]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("triangular representation: none"));
    // regular bimodule of S: S ⋉ S is triangular
    let out = algcoh(&["triangular", s(&a)]);
    assert!(stdout(&out).contains("triangular representation: e = "));
}

#[test]
fn machine_format_and_out_file() {
    let dir = TempDir::new().unwrap();
    let a = write(&dir, "s.alg", TRI);
    let m = write(&dir, "n.bim", N);
    let dest = dir.path().join("report.txt");
    let out = algcoh(&["cohomology", s(&a), s(&m), "--format", "machine", "--out", s(&dest)]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(out.stdout.is_empty());
    let text = fs::read_to_string(&dest).unwrap();
    assert!(text.contains("\nh¹: 1\n"));
    assert!(text.contains("\nH¹(A,M): 0\n"));
    assert!(text.contains("verdict.exact_sequence.phi_injective: pass"));
}

#[test]
fn field_override_rereads_scalars() {
    let dir = TempDir::new().unwrap();
    let d = write(&dir, "d.alg", DUAL);
    let out = algcoh(&["derivations", s(&d), "--field", "3"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("Der(D,D) = 1"));
    let out = algcoh(&["derivations", s(&d)]);
    assert!(stdout(&out).contains("Der(D,D) = 2"));
}

#[test]
fn export_round_trips_through_validate() {
    let dir = TempDir::new().unwrap();
    let a = write(&dir, "s.alg", TRI);
    let m = write(&dir, "n.bim", N);
    let out = algcoh(&["export", s(&a), s(&m)]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("# trivial extension S by N"));
    let total = write(&dir, "total.alg", &text);
    let out = algcoh(&["validate", s(&total)]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("dim S⋉N = 4"));
}

#[test]
fn center_subcommand() {
    let dir = TempDir::new().unwrap();
    let a = write(&dir, "s.alg", TRI);
    let out = algcoh(&["center", s(&a)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("center.formula_agrees: pass"));
}
