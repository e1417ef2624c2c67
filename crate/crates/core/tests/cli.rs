use std::fs;
use std::path::Path;
use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_tsslab");

const PATH3: &str = "tss 3 2\nt 1 1\nt 2 1\nt 3 2\ne 1 2\ne 2 3\n";
const K4: &str = "tss 4 6\nt 1 1\nt 2 1\nt 3 1\nt 4 1\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n";
const AND_OR: &str = "circuit 4\ninput 1\ninput 2\ngate 3 and 1 2\ngate 4 or 3 1\noutput 4\n";

fn tsslab(args: &[&str]) -> Output {
    Command::new(BIN).args(args).env("TSSLAB_THREADS", "1").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn field<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix(':')))
        .unwrap_or_else(|| panic!("no {key} in\n{text}"))
        .trim()
}

fn file(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

#[test]
fn propagate_reports_rounds() {
    let dir = tempfile::tempdir().unwrap();
    let p = file(dir.path(), "p.tss", PATH3);
    let o = tsslab(&["propagate", "-i", &p, "-s", "1"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(field(&out, "round.1"), "2");
    assert_eq!(field(&out, "closed_influence"), "2");
    assert_eq!(field(&out, "round_count"), "1");
}

#[test]
fn propagate_empty_seed() {
    let dir = tempfile::tempdir().unwrap();
    let p = file(dir.path(), "p.tss", PATH3);
    let o = tsslab(&["propagate", "-i", &p, "-s", ""]);
    assert!(o.status.success());
    assert_eq!(field(&stdout(&o), "closed_influence"), "0");
}

#[test]
fn out_of_range_seed_is_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let p = file(dir.path(), "p.tss", PATH3);
    let o = tsslab(&["propagate", "-i", &p, "-s", "9"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("out of range"));
}

#[test]
fn malformed_instance_is_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let p = file(dir.path(), "bad.tss", "tss 2 1\nt 1 1\nt 2 1\ne 1 3\n");
    assert_eq!(tsslab(&["propagate", "-i", &p]).status.code(), Some(2));
    assert_eq!(tsslab(&["propagate", "-i", "/nonexistent.tss"]).status.code(), Some(2));
}

#[test]
fn solve_exact_and_decision() {
    let dir = tempfile::tempdir().unwrap();
    let p = file(dir.path(), "p.tss", PATH3);
    let out = stdout(&tsslab(&["solve", "-i", &p]));
    assert_eq!(field(&out, "value"), "1");
    assert_eq!(field(&out, "seeds"), "3");
    assert_eq!(field(&out, "optimal"), "true");

    // Every single seed wakes at least one neighbour.
    let min = |l: &str| stdout(&tsslab(&["solve", "-i", &p, "--problem", "influence", "-k", "1", "--goal", "min", "-l", l]));
    let out = min("1");
    assert_eq!(field(&out, "value"), "2");
    assert_eq!(field(&out, "decision"), "no");
    assert_eq!(field(&min("2"), "decision"), "yes");
}

#[test]
fn solve_matching_rejects_non_unanimity() {
    let dir = tempfile::tempdir().unwrap();
    let p = file(dir.path(), "p.tss", PATH3);
    assert_eq!(tsslab(&["solve", "-i", &p, "--problem", "matching"]).status.code(), Some(2));
    assert_eq!(tsslab(&["solve", "-i", &p, "--problem", "influence"]).status.code(), Some(2));
}

#[test]
fn reduce_writes_three_files() {
    let dir = tempfile::tempdir().unwrap();
    let c = file(dir.path(), "c.circ", AND_OR);
    let out_dir = dir.path().join("out");
    let o = tsslab(&["reduce", "mcs", "-i", &c, "-o", out_dir.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let params = fs::read_to_string(out_dir.join("params.txt")).unwrap();
    assert_eq!(params, stdout(&o));
    let inst = tsslab::parse_instance(&fs::read_to_string(out_dir.join("instance.tss")).unwrap()).unwrap();
    assert_eq!(field(&params, "vertices"), inst.vertex_count().to_string());
    let prov = fs::read_to_string(out_dir.join("provenance.txt")).unwrap();
    assert_eq!(prov.lines().count(), inst.vertex_count());
    assert!(prov.starts_with("1 "));
}

#[test]
fn reduce_clique_needs_k_at_least_four() {
    let dir = tempfile::tempdir().unwrap();
    let g = file(dir.path(), "k4.tss", K4);
    assert_eq!(tsslab(&["reduce", "clique", "-i", &g, "-k", "3"]).status.code(), Some(2));
    let out = stdout(&tsslab(&["reduce", "clique", "-i", &g, "-k", "4", "--rho", "const:2"]));
    assert_eq!(field(&out, "g_k"), "154");
    assert_eq!(field(&out, "x"), "308");
    assert_eq!(field(&out, "h"), "2");
    assert_eq!(tsslab(&["reduce", "clique", "-i", &g, "-k", "4", "--rho", "linear:1"]).status.code(), Some(2));
    assert_eq!(tsslab(&["reduce", "clique", "-i", &g, "-k", "4", "--rho", "cubic"]).status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    assert_eq!(tsslab(&["verify", "padding"]).status.code(), Some(0));
    assert_eq!(tsslab(&["verify", "propagation", "--trials", "50"]).status.code(), Some(0));
    let o = tsslab(&["verify", "gadget-direction"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("result: fail"));
    assert_eq!(tsslab(&["verify", "no-such-suite"]).status.code(), Some(2));
}

#[test]
fn gen_is_reproducible() {
    let a = stdout(&tsslab(&["gen", "--n", "12", "--seed", "7"]));
    let b = stdout(&tsslab(&["gen", "--n", "12", "--seed", "7"]));
    assert_eq!(a, b);
    assert_eq!(tsslab::parse_instance(&a).unwrap().vertex_count(), 12);
    assert_eq!(tsslab(&["gen", "--n", "5", "--p", "1.5"]).status.code(), Some(2));
}
