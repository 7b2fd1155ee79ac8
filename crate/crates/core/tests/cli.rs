use std::path::Path;
use std::process::{Command, Output};

use genus_forge::catalog::{write_catalog, Catalog};
use genus_forge::graph::{write_record, GraphRecord};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_genus-forge"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

const K5: &str = "5 10 0 1\n0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n";
const K33: &str = "6 9 0 1\n0 3\n0 4\n0 5\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n";

#[test]
fn genus_of_k5() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "k5.txt", K5);
    let o = run(&["genus", &f]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1\n");

    let o = run(&["genus", "--witness", &f]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("1\n"));
    assert!(text.lines().count() > 1);
}

#[test]
fn profile_line() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "k33.txt", K33);
    let o = run(&["profile", &f]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "g=1 g+=1 theta=0 eps=1 eps+=1 ga=0 ga+=0\n");
    let raw = run(&["--no-decompose", "profile", &f]);
    assert_eq!(stdout(&raw), stdout(&o));
}

#[test]
fn classify_parts() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "k5e.txt", &K5.replace("5 10 0 1\n0 1\n", "5 9 0 1\n"));
    let o = run(&["classify", &f, "--partner-profile", "1,1,0,0", "--with-edge"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o), "C°0(g+)\n");

    // A T5 partner: K5 - xy is one side of a torus obstruction.
    let t5 = Catalog::shipped().get("K5 split 2-2").unwrap().graph.clone();
    let partner = write(dir.path(), "t5.txt", &write_record(&GraphRecord::Terminal(t5)));
    let o = run(&["classify", &f, "--partner", &partner, "--with-edge"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("C°0(g+)"));

    // Two K3,3 parts without the edge still embed in the torus.
    let k = write(dir.path(), "k33.txt", K33);
    let o = run(&["classify", &k, "--partner", &k]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "not minor-tight\n");

    // A planar partner cannot make C4 tight.
    let c4 = write(dir.path(), "c4.txt", "4 4 0 2\n0 1\n1 2\n2 3\n0 3\n");
    let o = run(&["classify", &c4, "--partner-profile", "0,0,0,0"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "not minor-tight\n");

    let o = run(&["classify", &c4, "--partner-profile", "1,0,0,0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_obstruction_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "kur.txt", &format!("{K5}\n{K33}"));
    let o = run(&["verify-obstruction", &f, "-k", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0: obstruction\n1: obstruction\n");

    let o = run(&["verify-obstruction", &f]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "0: not an obstruction\n1: not an obstruction\n");
}

#[test]
fn parse_errors_exit_2_with_line() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "bad.txt", "3 2 0 1\n0 1\n1 7\n");
    let o = run(&["genus", &f]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));

    assert_eq!(run(&["genus", "/nonexistent/graph.txt"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn validate_catalog_reports() {
    let o = run(&["validate-catalog", "--quick"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("T4=5"));

    let mut c = Catalog::shipped();
    let i = c.entries.iter().position(|e| e.name == "Hive").unwrap();
    let t = &c.entries[i].graph;
    let e = t.graph().edges()[0];
    c.entries[i].graph = genus_forge::graph::TerminalGraph::new(t.graph().without_edge(e).unwrap(), t.x(), t.y()).unwrap();
    c.entries[i].labelled = false;
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "bad.cat", &write_catalog(&c));
    let o = run(&["validate-catalog", "--quick", &f]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("DISCREPANCY Hive:"));

    // The enumerator refuses a catalog that does not validate.
    let o = run(&["enumerate-torus", "--catalog", &f, "--verify", "none"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn enumerate_summary_and_workers() {
    let base = run(&["enumerate-torus", "--emit", "cat"]);
    assert_eq!(base.status.code(), Some(0));
    let text = stdout(&base);
    assert_eq!(text.lines().last(), Some("pairs=81 filtered=76 obstructions=68"));
    let one = run(&["--workers", "1", "enumerate-torus", "--emit", "cat"]);
    assert_eq!(one.stdout, base.stdout);

    let dir = tempfile::tempdir().unwrap();
    let records = dir.path().join("torus.txt");
    let o = run(&["enumerate-torus", "--verify", "none", "--emit", "cat", "-o", records.to_str().unwrap()]);
    assert_eq!(stdout(&o), "pairs=81 filtered=76 obstructions=68\n");
    let o = run(&["verify-obstruction", records.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 68);

    let dots = dir.path().join("dot");
    let o = run(&["enumerate-torus", "--verify", "none", "--emit", "dot", "-o", dots.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read_dir(&dots).unwrap().count(), 68);
    assert!(dots.join("obstruction_67.dot").exists());
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "k33.txt", K33);
    let cache = dir.path().join("profiles.cache");
    let first = bin().args(["profile", &f]).env("GENUSFORGE_CACHE", &cache).output().unwrap();
    assert!(cache.exists());
    let second = bin().args(["profile", &f]).env("GENUSFORGE_CACHE", &cache).output().unwrap();
    assert_eq!(first.stdout, second.stdout);
}
