use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;
use tempfile::NamedTempFile;

fn hamprism(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hamprism"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn graph_file(contents: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

fn records(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).expect("one JSON record per line"))
        .collect()
}

fn path(f: &NamedTempFile) -> &str {
    f.path().to_str().unwrap()
}

#[test]
fn verify_k4() {
    let f = graph_file("C~\n");
    let out = hamprism(&["verify", path(&f)]);
    assert_eq!(out.status.code(), Some(0));
    let r = &records(&out)[0];
    assert_eq!(r["graph6"], "C~");
    assert_eq!(r["toughness"], "inf");
    assert_eq!(r["hypothesis"], true);
    assert_eq!(r["prism_ham"], "certified");
    assert_eq!(r["prism_cycle"].as_str().unwrap().split(' ').count(), 8);
}

#[test]
fn analyze_dimacs_input() {
    let f = graph_file("c C5\np edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n");
    let out = hamprism(&["analyze", path(&f), "--format", "dimacs"]);
    assert_eq!(out.status.code(), Some(0));
    let r = &records(&out)[0];
    assert_eq!(r["graph6"], "Dhc");
    assert_eq!(r["toughness"], "1/1");
    assert_eq!(r["connectivity"], 2);
    assert_eq!(r["chordal5"]["hole"], "0 1 2 3 4");
    assert_eq!(r["chordal3"]["hole"], "0 1 2 3 4");
}

#[test]
fn edc_and_triangle() {
    let g = String::from_utf8(hamprism(&["gen", "--family", "cycle:n=7,chords=0-3;0-5"]).stdout)
        .unwrap();
    let f = graph_file(&g);
    let edc = hamprism(&["edc", path(&f)]);
    assert_eq!(records(&edc)[0]["found"], true);

    let out = hamprism(&["triangle", path(&f), "--cycle", "0,1,2,3,4,5,6"]);
    assert_eq!(out.status.code(), Some(0));
    let r = &records(&out)[0];
    assert_eq!(r["triangle"], "apex=0 edge=(5,6) q=3");
    let trace = r["trace"].as_array().unwrap();
    assert_eq!(trace.len(), 3);
    assert_eq!(trace[2], "base: positions (0,5,6)");

    let even = hamprism(&["triangle", path(&f), "--cycle", "0,1,2,3"]);
    assert_eq!(even.status.code(), Some(2));
    let bogus = hamprism(&["triangle", path(&f), "--cycle", "0,2,4"]);
    assert_eq!(bogus.status.code(), Some(2));
}

#[test]
fn triangle_on_a_hole_is_not_a_violation() {
    let f = graph_file("Dhc\n");
    let out = hamprism(&["triangle", path(&f), "--cycle", "0,1,2,3,4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(records(&out)[0]["chordal5"], false);
}

#[test]
fn prism_of_a_star() {
    let f = graph_file("Cs\n");
    let out = hamprism(&["prism", path(&f), "--ham"]);
    let r = &records(&out)[0];
    assert_eq!((r["n"].as_u64(), r["m"].as_u64()), (Some(8), Some(10)));
    assert_eq!(r["prism_ham"], "refuted");
}

#[test]
fn stdin_input() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_hamprism"))
        .args(["verify", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"Bw\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(records(&out)[0]["edc_parity"], "odd");
}

#[test]
fn gen_is_deterministic() {
    let a = hamprism(&[
        "gen",
        "--family",
        "chordal:n=6,edges=9",
        "--seed",
        "42",
        "--count",
        "3",
    ]);
    let b = hamprism(&[
        "gen",
        "--family",
        "chordal:n=6,edges=9",
        "--seed",
        "42",
        "--count",
        "3",
    ]);
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    assert_eq!(text.lines().count(), 3);
    assert_eq!(text.lines().next(), Some("EXaG"));
    assert_eq!(
        hamprism(&["gen", "--family", "named:dodecahedron"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn sweep_builtin() {
    let out = hamprism(&["sweep", "--max-n", "6", "--check", "all", "--jobs", "2"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let r = &records(&out)[0];
    assert_eq!(r["graphs"], 143);
    assert_eq!(r["theorem"]["counterexamples"].as_array().unwrap().len(), 0);
    assert_eq!(r["lemma2"]["failures"].as_array().unwrap().len(), 0);
}

#[test]
fn sweep_stream_with_bad_lines() {
    let f = graph_file("C~\nnot graph6\nB?\nDhc\n");
    let skip = hamprism(&[
        "sweep",
        "--max-n",
        "8",
        "--corpus",
        path(&f),
        "--check",
        "theorem",
    ]);
    assert_eq!(skip.status.code(), Some(0));
    assert_eq!(records(&skip)[0]["graphs"], 2);
    let stderr = String::from_utf8_lossy(&skip.stderr);
    assert!(
        stderr.contains("line 2") && stderr.contains("line 3"),
        "{stderr}"
    );

    let strict = hamprism(&[
        "sweep",
        "--max-n",
        "8",
        "--corpus",
        path(&f),
        "--strict",
        "--check",
        "theorem",
    ]);
    assert_eq!(strict.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&strict.stderr).contains("line 2"));
}

#[test]
fn empty_corpus_and_budget() {
    let f = graph_file("");
    let out = hamprism(&["sweep", "--max-n", "8", "--corpus", path(&f)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(records(&out)[0]["graphs"], 0);

    let petersen = graph_file("IheA@GUAo\n");
    let out = hamprism(&["prism", path(&petersen), "--ham", "--budget", "5"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(records(&out)[0]["prism_ham"], "unknown");
}

#[test]
fn explore_rows() {
    let out = hamprism(&["explore", "--max-n", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = records(&out);
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0]["n"], 3);
    assert_eq!(rows[2]["n"], 5);
    assert_eq!(rows[2]["max"]["toughness"], "1/2");
}

#[test]
fn input_errors() {
    assert_eq!(
        hamprism(&["verify", "/nonexistent/graph.g6"]).status.code(),
        Some(2)
    );
    let f = graph_file("D?\n");
    let out = hamprism(&["verify", path(&f)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("offset"));
    assert_eq!(hamprism(&["sweep", "--max-n", "9"]).status.code(), Some(2));
}
