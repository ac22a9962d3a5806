use std::path::{Path, PathBuf};
use std::process::Command;

use matex::verify::{verify_witness, SearchOutcome};
use matex::{DeficiencyCertificate, ExchangeReport, Partition};
use tempfile::TempDir;

const K4: &str = r#"{"type":"graphic","vertices":4,"edges":[[0,1],[1,2],[2,3],[0,2],[1,3],[0,3]]}"#;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn matex(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_matex"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().expect("exited normally"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn file(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, body).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn check_reports_rank_and_bases() {
    let dir = TempDir::new().unwrap();
    let m = file(&dir, "u.json", r#"{"type":"uniform","n":4,"rank":2}"#);
    let run = matex(&["check", s(&m)]);
    assert_eq!(run.code, 0);
    assert_eq!(run.stdout, "rank 2, 4 elements, 6 bases\n");
}

#[test]
fn check_rejects_axiom_violation() {
    let dir = TempDir::new().unwrap();
    let m = file(
        &dir,
        "b.json",
        r#"{"type":"bases","n":4,"bases":[[0,1],[2,3]]}"#,
    );
    let run = matex(&["check", s(&m)]);
    assert_eq!(run.code, 2);
    assert!(run.stdout.is_empty());
    assert!(
        run.stderr.contains("B1={0,1} B2={2,3} e1=0"),
        "{}",
        run.stderr
    );
}

#[test]
fn check_rejects_truncated_file() {
    let dir = TempDir::new().unwrap();
    let m = file(&dir, "t.json", r#"{"type":"uniform","n":4"#);
    let run = matex(&["check", s(&m)]);
    assert_eq!(run.code, 1);
    assert!(run.stderr.contains("line 1 column"), "{}", run.stderr);
    assert!(run.stdout.is_empty());
}

#[test]
fn check_over_cap_skips_count() {
    let dir = TempDir::new().unwrap();
    let m = file(&dir, "u.json", r#"{"type":"uniform","n":30,"rank":2}"#);
    let run = matex(&["check", s(&m)]);
    assert_eq!(run.code, 0);
    assert!(run
        .stdout
        .starts_with("rank 2, 30 elements, bases not counted"));
}

#[test]
fn cyclic_exchange_k4() {
    let dir = TempDir::new().unwrap();
    let m = file(&dir, "k4.json", K4);
    let b = file(&dir, "b.json", r#"{"bases":[[0,1,2],[3,4,5]]}"#);
    let run = matex(&["cyclic-exchange", s(&m), s(&b), "--a1", "[0]"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    assert_eq!(
        run.stdout,
        "{\"A\":[[0],[5]],\"shifted\":[[1,2,5],[0,3,4]]}\n"
    );
    let parsed: ExchangeReport = serde_json::from_str(&run.stdout).unwrap();
    assert_eq!(serde_json::to_string(&parsed).unwrap() + "\n", run.stdout);

    let run = matex(&["cyclic-exchange", s(&m), s(&b), "--a1", "[0]", "--verify"]);
    assert_eq!(run.code, 0);
    assert!(
        run.stdout
            .contains(r#""verified":{"member":true,"solutions":1}"#),
        "{}",
        run.stdout
    );
}

#[test]
fn cyclic_exchange_empty_seed() {
    let dir = TempDir::new().unwrap();
    let m = file(&dir, "k4.json", K4);
    let b = file(&dir, "b.json", r#"{"bases":[[0,1,2],[3,4,5],[0,2,3]]}"#);
    let run = matex(&["cyclic-exchange", s(&m), s(&b)]);
    assert_eq!(run.code, 0);
    assert_eq!(
        run.stdout,
        "{\"A\":[[],[],[]],\"shifted\":[[0,1,2],[3,4,5],[0,2,3]]}\n"
    );
}

#[test]
fn cyclic_exchange_input_errors() {
    let dir = TempDir::new().unwrap();
    let m = file(&dir, "k4.json", K4);
    // edges 0-1, 1-2, 0-2 form a triangle
    let cyc = file(&dir, "c.json", r#"{"bases":[[0,1,2],[0,1,3]]}"#);
    let run = matex(&["cyclic-exchange", s(&m), s(&cyc), "--a1", "[0]"]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("B_2"), "{}", run.stderr);
    assert!(run.stdout.is_empty());

    let b = file(&dir, "b.json", r#"{"bases":[[0,1,2],[3,4,5]]}"#);
    let run = matex(&["cyclic-exchange", s(&m), s(&b), "--a1", "[4]"]);
    assert_eq!(run.code, 2);
    let run = matex(&["cyclic-exchange", s(&m), s(&b), "--a1", "[1,0]"]);
    assert_eq!(run.code, 1);

    let run = matex(&[
        "cyclic-exchange",
        s(&m),
        s(&b),
        "--a1",
        "[0]",
        "--verify",
        "--cap",
        "5",
    ]);
    assert_eq!(run.code, 3);
    assert!(run.stdout.is_empty());
}

#[test]
fn json_errors_go_to_stdout() {
    let dir = TempDir::new().unwrap();
    let m = file(&dir, "k4.json", K4);
    let cyc = file(&dir, "c.json", r#"{"bases":[[0,1,2],[0,1,3]]}"#);
    let run = matex(&["cyclic-exchange", s(&m), s(&cyc), "--json-errors"]);
    assert_eq!(run.code, 2);
    let v: serde_json::Value = serde_json::from_str(&run.stdout).unwrap();
    assert_eq!(v["code"], 2);
    assert!(v["error"].as_str().unwrap().contains("B_2"));
}

fn rank_one_problem(n: usize) -> String {
    let all: Vec<usize> = (0..n).collect();
    let arm = format!(r#"{{"matroid":{{"type":"uniform","n":{n},"rank":1}},"allowed":{all:?}}}"#);
    format!(r#"{{"universe":{n},"arms":[{arm},{arm}]}}"#)
}

#[test]
fn partition_outcomes() {
    let dir = TempDir::new().unwrap();
    let p = file(&dir, "p2.json", &rank_one_problem(2));
    let run = matex(&["partition", s(&p)]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    assert_eq!(run.stdout, "{\"parts\":[[0],[1]]}\n");
    let parsed: Partition = serde_json::from_str(&run.stdout).unwrap();
    assert_eq!(parsed.parts.len(), 2);

    let p = file(&dir, "p3.json", &rank_one_problem(3));
    let run = matex(&["partition", s(&p)]);
    assert_eq!(run.code, 4);
    let v: serde_json::Value = serde_json::from_str(&run.stdout).unwrap();
    let cert: DeficiencyCertificate = serde_json::from_value(v["certificate"].clone()).unwrap();
    assert_eq!(cert.witness.as_slice(), &[0, 1, 2]);
    assert_eq!((cert.rank_sum, cert.size), (2, 3));
    assert_eq!(cert.ranks, vec![1, 1]);

    let arm = format!(r#"{{"matroid":{K4},"allowed":[0,1,2,3,4,5]}}"#);
    let p = file(
        &dir,
        "k4.json",
        &format!(r#"{{"universe":6,"arms":[{arm},{arm}]}}"#),
    );
    let run = matex(&["partition", s(&p)]);
    assert_eq!(run.code, 0);
    assert_eq!(run.stdout, "{\"parts\":[[0,1,2],[3,4,5]]}\n");

    let bad = file(&dir, "bad.json", r#"{"universe":2,"arms":[],"x":1}"#);
    assert_eq!(matex(&["partition", s(&bad)]).code, 1);
}

#[test]
fn search_shift2_outcomes() {
    let run = matex(&["search-shift2", "--k", "3"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let SearchOutcome::Witness(w) = serde_json::from_str(&run.stdout).unwrap() else {
        panic!("expected a witness: {}", run.stdout);
    };
    assert!(verify_witness(&w));

    let run = matex(&["search-shift2", "--k", "3", "--budget", "0"]);
    assert_eq!(run.code, 5);
    let SearchOutcome::Exhausted(r) = serde_json::from_str(&run.stdout).unwrap() else {
        panic!("expected exhaustion");
    };
    assert_eq!(r.candidates_examined, 0);

    let run = matex(&["search-shift2", "--k", "2"]);
    assert_eq!(run.code, 1);
    assert!(run.stdout.is_empty());
}

#[test]
fn output_flag_writes_file() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("w.json");
    let run = matex(&["search-shift2", "--k", "3", "--output", s(&out)]);
    assert_eq!(run.code, 0);
    assert!(run.stdout.is_empty());
    let text = std::fs::read_to_string(&out).unwrap();
    let parsed: SearchOutcome = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string(&parsed).unwrap() + "\n", text);
}

#[test]
fn enumerate_bases_lists_and_caps() {
    let dir = TempDir::new().unwrap();
    let m = file(&dir, "u.json", r#"{"type":"uniform","n":4,"rank":2}"#);
    let run = matex(&["enumerate-bases", s(&m)]);
    assert_eq!(run.code, 0);
    assert_eq!(
        run.stdout,
        "{\"rank\":2,\"bases\":[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]}\n"
    );
    assert_eq!(matex(&["enumerate-bases", s(&m), "--cap", "3"]).code, 3);
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(matex(&["frobnicate"]).code, 1);
    assert_eq!(matex(&[]).code, 1);
    assert_eq!(matex(&["--help"]).code, 0);
}
