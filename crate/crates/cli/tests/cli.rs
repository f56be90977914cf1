use std::path::Path;
use std::process::{Command, Output};

use qpvi::exactalg::Rat;
use qpvi::quiver::Quiver;
use qpvi::seed::{SeedJson, YSeed};
use qpvi::weylrep::{act_word, Generator};
use serde_json::Value;

fn qpvi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qpvi")).args(args).output().expect("binary runs")
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is json")
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn sample_y() -> Vec<Rat> {
    ["1/2", "2", "3", "5/7", "1/3", "4", "2/5", "7/3"].iter().map(|s| s.parse().unwrap()).collect()
}

#[test]
fn quiver_build_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("q.json");
    let o = qpvi(&["quiver", "build", "--n", "2", "--out", path_str(&file)]);
    assert!(o.status.success());
    let q: Quiver = serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    assert_eq!(q, Quiver::gen_qpvi(2));
}

#[test]
fn quiver_mutate_is_an_involution() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("q.json");
    qpvi(&["quiver", "build", "--n", "1", "--out", path_str(&file)]);
    let once = qpvi(&["quiver", "mutate", "--in", path_str(&file), "--k", "3"]);
    let q1: Quiver = serde_json::from_slice(&once.stdout).unwrap();
    assert_eq!(q1, Quiver::gen_qpvi(1).mutate(3).unwrap());
    let twice = qpvi(&["quiver", "mutate", "--in", path_str(&file), "--k", "3", "3"]);
    let q2: Quiver = serde_json::from_slice(&twice.stdout).unwrap();
    assert_eq!(q2, Quiver::gen_qpvi(1));
}

#[test]
fn act_matches_the_library_and_keeps_the_quiver() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("y.json");
    std::fs::write(&file, serde_json::to_string(&sample_y()).unwrap()).unwrap();
    let o = qpvi(&["act", "--word", "s_0", "--n", "1", "--y", path_str(&file)]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let out: SeedJson = serde_json::from_slice(&o.stdout).unwrap();
    let start = YSeed::gen_qpvi(1, sample_y()).unwrap();
    let expect = act_word(Generator::S(0), &start).unwrap();
    assert_eq!(out, SeedJson::from(&expect));
    assert_eq!(out.lambda, Quiver::gen_qpvi(1).matrix());
}

#[test]
fn act_accepts_full_seed_json_and_words_with_powers() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("seed.json");
    let start = YSeed::gen_qpvi(1, sample_y()).unwrap();
    std::fs::write(&file, serde_json::to_string(&SeedJson::from(&start)).unwrap()).unwrap();
    let o = qpvi(&["act", "--word", "r_1^2 pi^4", "--n", "1", "--y", path_str(&file)]);
    let out: SeedJson = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(out, SeedJson::from(&start));
}

#[test]
fn act_with_random_seed_is_reproducible() {
    let a = qpvi(&["act", "--word", "tau1", "--n", "1", "--seed", "5"]);
    let b = qpvi(&["act", "--word", "tau1", "--n", "1", "--seed", "5"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(qpvi(&["act", "--word", "nonsense", "--n", "1"]).status.code(), Some(2));
    assert_eq!(qpvi(&["verify", "--n", "1"]).status.code(), Some(2));
    assert_eq!(qpvi(&["verify", "--suite", "weyl", "--n", "1", "--trials", "0"]).status.code(), Some(2));
    assert_eq!(qpvi(&["verify", "lax", "--suite", "tau1", "--n", "1"]).status.code(), Some(2));
    assert_eq!(qpvi(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(qpvi(&["quiver", "build", "--n", "0"]).status.code(), Some(2));
}

#[test]
fn verify_quiver_reports_json() {
    let o = qpvi(&["verify", "--suite", "quiver", "--n", "2"]);
    assert!(o.status.success());
    let v = stdout_json(&o);
    assert_eq!(v["suite"], "quiver-invariance");
    assert_eq!(v["pass"], true);
    assert!(!v["relations"].as_array().unwrap().is_empty());
}

#[test]
fn verify_formats_agree_on_relation_count() {
    let json = stdout_json(&qpvi(&["verify", "painleve", "--suite", "tilde", "--n", "1", "--trials", "2"]));
    let count = json["relations"].as_array().unwrap().len();
    let csv = qpvi(&["verify", "painleve", "--suite", "tilde", "--n", "1", "--trials", "2", "--format", "csv"]);
    let mut rdr = csv::Reader::from_reader(&csv.stdout[..]);
    assert_eq!(rdr.records().count(), count);
    let text = qpvi(&["verify", "painleve", "--suite", "tilde", "--n", "1", "--trials", "2", "--format", "text"]);
    let text = String::from_utf8(text.stdout).unwrap();
    assert!(text.starts_with("PASS tilde"));
    assert_eq!(text.lines().filter(|l| l.starts_with("  PASS") || l.starts_with("  FAIL")).count(), count);
}

#[test]
fn verify_is_byte_reproducible() {
    let args = ["verify", "--suite", "tau1", "--n", "1", "--trials", "3", "--seed", "11"];
    let (a, b) = (qpvi(&args), qpvi(&args));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let c = qpvi(&["verify", "--suite", "tau1", "--n", "1", "--trials", "3", "--seed", "12"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn evolve_qp_csv_has_one_row_per_step() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("orbit.csv");
    let o = qpvi(&["evolve", "qp", "--n", "1", "--steps", "3", "--out", path_str(&file)]);
    assert!(o.status.success());
    let mut rdr = csv::Reader::from_path(&file).unwrap();
    let header: Vec<String> = rdr.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(header, ["step", "t", "a_1", "a_2", "b_1", "b_2", "f_1", "g_1", "h"]);
    let rows: Vec<csv::StringRecord> = rdr.records().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 4);
    assert!(rows.iter().all(|r| r.iter().skip(1).all(|c| c.contains('/'))));
}

#[test]
fn evolve_qp_continues_from_a_state_file() {
    let dir = tempfile::tempdir().unwrap();
    let o = qpvi(&["evolve", "qp", "--n", "2", "--steps", "2", "--seed", "3"]);
    let orbit = stdout_json(&o);
    let rows = orbit.as_array().unwrap();
    assert_eq!(rows.len(), 3);
    let mut mid = rows[1].clone();
    let obj = mid.as_object_mut().unwrap();
    obj.remove("step");
    obj.remove("t");
    let file = dir.path().join("state.json");
    std::fs::write(&file, mid.to_string()).unwrap();
    let next = stdout_json(&qpvi(&["evolve", "qp", "--n", "2", "--steps", "1", "--state", path_str(&file)]));
    assert_eq!(next[1]["f"], rows[2]["f"]);
    assert_eq!(next[1]["g"], rows[2]["g"]);
    assert_eq!(next[1]["t"], rows[2]["t"]);
}

#[test]
fn evolve_tau3_keeps_beta() {
    let o = qpvi(&["evolve", "tau3", "--n", "1", "--steps", "2", "--seed", "1"]);
    assert!(o.status.success());
    let rows = stdout_json(&o);
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0]["beta"], rows[2]["beta"]);
    assert_ne!(rows[0]["phi"], rows[1]["phi"]);
}

#[test]
fn lax_check_dumps_the_garnier_pair() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("pair.json");
    let o = qpvi(&["lax", "check", "--n", "1", "--which", "compat", "--trials", "2", "--dump", path_str(&file)]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout_json(&o)["pass"], true);
    let dump: Value = serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    assert_eq!(dump["A"].as_array().unwrap().len(), 2);
    assert_eq!(dump["B"].as_array().unwrap().len(), 2);
}
