use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quiverchar")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn character_json() {
    let o = run(&["character", "--N", "2", "--n", "2", "--k", "1", "--qmax", "1", "--format", "json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let c = &v["coeffs"];
    assert_eq!(c[0]["q"], 0);
    assert_eq!(c[0]["terms"], serde_json::json!({"[1,1]": 1}));
    assert_eq!(c[1]["terms"], serde_json::json!({"[2,0]": 1, "[1,1]": 2, "[0,2]": 1}));
    let keys: Vec<&String> = c[1]["terms"].as_object().unwrap().keys().collect();
    assert_eq!(keys, ["[2,0]", "[1,1]", "[0,2]"]);
}

#[test]
fn json_is_stable_and_round_trips() {
    let args = ["semigt", "--r", "1", "--n", "2", "--k", "1", "--qmax", "2", "--format", "json"];
    let a = stdout(&run(&args));
    let b = stdout(&run(&args));
    assert_eq!(a, b);
    let v: Value = serde_json::from_str(&a).unwrap();
    assert_eq!(format!("{}\n", serde_json::to_string_pretty(&v).unwrap()), a);
    let first = &v["degrees"][0]["patterns"][0];
    assert_eq!(first["tail"], serde_json::json!({"n": 2, "k": 1, "r": 1}));
}

#[test]
fn transformed_hl_text() {
    let o = run(&["hl", "--transformed", "--mu", "1,1", "--n", "2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "s[1,1] + q*s[2]\n");
}

#[test]
fn kostka_text() {
    let o = run(&["kostka", "--lam", "2,1", "--mu", "1,1,1"]);
    assert_eq!(stdout(&o), "q + q^2\n");
}

#[test]
fn verify_kz_passes() {
    let o = run(&["verify", "kz", "--N", "2", "--n", "2", "--k", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.lines().all(|l| l.starts_with("PASS")), "{}", out);
}

#[test]
fn bad_flags_exit_two() {
    assert_eq!(run(&["character", "--N", "2"]).status.code(), Some(2));
    assert_eq!(run(&["character", "--N", "2", "--n", "0"]).status.code(), Some(2));
    assert_eq!(run(&["hl", "--mu", "1,x", "--n", "2"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "nosuch"]).status.code(), Some(2));
    assert_eq!(run(&["gt", "--top", "1", "--tail", "2,1"]).status.code(), Some(2));
}

#[test]
fn lcap_override() {
    let o = Command::new(env!("CARGO_BIN_EXE_quiverchar"))
        .args(["character", "--n", "2", "--r", "0", "--kind", "limit", "--qmax", "1"])
        .env("QUIVERCHAR_LCAP", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["character", "--n", "2", "--r", "1", "--kind", "limit", "--qmax", "1"]);
    assert_eq!(stdout(&o), "q^0: a1 + a2\nq^1: 2*a1 + 2*a2\n");
}

#[test]
fn patterns_and_spectra() {
    let o = run(&["gt", "--top", "2,1", "--n", "2", "--k", "1"]);
    assert_eq!(stdout(&o).lines().count(), 4);
    let o = run(&["spectra", "--top", "1", "--tail", "2,1,1"]);
    assert!(stdout(&o).contains("A1(u) = u / (u - 1)"));
    let o = run(&["drinfeld", "--top", "1", "--tail", "2,1,1"]);
    assert_eq!(stdout(&o), "P1(u) = (u - 1)\n");
}

#[test]
fn cs_spectrum_ground_degree() {
    let o = run(&["cs-spectrum", "--N", "3", "--n", "2", "--k", "1", "--qmax", "0"]);
    assert_eq!(stdout(&o), "degree 1: 3 (x2)\n");
    let o = run(&["cs-spectrum", "--N", "2", "--n", "2", "--qmax", "1", "--csv"]);
    assert_eq!(stdout(&o).lines().count(), 5);
}
