//! End-to-end tests of the command line binary: exit codes, JSON
//! structure, golden-file reproduction, and byte stability.

use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    run_with_env(args, &[])
}

fn run_with_env(args: &[&str], env: &[(&str, &str)]) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_hecke-mod-ell"));
    cmd.args(args);
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).to_string(),
        String::from_utf8_lossy(&out.stderr).to_string(),
    )
}

#[test]
fn orbit_single_character() {
    let (code, stdout, _) = run(&[
        "orbit", "--q", "16", "--n", "2", "--ell", "17", "--char", "15",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["results"]["analysis"]["orbit_size"], 2);
    assert_eq!(v["results"]["analysis"]["size_reduced"], 1);
    assert_eq!(v["results"]["analysis"]["reduced_index"], "0");
}

#[test]
fn orbit_sweep_all() {
    let (code, stdout, _) = run(&["orbit", "--q", "2", "--n", "2", "--ell", "3", "--all"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["results"]["count"], 3);
    assert_eq!(v["checks"][0]["status"], "pass");
}

#[test]
fn orbit_rejects_ell_dividing_q() {
    let (code, _, stderr) = run(&["orbit", "--q", "4", "--n", "2", "--ell", "2", "--all"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("divides"));
}

#[test]
fn orbit_requires_char_or_all() {
    let (code, _, _) = run(&["orbit", "--q", "4", "--n", "2", "--ell", "3"]);
    assert_eq!(code, 2);
}

#[test]
fn bad_flags_exit_2() {
    let (code, _, _) = run(&["orbit", "--q", "not-a-number"]);
    assert_eq!(code, 2);
}

#[test]
fn hecke_relations_pass() {
    let (code, stdout, _) = run(&["hecke", "--r", "3", "--q", "3", "relations"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.len() > 15);
    assert!(checks.iter().all(|c| c["status"] == "pass"));
}

#[test]
fn hecke_rank_guard() {
    let (code, _, stderr) = run(&["hecke", "--r", "6", "--q", "3", "relations"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("rank"));
}

#[test]
fn hecke_y1_ranks() {
    let (code, stdout, _) = run(&["hecke", "--r", "3", "--q", "3", "y1", "--alpha", "2,1"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["results"]["rank_unit"], 6);
    assert_eq!(v["results"]["rank_longest"], 6);
}

#[test]
fn hecke_module_reducibility() {
    let (code, stdout, _) = run(&["hecke", "--r", "2", "--q", "3", "module", "--z", "3"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["results"]["reducible"], true);

    let (_, stdout, _) = run(&["hecke", "--r", "2", "--q", "3", "module", "--z", "1/3"]);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["results"]["reducible"], true);

    let (_, stdout, _) = run(&["hecke", "--r", "2", "--q", "3", "module", "--z", "2"]);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["results"]["reducible"], false);

    let (_, stdout, _) = run(&[
        "hecke", "--r", "2", "--q", "3", "--field", "f7", "module", "--z", "5",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["results"]["reducible"], true);
}

#[test]
fn cuspidal_level0_datum() {
    let (code, stdout, _) = run(&[
        "cuspidal", "--m", "1", "--d", "2", "--q", "8", "--ell", "3", "--e", "1", "--f", "1",
        "--mprime", "1", "--dprime", "2", "--chi", "1",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["results"]["length"], 2);
    assert_eq!(v["results"]["reducibility_point"], "64");
    assert_eq!(v["results"]["lifted"]["galois_orbit"], 2);
    assert_eq!(v["results"]["reduced"]["galois_orbit"], 1);
}

#[test]
fn cuspidal_rejects_inconsistent_datum() {
    let (code, _, _) = run(&[
        "cuspidal", "--m", "1", "--d", "2", "--q", "8", "--ell", "3", "--e", "1", "--f", "1",
        "--mprime", "2", "--dprime", "2", "--chi", "1",
    ]);
    assert_eq!(code, 2);
}

#[test]
fn scenarios_reproduce_golden() {
    for id in ["3.25", "3.31"] {
        let (code, stdout, _) = run(&["examples", id]);
        assert_eq!(code, 0, "scenario {id}");
        let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
        let checks = v["checks"].as_array().unwrap();
        assert!(checks.iter().all(|c| c["status"] == "pass"), "scenario {id}");
        assert!(checks.iter().any(|c| c["name"] == "golden_match"));
    }
}

#[test]
fn unknown_scenario_exits_2() {
    let (code, _, _) = run(&["examples", "9.99"]);
    assert_eq!(code, 2);
}

#[test]
fn reports_are_byte_stable() {
    let args = ["hecke", "--r", "2", "--q", "3", "assoc", "--count", "50"];
    let (_, first, _) = run(&args);
    let (_, second, _) = run(&args);
    assert_eq!(first, second);
}

#[test]
fn env_seed_overrides_flag() {
    let (_, with_flag, _) = run(&[
        "hecke", "--r", "2", "--q", "3", "--seed", "7", "assoc", "--count", "10",
    ]);
    let (_, with_env, _) = run_with_env(
        &[
            "hecke", "--r", "2", "--q", "3", "--seed", "7", "assoc", "--count", "10",
        ],
        &[("HECKE_SEED", "99")],
    );
    let v1: serde_json::Value = serde_json::from_str(&with_flag).unwrap();
    let v2: serde_json::Value = serde_json::from_str(&with_env).unwrap();
    assert_eq!(v1["inputs"]["seed"], 7);
    assert_eq!(v2["inputs"]["seed"], 99);
}

#[test]
fn table_format_renders() {
    let (code, stdout, _) = run(&[
        "orbit", "--q", "2", "--n", "2", "--ell", "3", "--all", "--format", "table",
    ]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("command: orbit"));
    assert!(stdout.contains("[pass]"));
}
