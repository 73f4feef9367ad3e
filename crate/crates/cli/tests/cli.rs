use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_poisson-kit")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("poisson-kit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn bracket_examples() {
    let o = run(&["bracket", "x[1,1]", "x[2,2]", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "2*x[1,2]*x[2,1]");
    let o = run(&["bracket", "x[1,1]", "x[1,2]"]);
    assert_eq!(stdout(&o).trim(), "x[1,1]*x[1,2]");
    for s in ["kks", "gr"] {
        let o = run(&["bracket", "x[1,1]", "x[2,2]", "--structure", s]);
        assert_eq!(stdout(&o).trim(), "0", "{s}");
    }
}

#[test]
fn centralizer_runs() {
    let o = run(&["centralizer", "--n", "2", "--max-degree", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("verified for n = 2, degrees <= 6"));
    assert!(!text.contains("FAIL"));
    let o = run(&["centralizer", "--n", "1", "--max-degree", "3"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn centralizer_json_has_checks() {
    let path = tmp("central.json");
    let o = run(&["centralizer", "--n", "3", "--max-degree", "3", "--basis", "--json", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["pass"], true);
    assert_eq!(v["wall_ms"], serde_json::Value::Null);
    assert_eq!(v["checks"].as_array().unwrap().len(), 12);
}

#[test]
fn quantum_commands() {
    let o = run(&["quantum", "det-central", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("PASS")).count(), 9);
    assert_eq!(run(&["quantum", "commute", "--n", "3"]).status.code(), Some(0));
    assert_eq!(run(&["quantum", "limit", "--n", "2"]).status.code(), Some(0));
    let printed = run(&["quantum", "commute", "--n", "2", "--convention", "as-printed"]);
    assert_eq!(printed.status.code(), Some(1));
}

#[test]
fn verify_suites() {
    for suite in ["jacobi", "involutive", "limit", "sl2", "gr-weight"] {
        let o = run(&["verify", suite, "--n", "2"]);
        assert_eq!(o.status.code(), Some(0), "{suite}: {}", stdout(&o));
    }
}

#[test]
fn rank_and_weyl() {
    let o = run(&["rank", "--space", "sl", "--n", "2", "--samples", "100", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("max 2"));
    let o = run(&["rank", "--space", "m", "--n", "2", "--at-zero"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("max 0"));
    assert_eq!(run(&["rank", "--space", "sl", "--at-zero"]).status.code(), Some(2));
    let o = run(&["weyl", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("6 over 36 pairs"));
}

#[test]
fn json_is_reproducible() {
    let a = tmp("rank_a.json");
    let b = tmp("rank_b.json");
    for p in [&a, &b] {
        let o = run(&["rank", "--space", "m", "--n", "3", "--samples", "20", "--seed", "11", "--json", p.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["bracket", "x[1,", "x[2,2]"]).status.code(), Some(2));
    assert_eq!(run(&["bracket", "x[3,3]", "x[1,1]", "--n", "2"]).status.code(), Some(2));
    assert_eq!(run(&["rank", "--space", "so"]).status.code(), Some(2));
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["centralizer", "--n", "4"]).status.code(), Some(3));
    assert_eq!(run(&["centralizer", "--n", "3", "--max-degree", "6"]).status.code(), Some(3));
    assert_eq!(run(&["weyl", "--n", "6"]).status.code(), Some(3));
    assert_eq!(run(&["quantum", "commute", "--n", "4"]).status.code(), Some(3));
}

#[test]
fn memory_cap_env() {
    let o = Command::new(env!("CARGO_BIN_EXE_poisson-kit"))
        .args(["centralizer", "--n", "3", "--max-degree", "5"])
        .env("POISSON_KIT_CAP_MB", "0")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}
