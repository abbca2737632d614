use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn specs() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/specs")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_padic-cuspidal"))
        .args(args)
        .env_remove("PADIC_SEED")
        .output()
        .unwrap()
}

fn run_spec(cmd: &str, file: &str, extra: &[&str]) -> Output {
    let spec = specs().join(file);
    let mut args = vec![cmd, "--spec", spec.to_str().unwrap()];
    args.extend_from_slice(extra);
    run(&args)
}

fn rows(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str::<Value>(l).unwrap())
        .filter(|v| v["type"] == "row")
        .collect()
}

fn scratch(name: &str, body: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("padic-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, body).unwrap();
    path
}

#[test]
fn cuspidality_rows() {
    let out = run_spec("cuspidality", "modules.json", &[]);
    assert_eq!(out.status.code(), Some(0));
    let r = rows(&out);
    assert_eq!(r[0]["cuspidal"], true);
    assert_eq!(r[0]["degree"], 1);
    assert_eq!(r[1]["cuspidal"], false);
    assert_eq!(r[2]["cuspidal"], true);
}

#[test]
fn certify_verdicts() {
    let out = run_spec("certify", "certify.json", &["--horizon", "200"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let r = rows(&out);
    let verdicts: Vec<&str> = r
        .iter()
        .map(|v| v["verdict"].as_str().unwrap_or("-"))
        .collect();
    assert_eq!(verdicts, ["Diverges", "Converges", "Diverges", "-"]);
    assert!(r[..3].iter().all(|v| v["consistent"] == true));
    assert_eq!(r[3]["status"], "skipped");
}

#[test]
fn other_subcommands() {
    let d = rows(&run_spec(
        "decompose",
        "matrices.json",
        &["--precision", "40"],
    ));
    assert_eq!(d[2]["bruhat"]["cell"], "w0");
    assert_eq!(d[3]["cartan"]["j"], 2);
    assert!(d.iter().all(|v| v["cartan"]["reconstructs"] == true));

    let c = rows(&run_spec("char-eval", "chars.json", &["--precision", "40"]));
    assert_eq!(c[0]["agree"], true);
    assert_eq!(c[2]["status"], "error");

    let h = rows(&run_spec("h0-check", "h0.json", &[]));
    let passed: Vec<bool> = h.iter().map(|v| v["passed"].as_bool().unwrap()).collect();
    assert_eq!(passed, [true, false, true]);

    let o = rows(&run_spec("ore-witness", "ore.json", &[]));
    assert!(o.iter().all(|v| v["verified"] == true));
    assert_eq!(o[2]["k"], 2);
}

#[test]
fn output_is_deterministic() {
    for (cmd, file) in [
        ("cuspidality", "modules.json"),
        ("certify", "certify.json"),
        ("h0-check", "h0.json"),
    ] {
        let a = run_spec(cmd, file, &["--jobs", "1", "--horizon", "100"]);
        let b = run_spec(cmd, file, &["--jobs", "2", "--horizon", "100"]);
        let c = run_spec(cmd, file, &["--jobs", "1", "--horizon", "100"]);
        assert_eq!(a.stdout, b.stdout, "{cmd}: jobs 1 vs 2");
        assert_eq!(a.stdout, c.stdout, "{cmd}: repeated run");
    }
}

#[test]
fn out_file_matches_stdout() {
    let path = std::env::temp_dir().join(format!("padic-cli-{}-out.jsonl", std::process::id()));
    let a = run_spec("ore-witness", "ore.json", &[]);
    let b = run_spec(
        "ore-witness",
        "ore.json",
        &["--out", path.to_str().unwrap()],
    );
    assert_eq!(b.status.code(), Some(0));
    assert_eq!(std::fs::read(&path).unwrap(), a.stdout);
    std::fs::remove_file(path).ok();
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(
        run(&["cuspidality", "--spec", "/nonexistent/spec.json"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run_spec("certify", "certify.json", &["--horizon", "49"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    let bad = scratch("bad.json", "[{\"p\": 5,");
    assert_eq!(
        run(&["cuspidality", "--spec", bad.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
    std::fs::remove_file(bad).ok();
}
