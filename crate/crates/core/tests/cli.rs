use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn qcam(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcam"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout)
        .unwrap_or_else(|e| panic!("stdout is not JSON ({e}): {}", stdout(o)))
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(path).unwrap()
}

/// Writes the worked-example word `(1 1 0 0 0 0 0 0)` via `encode --out`.
fn paper_state(dir: &tempfile::TempDir) -> PathBuf {
    let path = dir.path().join("zzb.json");
    let o = qcam(&["encode", "ZZB", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    path
}

#[test]
fn golden_outputs() {
    assert_eq!(stdout(&qcam(&["encode", "ZZB"])), golden("encode_zzb.json"));
    assert_eq!(stdout(&qcam(&["capacity", "3"])), golden("capacity_3.json"));
    assert_eq!(
        stdout(&qcam(&["oracle-emit", "expr:a'b'", "-n", "3"])),
        golden("oracle_a_b_.txt")
    );
    assert_eq!(
        stdout(&qcam(&[
            "grover", "needle:5", "-n", "6", "--seed", "42", "--shots", "1000"
        ])),
        golden("grover_needle5_n6_seed42.json")
    );
    assert_eq!(
        stdout(&qcam(&[
            "grover",
            "expr:ab+c'",
            "-n",
            "3",
            "--iters",
            "2",
            "--seed",
            "7",
            "--shots",
            "64"
        ])),
        golden("grover_expr_seed7.json")
    );
}

#[test]
fn capacity_totals() {
    for (n, total) in [("0", "1"), ("3", "27"), ("20", "3486784401")] {
        let o = qcam(&["capacity", n]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(json(&o)["total"], total);
    }
}

#[test]
fn encode_cases() {
    let amps = |o: &Output| -> Vec<(f64, f64)> {
        json(o)["amps"]
            .as_array()
            .unwrap()
            .iter()
            .map(|p| (p[0].as_f64().unwrap(), p[1].as_f64().unwrap()))
            .collect()
    };
    assert_eq!(amps(&qcam(&["encode", "Z"])), vec![(1.0, 0.0), (0.0, 0.0)]);
    assert_eq!(amps(&qcam(&["encode", "BB"])), vec![(1.0, 0.0); 4]);
    let bad = qcam(&["encode", "ZX"]);
    assert_eq!(bad.status.code(), Some(1));
    assert_eq!(json(&bad)["status"], "error");
    assert!(!bad.stderr.is_empty());
}

#[test]
fn read_cases() {
    let dir = tempfile::tempdir().unwrap();
    let state = paper_state(&dir);
    let s = state.to_str().unwrap();

    let o = json(&qcam(&["read", s, "0"]));
    assert_eq!(
        (o["bit"].as_u64(), o["probability"].as_f64()),
        (Some(1), Some(0.5))
    );
    let o = json(&qcam(&["read", s, "7"]));
    assert_eq!(
        (o["bit"].as_u64(), o["probability"].as_f64()),
        (Some(0), Some(0.0))
    );

    let o = qcam(&["read", s, "8"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(json(&o)["error_message"]
        .as_str()
        .unwrap()
        .contains("0..=7"));

    let o = json(&qcam(&["read", s, "1", "--shots", "200", "--seed", "3"]));
    let counts = &o["samples"]["counts"];
    assert_eq!(
        counts["0"].as_u64().unwrap() + counts["1"].as_u64().unwrap(),
        200
    );
}

#[test]
fn cam_cases() {
    let dir = tempfile::tempdir().unwrap();
    let state = paper_state(&dir);
    let s = state.to_str().unwrap();

    let o = json(&qcam(&["cam", s, "expr:a'b'"]));
    assert!((o["probability"].as_f64().unwrap() - 1.0).abs() <= 1e-12);
    assert_eq!(o["recognizes"], true);

    let o = json(&qcam(&["cam", s, "needle:0"]));
    assert!((o["probability"].as_f64().unwrap() - 0.5).abs() <= 1e-12);
    assert_eq!(o["recognizes"], false);

    let o = json(&qcam(&["cam", s, "expr:x'y'", "--vars", "x,y,z"]));
    assert_eq!(o["recognizes"], true);

    let o = qcam(&["cam", s, "expr:ab", "--vars", "a,b"]);
    assert_eq!(o.status.code(), Some(1));

    let missing = dir.path().join("nope.json");
    assert_eq!(
        qcam(&["cam", missing.to_str().unwrap(), "needle:0"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn cam_rejects_oversized_state_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("big.json");
    std::fs::write(&path, r#"{"n":30,"amps":[]}"#).unwrap();
    assert_eq!(
        qcam(&["cam", path.to_str().unwrap(), "needle:0"])
            .status
            .code(),
        Some(2)
    );
    std::fs::write(&path, r#"{"n":2,"amps":[[1,0]]}"#).unwrap();
    assert_eq!(
        qcam(&["read", path.to_str().unwrap(), "0"]).status.code(),
        Some(1)
    );
}

#[test]
fn grover_cases() {
    let o = json(&qcam(&["grover", "needle:2", "-n", "2"]));
    assert_eq!(o["iterations"], 1);
    assert!((o["simulated_success"].as_f64().unwrap() - 1.0).abs() <= 1e-12);
    let samples = o["samples"].as_object().unwrap();
    assert_eq!(samples.keys().collect::<Vec<_>>(), vec!["2"]);

    let o = json(&qcam(&["grover", "expr:1", "-n", "3"]));
    assert_eq!(o["iterations"], 0);
    assert!((o["simulated_success"].as_f64().unwrap() - 1.0).abs() <= 1e-12);

    let o = qcam(&["grover", "minterms:", "-n", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("no solution"));

    assert_eq!(
        qcam(&["grover", "needle:0", "-n", "25"]).status.code(),
        Some(2)
    );
    assert_eq!(
        qcam(&["grover", "needle:0", "-n", "3", "--iters", "many"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn oracle_emit_cases() {
    let o = stdout(&qcam(&["oracle-emit", "expr:a'b'", "-n", "3"]));
    assert_eq!(o.lines().filter(|l| l.starts_with("mcx")).count(), 2);
    assert_eq!(
        stdout(&qcam(&["oracle-emit", "minterms:", "-n", "2"])),
        "qubits 3\n"
    );
    assert_eq!(
        stdout(&qcam(&["oracle-emit", "needle:0", "-n", "2"])),
        "qubits 3\nmcx controls=(0,-),(1,-) target=aux\n"
    );

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("net.txt");
    let o = qcam(&[
        "oracle-emit",
        "needle:3",
        "-n",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success() && o.stdout.is_empty());
    assert_eq!(
        std::fs::read_to_string(path).unwrap(),
        "qubits 3\nmcx controls=(0,+),(1,+) target=aux\n"
    );
}

#[test]
fn help_succeeds() {
    let o = qcam(&["--help"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("Z = (1 0)"));
}
