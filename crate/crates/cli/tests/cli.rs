use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn burnkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_burnkit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout(out)).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn generated(dir: &Path, name: &str, args: &[&str]) -> PathBuf {
    let out = burnkit(args);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    write(dir, name, &stdout(&out))
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn generate_path_nine() {
    let out = burnkit(&["generate", "path", "9"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "9 8");
    assert_eq!(lines.len(), 9);
    assert_eq!(lines[1], "0 1");
}

#[test]
fn generate_necklace_and_errors() {
    let out = burnkit(&["generate", "necklace", "4", "3"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("12 "));

    let out = burnkit(&["generate", "path", "0"]);
    assert_ne!(code(&out), 0);
    assert!(!out.stderr.is_empty());
    assert_ne!(code(&burnkit(&["generate", "moebius", "3"])), 0);
    assert_ne!(code(&burnkit(&["generate", "path"])), 0);
}

#[test]
fn generate_random_is_seeded() {
    let a = burnkit(&["--seed", "7", "generate", "random-regular", "20", "3"]);
    let b = burnkit(&["generate", "random-regular", "20", "3", "--seed", "7"]);
    let c = burnkit(&["generate", "random-regular", "20", "3", "--seed", "8"]);
    assert_eq!(stdout(&a), stdout(&b));
    assert_ne!(stdout(&a), stdout(&c));
}

#[test]
fn burn_examples() {
    let dir = TempDir::new().unwrap();
    let p9 = generated(dir.path(), "p9.txt", &["generate", "path", "9"]);
    let k6 = generated(dir.path(), "k6.txt", &["generate", "complete", "6"]);

    let out = burnkit(&["burn", "exact", s(&p9)]);
    assert_eq!(code(&out), 0);
    let w = json(&out);
    assert_eq!(w["length"], 3);
    assert_eq!(w["valid"], true);

    let report = dir.path().join("report.json");
    let out = burnkit(&["burn", "mindeg", s(&k6), "--report", s(&report)]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["length"], 3);
    let r: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(r["h_size"], 1);

    for mode in ["greedy", "weakdeg"] {
        let out = burnkit(&["burn", mode, s(&p9), "--epsilon", "0.2"]);
        assert_eq!(code(&out), 0, "{mode}");
        assert_eq!(json(&out)["valid"], true);
    }
}

#[test]
fn bad_graph_files_exit_one() {
    let dir = TempDir::new().unwrap();
    let split = write(dir.path(), "split.txt", "4 2\n0 1\n2 3\n");
    let out = burnkit(&["burn", "exact", s(&split)]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("connected"));

    let garbage = write(dir.path(), "bad.txt", "3 2\n0 1\n1 1\n");
    assert_eq!(code(&burnkit(&["burn", "greedy", s(&garbage)])), 1);
    assert_eq!(code(&burnkit(&["burn", "greedy", "/nonexistent/graph"])), 1);
    assert_eq!(code(&burnkit(&["burn", "sideways", s(&garbage)])), 1);
}

#[test]
fn dominate_c6_and_trace() {
    let dir = TempDir::new().unwrap();
    let c6 = generated(dir.path(), "c6.txt", &["generate", "cycle", "6"]);
    let trace = dir.path().join("trace.csv");
    let out = burnkit(&["dominate", "2hop", s(&c6), "--trace", s(&trace)]);
    assert_eq!(code(&out), 0);
    let w = json(&out);
    assert_eq!(w["hops"], 2);
    assert_eq!(w["vertices"], serde_json::json!([0, 1, 2, 3]));
    let csv = std::fs::read_to_string(&trace).unwrap();
    assert_eq!(csv.lines().count(), 2);

    for mode in ["cds-nonleaf", "cds-greedy"] {
        let out = burnkit(&["dominate", mode, s(&c6)]);
        assert_eq!(code(&out), 0);
        assert_eq!(json(&out)["hops"], 1);
    }
    assert_eq!(
        code(&burnkit(&[
            "dominate",
            "cds-greedy",
            s(&c6),
            "--trace",
            s(&trace)
        ])),
        1
    );
}

#[test]
fn reduce_k4_has_empty_trace() {
    let dir = TempDir::new().unwrap();
    let k4 = generated(dir.path(), "k4.txt", &["generate", "complete", "4"]);
    let out = burnkit(&["reduce", s(&k4)]);
    assert_eq!(code(&out), 0);
    let r = json(&out);
    assert_eq!(r["trace"], serde_json::json!([]));
    assert_eq!(r["core"]["vertices"], serde_json::json!([0, 1, 2, 3]));
}

#[test]
fn witnesses_round_trip_through_verify() {
    let dir = TempDir::new().unwrap();
    let g = generated(
        dir.path(),
        "g.txt",
        &["generate", "random-connected", "30", "15", "--seed", "3"],
    );
    for mode in ["exact", "greedy", "mindeg", "weakdeg"] {
        let w = dir.path().join(format!("{mode}.json"));
        let out = burnkit(&["burn", mode, s(&g), "--out", s(&w)]);
        assert_eq!(code(&out), 0, "{mode}");
        assert_eq!(
            code(&burnkit(&["verify", "schedule", s(&g), s(&w)])),
            0,
            "{mode}"
        );
    }
    for mode in ["2hop", "cds-nonleaf", "cds-greedy"] {
        let w = dir.path().join(format!("{mode}.json"));
        assert_eq!(
            code(&burnkit(&["dominate", mode, s(&g), "--out", s(&w)])),
            0
        );
        assert_eq!(
            code(&burnkit(&["verify", "domset", s(&g), s(&w)])),
            0,
            "{mode}"
        );
    }
}

#[test]
fn tampered_witnesses() {
    let dir = TempDir::new().unwrap();
    let p9 = generated(dir.path(), "p9.txt", &["generate", "path", "9"]);
    let c6 = generated(dir.path(), "c6.txt", &["generate", "cycle", "6"]);

    let w = write(
        dir.path(),
        "s.json",
        r#"{"n":9,"length":3,"centers":[0,6,8],"valid":true}"#,
    );
    assert_eq!(code(&burnkit(&["verify", "schedule", s(&p9), s(&w)])), 2);
    let w = write(
        dir.path(),
        "d.json",
        r#"{"n":6,"hops":2,"vertices":[0,3],"valid":true}"#,
    );
    assert_eq!(code(&burnkit(&["verify", "domset", s(&c6), s(&w)])), 2);

    // malformed and mismatched witnesses are input errors, not invalid ones
    let w = write(dir.path(), "m.json", r#"{"n":9,"centers":"#);
    assert_eq!(code(&burnkit(&["verify", "schedule", s(&p9), s(&w)])), 1);
    let w = write(
        dir.path(),
        "n.json",
        r#"{"n":6,"length":2,"centers":[0,3],"valid":true}"#,
    );
    assert_eq!(code(&burnkit(&["verify", "schedule", s(&p9), s(&w)])), 1);
}

#[test]
fn bounds_command() {
    let out = burnkit(&["bounds", "2000", "8"]);
    assert_eq!(code(&out), 0);
    let b = json(&out);
    assert_eq!(b["thm1_ref"], 26);
    assert_eq!(b["sqrt_ceil"], 45);
    assert_eq!(code(&burnkit(&["bounds", "5", "5"])), 1);
}

#[test]
fn experiment_examples() {
    let dir = TempDir::new().unwrap();
    let cfg = write(
        dir.path(),
        "paths.cfg",
        "family = path\nparams = 4\nparams = 9\nparams = 16\nparams = 25\n\
         algorithm = exact\noutput = paths.csv\n",
    );
    assert_eq!(
        code(&burnkit(&["experiment", s(&cfg), "--threads", "3"])),
        0
    );
    let csv = std::fs::read_to_string(dir.path().join("paths.csv")).unwrap();
    let mut reader = csv::Reader::from_reader(csv.as_bytes());
    let lengths: Vec<String> = reader
        .records()
        .map(|r| r.unwrap()[6].to_string())
        .collect();
    assert_eq!(lengths, ["2", "3", "4", "5"]);

    let empty = write(dir.path(), "empty.cfg", "# nothing to run\n");
    let out = burnkit(&["experiment", s(&empty)]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).lines().count(), 1);
    assert!(stdout(&out).starts_with("family,params,seed,n,min_degree,algorithm,"));

    let broken = write(dir.path(), "broken.cfg", "family = path\nparams = x\n");
    assert_eq!(code(&burnkit(&["experiment", s(&broken)])), 1);
}

#[test]
fn help_exits_zero() {
    assert_eq!(code(&burnkit(&["--help"])), 0);
    assert_eq!(code(&burnkit(&[])), 1);
}

#[test]
fn dominate_start_and_prune_flags() {
    let dir = TempDir::new().unwrap();
    let p7 = generated(dir.path(), "p7.txt", &["generate", "path", "7"]);
    let out = burnkit(&["dominate", "2hop", s(&p7), "--start", "0"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        json(&out)["vertices"],
        serde_json::json!([0, 1, 2, 3, 4, 5, 6])
    );
    assert_eq!(
        code(&burnkit(&["dominate", "2hop", s(&p7), "--start", "7"])),
        1
    );

    let g = generated(
        dir.path(),
        "g.txt",
        &["generate", "random-regular", "40", "3", "--seed", "2"],
    );
    let w = dir.path().join("w.json");
    let out = burnkit(&["burn", "weakdeg", s(&g), "--prune", "--out", s(&w)]);
    assert_eq!(code(&out), 0);
    assert_eq!(code(&burnkit(&["verify", "schedule", s(&g), s(&w)])), 0);
}
