use std::io::Write;
use std::process::{Command, Output, Stdio};

use drdf::graph::parse_edge_list;

fn drdf(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_drdf"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn record(o: &Output) -> serde_json::Value {
    serde_json::from_str(stdout(o).trim()).unwrap()
}

#[test]
fn gen_cycle_pipe_gamma() {
    let g = drdf(&["gen", "--family", "cycle", "--n", "11"], "");
    assert!(g.status.success());
    let r = drdf(&["gamma"], &stdout(&g));
    assert_eq!(r.status.code(), Some(0));
    assert_eq!(record(&r)["gamma_dr"], 12);
}

#[test]
fn gamma_empty_input_fails() {
    let r = drdf(&["gamma"], "");
    assert_eq!(r.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&r.stderr).contains("line 1"));
}

#[test]
fn gamma_timeout_exit_code() {
    let g = drdf(&["gen", "--family", "cycle", "--n", "300"], "");
    let r = drdf(&["gamma", "--timeout-s", "0"], &stdout(&g));
    assert_eq!(r.status.code(), Some(2));
    assert_eq!(record(&r)["status"]["kind"], "timeout-with-bounds");
}

#[test]
fn allow_ones_agrees_on_path() {
    let p5 = stdout(&drdf(&["gen", "--family", "path", "--n", "5"], ""));
    let a = record(&drdf(&["gamma"], &p5));
    let b = record(&drdf(&["gamma", "--allow-ones"], &p5));
    assert_eq!(a["gamma_dr"], b["gamma_dr"]);
    assert_eq!(a["gamma_dr"], 6);
}

#[test]
fn tadpole_degree_sequence() {
    let o = drdf(&["gen", "--family", "tadpole", "--m", "5", "--k", "6"], "");
    let g = parse_edge_list(&stdout(&o)).unwrap();
    assert_eq!(g.order(), 11);
    let mut deg = g.degrees();
    deg.sort_unstable();
    assert_eq!(deg, [1, 2, 2, 2, 2, 2, 2, 2, 2, 2, 3]);
}

#[test]
fn random_is_reproducible() {
    let args = ["random", "--model", "uniform-min-deg-2", "--n", "30", "--seed", "7", "--count", "2"];
    let a = drdf(&args, "");
    let b = drdf(&args, "");
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).matches("# instance").count(), 2);
    let r = drdf(&["random", "--model", "uniform-min-deg-2", "--n", "2"], "");
    assert_eq!(r.status.code(), Some(1));
}

#[test]
fn check_valid_and_invalid() {
    let dir = std::env::temp_dir().join(format!("drdf-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let lab = dir.join("c4.lab");
    std::fs::write(&lab, "4\n2 0 2 0\n").unwrap();
    let c4 = stdout(&drdf(&["gen", "--family", "cycle", "--n", "4"], ""));
    let ok = drdf(&["check", "--labeling", lab.to_str().unwrap()], &c4);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(stdout(&ok).trim(), "VALID weight=4");
    std::fs::write(&lab, "4\n2 0 0 0\n").unwrap();
    let bad = drdf(&["check", "--labeling", lab.to_str().unwrap()], &c4);
    assert_eq!(bad.status.code(), Some(3));
    assert!(stdout(&bad).contains("VIOLATION vertex=1"));
    std::fs::write(&lab, "4\n2 0 2\n").unwrap();
    let short = drdf(&["check", "--labeling", lab.to_str().unwrap()], &c4);
    assert_eq!(short.status.code(), Some(1));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn construct_record() {
    let g = stdout(&drdf(&["gen", "--family", "tadpole", "--m", "5", "--k", "6"], ""));
    let r = drdf(&["construct", "--trace"], &g);
    assert!(r.status.success());
    let rec = record(&r);
    assert_eq!(rec["weight"], 12);
    assert_eq!(rec["satisfied"], true);
    assert_eq!(rec["threshold"], serde_json::json!([132, 11]));
    assert!(rec["trace"]["steps"].as_array().is_some_and(|s| !s.is_empty()));
}

#[test]
fn sweep_writes_report_and_certificates() {
    let dir = std::env::temp_dir().join(format!("drdf-cli-sweep-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let report = dir.join("five.jsonl");
    let r = drdf(
        &[
            "sweep", "--n-min", "5", "--n-max", "5", "--jobs", "2", "--report",
            report.to_str().unwrap(), "--fail-on-violation",
        ],
        "",
    );
    // C_5 is the only violation and is not excluded here.
    assert_eq!(r.status.code(), Some(3));
    assert!(stdout(&r).starts_with("instances,satisfied,violations,excluded"));
    let summary: Vec<usize> = stdout(&r).lines().nth(1).unwrap().split(',').map(|x| x.parse().unwrap()).collect();
    assert_eq!(summary[2], 1);
    let rows = std::fs::read_to_string(&report).unwrap();
    assert_eq!(rows.lines().count(), summary[0]);
    assert!(dir.join("five-certificates").is_dir());
    let r = drdf(
        &["sweep", "--n-min", "5", "--n-max", "5", "--exclude", "cycle:5", "--fail-on-violation"],
        "",
    );
    assert_eq!(r.status.code(), Some(0));
    std::fs::remove_dir_all(&dir).unwrap();
}
