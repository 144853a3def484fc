use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

const BASE: &str = r#"{"alpha":[-2,1,-1],"beta":1,"B":[[0,1,0],[1,0,1],[1,0,-1]],"x":[1,"i"]}"#;
const BASE_X0: &str = r#"{"alpha":[-2,1,-1],"beta":1,"B":[[0,1,0],[1,0,1],[1,0,-1]],"x":[0,0]}"#;
const OFF_Z: &str = r#"{"alpha":[1,1,1],"beta":1,"B":[[0,1,0],[1,0,1],[1,0,-1]],"x":[1,0]}"#;

fn write_point(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("d4git-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn d4git(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_d4git")).args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_point() {
    let p = write_point("vp.json", BASE);
    let o = d4git(&["verify-point", "--point", p.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("in Z°: true"));
    let q = write_point("vp-off.json", OFF_Z);
    let o = d4git(&["--json", "verify-point", "--point", q.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["in_z"], false);
    assert!(!v["nonzero_components"].as_array().unwrap().is_empty());
}

#[test]
fn stability_exit_codes() {
    let base = write_point("st-base.json", BASE);
    let x0 = write_point("st-x0.json", BASE_X0);
    let off = write_point("st-off.json", OFF_Z);
    let run = |ch: &str, p: &PathBuf| code(&d4git(&["stability", "--character", ch, "--point", p.to_str().unwrap()]));
    assert_eq!(run("theta", &base), 0);
    assert_eq!(run("theta", &x0), 2);
    assert_eq!(run("minus-theta", &x0), 0);
    assert_eq!(run("theta", &off), 3);
    assert_eq!(run("minus-theta", &off), 3);
    assert_eq!(run("psi", &base), 64);
}

#[test]
fn stability_json_certificate() {
    let x0 = write_point("cert.json", BASE_X0);
    let o = d4git(&["stability", "--character", "theta", "--point", x0.to_str().unwrap(), "--json"]);
    assert_eq!(code(&o), 2);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["status"], "unstable");
    assert_eq!(v["certificate"]["torus"], serde_json::json!([1, 1, 1]));
}

#[test]
fn input_errors() {
    assert_eq!(code(&d4git(&["verify-point", "--point", "/nonexistent/point.json"])), 66);
    let bad = write_point("bad.json", "{\"alpha\": [1, 2]}");
    assert_eq!(code(&d4git(&["verify-point", "--point", bad.to_str().unwrap()])), 65);
}

#[test]
fn point_from_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_d4git"))
        .args(["quiver", "build", "--point", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(BASE.as_bytes()).unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(code(&o), 0);
    let s = stdout(&o);
    assert!(s.contains("preprojective: true"));
    assert!(s.contains("king stable: true"));
}

#[test]
fn charts() {
    let p = write_point("chart.json", BASE);
    let p = p.to_str().unwrap();
    assert_eq!(code(&d4git(&["chart", "normalize", "--index", "1", "--point", p])), 0);
    assert_eq!(code(&d4git(&["chart", "normalize", "--index", "2", "--point", p])), 3);
    assert_eq!(code(&d4git(&["chart", "normalize", "--index", "4", "--point", p])), 64);
    let o = d4git(&["chart", "closure-check"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("24/24 components reduce to 0"));
}

#[test]
fn orbit_stabilizer() {
    let o = d4git(&["orbit", "stabilizer"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("order 8, type Q8"));
    let o = d4git(&["orbit", "stabilizer", "--relaxed", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["order"], 16);
}

#[test]
fn examples() {
    let o = d4git(&["examples", "an", "--n", "4", "--chi", "1,1,1"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("interior rays: 3"));
    let o = d4git(&["examples", "an", "--n", "3", "--chi", "-1,-1", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["cones"][0]["multiplicity"], 3);
    assert_eq!(code(&d4git(&["examples", "an", "--n", "3", "--chi", "0,0"])), 3);
    let o = d4git(&["examples", "s3"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("stabilizer: order 6, type S3"));
}

#[test]
fn suite_is_deterministic() {
    let a = d4git(&["suite", "orbit", "--seed", "5", "--json"]);
    let b = d4git(&["suite", "orbit", "--seed", "5", "--json"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["seed"], 5);
}

#[test]
fn suite_exit_code_tracks_failures() {
    let o = d4git(&["suite", "all", "--seed", "1", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let failed = v["summary"]["failed"].as_u64().unwrap();
    assert_eq!(code(&o), if failed == 0 { 0 } else { 1 });
}

#[test]
fn usage_errors() {
    assert_eq!(code(&d4git(&["suite", "bogus"])), 64);
    assert_eq!(code(&d4git(&[])), 64);
    assert_eq!(code(&d4git(&["frobnicate"])), 64);
    assert_eq!(code(&d4git(&["stability", "--character", "theta"])), 64);
    assert_eq!(code(&d4git(&["--help"])), 0);
}
