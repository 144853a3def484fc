use d4git::suite::{run_suite, Status, SUITES};
use d4git::Error;

#[test]
fn sections_are_deterministic() {
    for name in ["equations", "quiver", "charts", "orbit"] {
        let a = run_suite(name, 7).unwrap().to_json();
        let b = run_suite(name, 7).unwrap().to_json();
        assert_eq!(a, b, "{name}");
    }
}

#[test]
fn charts_suite_runs_the_closure_check() {
    let r = run_suite("charts", 1).unwrap();
    let c = r.checks.iter().find(|c| c.id == "charts.closure").unwrap();
    assert_eq!(c.status, Status::Pass);
    assert!(c.details.starts_with("24/24"));
}

#[test]
fn orbit_suite_finds_q8() {
    let r = run_suite("orbit", 2).unwrap();
    let c = r.checks.iter().find(|c| c.id == "orbit.stabilizer_order_8").unwrap();
    assert_eq!(c.status, Status::Pass);
    assert!(r.all_passed());
}

#[test]
fn unknown_suite() {
    assert!(matches!(run_suite("nope", 0), Err(Error::UnknownSuite(_))));
    assert!(SUITES.contains(&"all"));
}

#[test]
fn report_shape() {
    let r = run_suite("quiver", 3).unwrap();
    let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(v["suite"], "quiver");
    assert_eq!(v["seed"], 3);
    assert_eq!(v["summary"]["total"].as_u64().unwrap() as usize, r.checks.len());
    let ids: Vec<&str> = r.checks.iter().map(|c| c.id.as_str()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
}
