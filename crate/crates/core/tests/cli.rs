use std::process::{Command, Output};

use serde_json::Value;

fn bgham(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bgham")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(name: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("bgham-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn octahedron_edge_has_three_good_cycles() {
    let o = bgham(&["good-cycles", "--family", "uniform", "--params", "2,4", "--edge", "0,1"]);
    assert_eq!(o.status.code(), Some(0));
    let o = bgham(&["good-cycles", "--family", "uniform", "--params", "2,4", "--edge", "0,1", "--json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["good_cycles"].as_array().unwrap().len(), 3);
    assert_eq!(v["count"], 3);
}

#[test]
fn bounds_for_four_vertices_four_connected() {
    let o = bgham(&["bounds", "--family", "graphicK", "--params", "4,4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("1152"), "{}", stdout(&o));
}

#[test]
fn count_on_complete_basis_graph() {
    let o = bgham(&["count-hc", "--family", "graphic2", "--params", "cycle(5)", "--edge", "0,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains('6'), "{}", stdout(&o));
}

#[test]
fn verify_small_graphic_pool_passes() {
    let o = bgham(&["verify", "--family", "graphic2", "--n-max", "4", "--no-witnesses"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).starts_with("PASS"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(bgham(&["bounds", "--family", "nope", "--params", "3"]).status.code(), Some(2));
    assert_eq!(bgham(&["count-hc", "--family", "uniform"]).status.code(), Some(2));
    assert_eq!(bgham(&["frobnicate"]).status.code(), Some(2));
    let o = bgham(&["count-hc", "--family", "uniform", "--params", "2,4", "--edge", "0,9"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
}

#[test]
fn witness_file_round_trip_and_tampering() {
    let o = bgham(&["witness", "--family", "uniform", "--params", "2,4", "--edge", "0,1", "--cap", "5", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let path = scratch("witness.json");
    std::fs::write(&path, &o.stdout).unwrap();
    let ok = bgham(&["check-witness", path.to_str().unwrap()]);
    assert_eq!(ok.status.code(), Some(0), "{}", stdout(&ok));

    let mut v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let cycles = v["witnesses"]["cycles"].as_array_mut().unwrap();
    let first = cycles[0].clone();
    cycles.push(first);
    std::fs::write(&path, serde_json::to_vec(&v).unwrap()).unwrap();
    let dup = bgham(&["check-witness", path.to_str().unwrap()]);
    assert_eq!(dup.status.code(), Some(1), "{}", stdout(&dup));
    assert!(stdout(&dup).starts_with("FAIL"));

    std::fs::write(&path, b"not json").unwrap();
    assert_eq!(bgham(&["check-witness", path.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn replay_rechecks_a_report_record() {
    let o = bgham(&["verify", "--family", "uniform", "--params", "2,4", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let report: Value = serde_json::from_slice(&o.stdout).unwrap();
    let record = report["records"][0].clone();
    let path = scratch("record.json");
    std::fs::write(&path, serde_json::to_vec(&record).unwrap()).unwrap();
    let r = bgham(&["replay", path.to_str().unwrap()]);
    assert_eq!(r.status.code(), Some(0), "{}", stdout(&r));
    assert!(stdout(&r).starts_with("PASS") || stdout(&r).starts_with("CAPPED-PASS"));
}

#[test]
fn dot_export_is_stable() {
    let args = ["export", "--family", "graphic2", "--params", "cycle(3)", "--dot"];
    let a = stdout(&bgham(&args));
    assert!(a.starts_with("graph BG {"));
    assert_eq!(a.matches(" -- ").count(), 3);
    assert_eq!(a, stdout(&bgham(&args)));
}
