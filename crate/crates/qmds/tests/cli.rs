use std::process::{Command, Output};

use serde_json::Value;

fn qmds(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qmds"))
        .args(args)
        .output()
        .expect("spawn qmds")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON report")
}

#[test]
fn family_a_example_passes() {
    let out = qmds(&[
        "construct",
        "--family",
        "A",
        "--p",
        "7",
        "--e",
        "1",
        "--s",
        "3",
        "--lambda",
        "1",
        "--k",
        "4",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["passed"], true);
    assert_eq!(r["code"]["n"], 16);
    assert_eq!(r["code"]["claimed_distance"], 13);
    assert_eq!(r["checks"]["criterion_grid_zero"], true);
    assert_eq!(r["checks"]["rows_orthogonal"], true);
    assert_eq!(r["checks"]["lemma3"], true);
    assert!(r["checks"].get("lagrange_oracle").is_none());
    assert_eq!(
        (
            r["quantum"]["n"].clone(),
            r["quantum"]["k"].clone(),
            r["quantum"]["d"].clone()
        ),
        (16.into(), 8.into(), 5.into())
    );
    assert_eq!(r["field"]["modulus"], serde_json::json!([3, 1, 1]));
}

#[test]
fn family_b_example_passes() {
    let out = qmds(&[
        "construct",
        "--family",
        "B",
        "--p",
        "5",
        "--e",
        "1",
        "--s",
        "1",
        "--k",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["checks"]["mds_method"], "exhaustive");
    assert_eq!(r["checks"]["mds_result"], 17);
    assert_eq!(r["checks"]["lagrange_oracle"], true);
    assert_eq!(r["quantum"]["k"], 13);
    assert_eq!(r["quantum"]["mds"], true);
}

#[test]
fn precondition_violations_exit_one() {
    let out = qmds(&[
        "construct",
        "--family",
        "A",
        "--p",
        "5",
        "--e",
        "1",
        "--s",
        "2",
        "--k",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("s must be odd"));

    let out = qmds(&[
        "construct",
        "--family",
        "A",
        "--p",
        "7",
        "--s",
        "3",
        "--k",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("k exceeds (s+1)m/2"));

    let out = qmds(&[
        "construct",
        "--family",
        "B",
        "--p",
        "6",
        "--s",
        "1",
        "--k",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(1));

    assert_eq!(qmds(&["construct", "--family", "C"]).status.code(), Some(1));
    assert_eq!(qmds(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(qmds(&["--help"]).status.code(), Some(0));
}

#[test]
fn injected_fault_exits_two_without_quantum() {
    let out = qmds(&[
        "construct",
        "--family",
        "A",
        "--p",
        "7",
        "--s",
        "3",
        "--k",
        "4",
        "--inject-fault",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let r = json(&out);
    assert_eq!(r["passed"], false);
    assert_eq!(r["checks"]["criterion_grid_zero"], false);
    assert_eq!(
        r["checks"]["criterion_grid_zero"],
        r["checks"]["rows_orthogonal"]
    );
    assert_eq!(r["checks"]["scalars_in_subfield"], false);
    assert!(r["quantum"].is_null());
}

#[test]
fn reports_are_byte_identical() {
    let args = [
        "construct",
        "--family",
        "B",
        "--p",
        "2",
        "--e",
        "2",
        "--s",
        "1",
        "--k",
        "2",
        "--dump-matrix",
    ];
    let a = qmds(&args);
    let b = qmds(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let r = json(&a);
    assert_eq!(r["matrix"]["generator"].as_array().unwrap().len(), 2);
    assert_eq!(r["matrix"]["alpha"][0], "0");
    assert!(r.get("elapsed_ms").is_none());

    let t = json(&qmds(&[
        "construct",
        "--family",
        "B",
        "--p",
        "2",
        "--e",
        "2",
        "--s",
        "1",
        "--k",
        "2",
        "--timings",
    ]));
    assert!(t["elapsed_ms"]["mds"].is_number());
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("qmds-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = qmds(&[
        "construct",
        "--family",
        "A",
        "--p",
        "3",
        "--s",
        "1",
        "--k",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let r: Value = serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    assert_eq!(r["quantum"]["n"], 8);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn unsafe_extended_is_checked_but_not_certified() {
    let out = qmds(&[
        "construct",
        "--family",
        "B",
        "--p",
        "5",
        "--s",
        "3",
        "--k",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("(q - 1)/2"));

    let out = qmds(&[
        "construct",
        "--family",
        "B",
        "--p",
        "5",
        "--s",
        "3",
        "--k",
        "1",
        "--unsafe-extended",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["certified"], false);
    assert_eq!(r["passed"], true);
    assert_eq!(r["request"]["unsafe_extended"], true);

    let out = qmds(&[
        "construct",
        "--family",
        "A",
        "--p",
        "7",
        "--s",
        "3",
        "--k",
        "1",
        "--unsafe-extended",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn explicit_representatives() {
    let out = qmds(&[
        "construct",
        "--family",
        "A",
        "--p",
        "7",
        "--s",
        "3",
        "--lambda",
        "2",
        "--k",
        "4",
        "--coset-reps",
        "1,2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["request"]["reps"], serde_json::json!([1, 2]));

    let out = qmds(&[
        "construct",
        "--family",
        "A",
        "--p",
        "7",
        "--s",
        "3",
        "--lambda",
        "2",
        "--k",
        "4",
        "--coset-reps",
        "1,4",
    ]);
    assert_eq!(out.status.code(), Some(1));

    let out = qmds(&[
        "construct",
        "--family",
        "B",
        "--p",
        "7",
        "--s",
        "2",
        "--k",
        "3",
        "--removed-reps",
        "2,0",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn small_tables() {
    let out = qmds(&["table", "--q-max", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());

    let out = qmds(&["table", "--q-max", "3", "--verify-below", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let rows: Vec<Value> = out
        .stdout
        .split(|&b| b == b'\n')
        .filter(|l| !l.is_empty())
        .map(|l| serde_json::from_slice(l).unwrap())
        .collect();
    assert!(rows
        .iter()
        .any(|r| r["quantum"] == serde_json::json!([8, 4, 3]) && r["verified"] == true));

    let out = qmds(&["table", "--q-max", "5", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "family,q,s,m,lambda,n,k_classical,quantum_n,quantum_k,quantum_d,mds,verified,status,d_exceeds_half_q");
    assert!(lines.any(|l| l == "B,5,1,,,19,3,19,13,4,true,false,not_requested,true"));

    assert_eq!(qmds(&["table", "--q-max", "257"]).status.code(), Some(1));
}

#[test]
fn table_is_deterministic_across_job_counts() {
    let one = qmds(&[
        "table",
        "--q-max",
        "7",
        "--verify-below",
        "5",
        "--jobs",
        "1",
    ]);
    let four = qmds(&[
        "table",
        "--q-max",
        "7",
        "--verify-below",
        "5",
        "--jobs",
        "4",
    ]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn selftest_passes_and_detects_corruption() {
    let out = qmds(&["selftest"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("all checks passed"));
    assert_eq!(
        text.lines()
            .filter(|l| l.trim_start().starts_with(char::is_numeric))
            .count(),
        8
    );

    let out = qmds(&["selftest", "--inject-fault"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stdout).unwrap().contains("FAIL"));
}
