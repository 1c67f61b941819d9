//! End-to-end tests of the `skab` binary: output shapes, exit codes,
//! JSON round-tripping, and determinism of the table export.

use std::process::{Command, Output};

fn skab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skab"))
        .args(args)
        .output()
        .expect("failed to launch skab")
}

fn stdout_json(args: &[&str]) -> serde_json::Value {
    let out = skab(args);
    assert!(out.status.success(), "skab {args:?}: {:?}", out);
    serde_json::from_slice(&out.stdout).expect("stdout is not JSON")
}

/// Re-serializing parsed output must reproduce the bytes exactly
/// (key order is preserved).
fn assert_round_trips(args: &[&str]) {
    let out = skab(args);
    assert!(out.status.success(), "skab {args:?}");
    let text = String::from_utf8(out.stdout).unwrap();
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string(&value).unwrap(), text.trim_end());
}

#[test]
fn params_json() {
    let v = stdout_json(&["params", "--s", "1"]);
    assert_eq!(v["genus"], 196);
    assert_eq!(v["period"], 65);
    assert_eq!(v["num_points"], 29185);
    assert_eq!(v["code_length"], 29183);
    assert_eq!(
        v["semigroup_generators"],
        serde_json::json!([40, 50, 60, 64, 65])
    );
    assert_round_trips(&["params", "--s", "1"]);
}

#[test]
fn tau_and_inverse() {
    let v = stdout_json(&["tau", "--i", "0"]);
    assert_eq!(v["i"], 0);
    assert_eq!(v["tau"], 0);
    assert_eq!(v["decomposition"]["k"], -1);
    assert_eq!(v["decomposition"]["r"], 64);
    assert_eq!(v["decomposition"]["case_low"], false);

    let v = stdout_json(&["tau", "--i", "1"]);
    assert_eq!(v["tau"], 391);
    assert_eq!(v["decomposition"]["a_t"], 4);
    assert_eq!(v["decomposition"]["a_x"], 2);

    let v = stdout_json(&["tau", "--i", "-65"]);
    assert_eq!(v["tau"], 65);

    let v = stdout_json(&["tau-inv", "--j", "-5"]);
    assert_eq!(v["i"], 40);
    assert_round_trips(&["tau", "--i", "40"]);
    assert_round_trips(&["tau-inv", "--j", "391"]);
}

#[test]
fn member_dim_nu() {
    let v = stdout_json(&["member", "--i", "40", "--j", "-5"]);
    assert_eq!(v["member"], true);
    let v = stdout_json(&["member", "--i", "1", "--j", "390"]);
    assert_eq!(v["member"], false);

    let v = stdout_json(&["dim", "--a", "1", "--b", "517"]);
    assert_eq!(v["dim"], 323);

    let v = stdout_json(&["nu", "--a", "39", "--b", "0"]);
    assert_eq!(v["nu_p"], 2);

    for args in [
        &["nu", "--a", "39", "--b", "0"][..],
        &["member", "--i", "40", "--j", "-5"],
        &["dim", "--a", "6", "--b", "424"],
        &["onepoint", "--k", "28948"],
        &["semigroup"],
    ] {
        assert_round_trips(args);
    }
}

#[test]
fn bound_json_and_text() {
    let v = stdout_json(&["bound", "--a", "1", "--b", "517"]);
    assert_eq!(v["order_bound"], 138);
    assert_eq!(v["goppa_dual"], 128);
    assert_eq!(v["dual_dimension"], 28860);
    assert_round_trips(&["bound", "--a", "1", "--b", "517"]);

    let out = skab(&["bound", "--a", "1", "--b", "517", "--format", "text"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    for field in [
        "a: 1",
        "b: 517",
        "degree: 518",
        "rr_dimension: 323",
        "dual_dimension: 28860",
        "goppa_dual: 128",
        "order_bound: 138",
        "horizon: 265",
    ] {
        assert!(text.contains(field), "missing `{field}` in:\n{text}");
    }
}

#[test]
fn bound_horizon_only_shortens() {
    // an absurdly large horizon is clamped to the default, not obeyed
    let v = stdout_json(&["bound", "--a", "400", "--b", "383", "--horizon", "100000"]);
    assert_eq!(v["horizon"], 0);
    assert_eq!(v["order_bound"], 393);
    // shortening is allowed and sound
    let v = stdout_json(&["bound", "--a", "1", "--b", "517", "--horizon", "0"]);
    assert_eq!(v["horizon"], 0);
    assert_eq!(v["order_bound"], 128);
}

#[test]
fn onepoint_row() {
    let v = stdout_json(&["onepoint", "--k", "28860"]);
    assert_eq!(v["b_prime"], 518);
    assert_eq!(v["d1"], 128);
}

#[test]
fn semigroup_outputs() {
    let v = stdout_json(&["semigroup"]);
    assert_eq!(v["conductor"], 392);
    assert_eq!(v["genus"], 196);
    assert_eq!(v["gaps"][0], 1);

    let out = skab(&["semigroup", "--format", "text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("genus: 196"));
    assert!(text.lines().any(|l| l == "39"));
    assert_eq!(
        text.lines().filter(|l| l.parse::<i64>().is_ok()).count(),
        196
    );
}

#[test]
fn figure_csv() {
    let out = skab(&["figure", "--window", "1"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("i,j"));
    assert!(text.lines().any(|l| l == "0,0"));
    assert!(!text.lines().any(|l| l == "1,390"));
}

#[test]
fn table_is_deterministic_across_worker_counts() {
    let run = |jobs: &str| {
        let out = skab(&["table", "--min-delta", "16", "--jobs", jobs]);
        assert!(out.status.success());
        out.stdout
    };
    let one = run("1");
    let four = run("4");
    assert_eq!(one, four, "table output depends on worker count");

    let text = String::from_utf8(one).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("k,a,b,deg,d,goppa,d1,b_prime,delta"));
    let rows: Vec<&str> = lines.collect();
    // only the four largest-delta rows clear a threshold of 16
    assert_eq!(
        rows,
        vec![
            "28948,6,424,430,60,40,40,430,20",
            "28949,6,423,429,60,39,40,429,20",
            "28950,6,422,428,60,38,40,428,20",
            "28951,6,421,427,60,37,40,427,20",
        ]
    );
}

#[test]
fn table_respects_env_jobs() {
    let out = Command::new(env!("CARGO_BIN_EXE_skab"))
        .args(["table", "--min-delta", "16", "--format", "json"])
        .env("SKAB_JOBS", "2")
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 4);
    assert_eq!(v[0]["k"], 28948);
    assert_eq!(serde_json::to_string(&v).unwrap(), text.trim_end());
}

#[test]
fn exit_codes() {
    // domain error -> 1
    let out = skab(&["params", "--s", "0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("s must be ≥ 1"));

    let out = skab(&["bound", "--a", "0", "--b", "0"]);
    assert_eq!(out.status.code(), Some(1));

    let out = skab(&["onepoint", "--k", "29183"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not achievable"));

    // usage errors -> 2
    let out = skab(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
    let out = skab(&["tau"]);
    assert_eq!(out.status.code(), Some(2));

    // I/O error carries the path
    let out = skab(&["figure", "--out", "/nonexistent-dir/f.csv"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("/nonexistent-dir/f.csv"));
}

#[test]
fn output_files_are_written() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rows.csv");
    let out = skab(&[
        "table",
        "--min-delta",
        "16",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("k,a,b,deg,d,goppa,d1,b_prime,delta\n"));
    assert_eq!(text.lines().count(), 5);
}
