//! CLI acceptance: determinism of the JSON reports, exit-code contract,
//! and the published schema.

use std::process::{Command, Output};
use std::time::Instant;

fn mdl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mdl"))
        .args(args)
        .env_remove("MDL_CONFIG")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn criterion_12_verify_json_is_byte_identical_and_green() {
    let start = Instant::now();
    let args = [
        "verify",
        "--suite",
        "all",
        "--seed",
        "42",
        "--json",
        "--no-timestamp",
    ];
    let first = mdl(&args);
    let second = mdl(&args);
    assert_eq!(first.status.code(), Some(0), "{}", stdout(&first));
    assert_eq!(second.status.code(), Some(0));
    assert!(!first.stdout.is_empty());
    assert_eq!(
        first.stdout, second.stdout,
        "identical command, flags and seed must produce byte-identical JSON"
    );
    let parsed: serde_json::Value = serde_json::from_slice(&first.stdout).expect("valid JSON");
    for key in ["version", "command", "params", "results"] {
        assert!(parsed.get(key).is_some(), "missing top-level key {key}");
    }
    assert!(parsed.get("timestamp_unix").is_none());
    let results = parsed["results"].as_array().expect("results array");
    assert!(results.len() >= 30);
    for r in results {
        assert_eq!(r["status"], "pass");
        // counterexamples appear exactly on failures
        assert!(r.get("counterexample").is_none());
        // elapsed timings are part of the excluded wall-clock data
        assert!(r.get("elapsed_ms").is_none());
    }
    println!(
        "[PASS] criterion 12: verify --suite all --seed 42 --json --no-timestamp byte-identical across runs, exit 0 ({:?})",
        start.elapsed()
    );
}

#[test]
fn exit_codes_follow_the_contract() {
    // success
    assert_eq!(mdl(&["vector", "--g", "6", "1", "1", "0"]).status.code(), Some(0));
    // usage errors exit 2
    assert_eq!(mdl(&["springer", "3", "2"]).status.code(), Some(2));
    assert_eq!(mdl(&["vector", "--g", "1", "1", "1", "0"]).status.code(), Some(2));
    assert_eq!(
        mdl(&["collection", "--g", "6", "3", "1", "3"]).status.code(),
        Some(2),
        "(3,1,3) is outside H at g=6"
    );
    assert_eq!(
        mdl(&["verify", "--suite", "bogus"]).status.code(),
        Some(2)
    );
    // malformed flags are rejected by the parser with the same code
    assert_eq!(mdl(&["vector", "--g", "six", "1", "1", "0"]).status.code(), Some(2));
    assert_eq!(mdl(&["nonsense"]).status.code(), Some(2));
}

#[test]
fn vector_json_schema_and_values() {
    let out = mdl(&["vector", "--g", "6", "3", "1", "2", "--json", "--no-timestamp"]);
    assert_eq!(out.status.code(), Some(0));
    let parsed: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(parsed["command"], "vector");
    let entry = &parsed["results"][0];
    assert_eq!(entry["dim_moduli"], 0);
    assert_eq!(entry["in_h"], true);
    assert_eq!(entry["mu"], 0);
    assert_eq!(entry["chi"], 5);
    // deterministic across runs
    let again = mdl(&["vector", "--g", "6", "3", "1", "2", "--json", "--no-timestamp"]);
    assert_eq!(out.stdout, again.stdout);

    // the Hilbert-scheme vector: depth 2 with reflection image (0,1,1)
    let out = mdl(&["vector", "--g", "6", "1", "1", "0", "--json", "--no-timestamp"]);
    let parsed: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let entry = &parsed["results"][0];
    assert_eq!(entry["mu"], 2);
    assert_eq!(entry["sigma"], serde_json::json!([0, 1, 1]));
    // the excluded class r = d = 0 sits outside V
    let out = mdl(&["vector", "--g", "7", "0", "0", "1", "--json", "--no-timestamp"]);
    let parsed: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let entry = &parsed["results"][0];
    assert_eq!(entry["in_v"], false);
    assert_eq!(entry["mu"], serde_json::Value::Null);
}

#[test]
fn collection_renderings() {
    // table for mu = 0 has a single stratum
    let out = mdl(&["collection", "--g", "6", "3", "1", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).matches("^0").count(), 1);

    // the genus-6 Hilbert scheme: six nodes, solid inclusions, dashed
    // fibrations, deepest label G(2,5)
    let out = mdl(&["collection", "--g", "6", "1", "1", "0", "--format", "dot"]);
    let dot = stdout(&out);
    assert_eq!(dot.matches("label=\"M(").count(), 6);
    assert_eq!(dot.matches("style=solid").count(), 3);
    assert_eq!(dot.matches("style=dashed").count(), 3);
    assert!(dot.contains("G(2,5)"));

    // JSON schema
    let out = mdl(&["collection", "--g", "6", "1", "1", "0", "--format", "json", "--no-timestamp"]);
    let parsed: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    for key in ["version", "command", "params", "results"] {
        assert!(parsed.get(key).is_some(), "missing top-level key {key}");
    }
    let entry = &parsed["results"][0];
    assert_eq!(entry["mu"], 2);
    assert_eq!(entry["n"], 2);
    assert_eq!(entry["rows"].as_array().unwrap().len(), 3);
    assert_eq!(entry["rows"][0][2]["fiber"]["sub"], 2);
    assert_eq!(entry["rows"][0][2]["fiber"]["ambient"], 5);
}

#[test]
fn group_reports_the_genus7_witness() {
    let out = mdl(&["group", "--g", "7", "--json", "--no-timestamp"]);
    assert_eq!(out.status.code(), Some(0));
    let parsed: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let results = parsed["results"].as_array().unwrap();
    assert_eq!(results[0]["o2_word_identity"], true);
    assert_eq!(results[1]["example_is_isometry"], true);
    assert_eq!(results[1]["example_gamma_criterion"], false);

    // depth-2 search reaches translates of the point class
    let out = mdl(&["group", "--g", "6", "--bfs-depth", "2", "--json", "--no-timestamp"]);
    let parsed: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let count = parsed["results"][0]["bfs_image_count"].as_u64().unwrap();
    assert!(count > 3, "depth-2 search must reach several images, got {count}");

    // the word identity is reported at the smallest genus as well
    let out = mdl(&["group", "--g", "2", "--json", "--no-timestamp"]);
    assert_eq!(out.status.code(), Some(0));
    let parsed: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(parsed["results"][0]["o2_word_identity"], true);
}

#[test]
fn springer_command_is_deterministic_and_green() {
    let args = ["springer", "4", "2", "--samples", "1000", "--seed", "42", "--json", "--no-timestamp"];
    let out = mdl(&args);
    assert_eq!(out.status.code(), Some(0));
    let again = mdl(&args);
    assert_eq!(out.stdout, again.stdout);
    let parsed: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let entry = &parsed["results"][0];
    assert_eq!(entry["samples"], 1000);
    assert!(entry["failures"].as_array().unwrap().is_empty());
    let histogram = entry["corank_histogram"].as_array().unwrap();
    let total: u64 = histogram.iter().map(|h| h["count"].as_u64().unwrap()).sum();
    assert_eq!(total, 1000);
    // the regression transcript records the point, its endomorphism and ranks
    let transcript = entry["transcript"].as_array().unwrap();
    assert_eq!(transcript.len(), 2);
    for sample in transcript {
        assert_eq!(sample["subspace_basis"].as_array().unwrap().len(), 2);
        assert_eq!(sample["endomorphism"].as_array().unwrap().len(), 4);
        assert!(sample["rank"].as_u64().unwrap() <= 2);
    }
}

#[test]
fn config_file_is_read_with_flag_precedence() {
    let dir = std::env::temp_dir().join("mdl-config-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("config");
    std::fs::write(&path, "# comment\nseed = 7\nsamples = 11\n").unwrap();

    let with_config = |extra: &[&str]| {
        let mut args = vec!["springer", "4", "1", "--json", "--no-timestamp"];
        args.extend_from_slice(extra);
        Command::new(env!("CARGO_BIN_EXE_mdl"))
            .args(&args)
            .env("MDL_CONFIG", &path)
            .output()
            .expect("binary runs")
    };
    let out = with_config(&[]);
    assert_eq!(out.status.code(), Some(0));
    let parsed: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(parsed["params"]["seed"], 7);
    assert_eq!(parsed["params"]["samples"], 11);

    // flags beat the config file
    let out = with_config(&["--seed", "9", "--samples", "13"]);
    let parsed: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(parsed["params"]["seed"], 9);
    assert_eq!(parsed["params"]["samples"], 13);

    // malformed config is a usage error
    std::fs::write(&path, "nonsense\n").unwrap();
    assert_eq!(with_config(&[]).status.code(), Some(2));
}
