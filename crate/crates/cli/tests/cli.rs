use std::process::{Command, Output};

use serde_json::Value;

fn sumrank(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sumrank"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = sumrank(&all);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_str(&stdout(&out)).unwrap()
}

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn ball_volume_289() {
    let out = sumrank(&["ball", "--q", "2", "--profile", "2x2,2x2,2x2", "--r", "2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("= 289"));
    assert_eq!(json(&["ball", "--q", "2", "--profile", "2x2,2x2,2x2", "--r", "2"])["volume"], "289");
}

#[test]
fn bounds_for_three_binary_blocks() {
    let v = json(&["bounds", "--q", "2", "--profile", "2x2,2x2,2x2", "--d", "5"]);
    assert_eq!(v["singleton"], "16");
    assert_eq!(v["sphere_packing"], "14");
    assert_eq!(v["linear_anticode_size"], "256");
    assert_eq!(v["ball_size"], "289");
    assert_eq!(v["tightest"], "sphere-packing");

    let text = stdout(&sumrank(&["bounds", "--q", "2", "--profile", "2x2,2x2,2x2", "--d", "5"]));
    assert!(text.contains("4,096"));
    assert!(text.lines().any(|l| l.starts_with("Sphere-Packing") && l.ends_with(" 14")));
}

#[test]
fn text_and_json_agree() {
    let args = ["bounds", "--q", "3", "--profile", "2x2,2x2,2x2", "--d", "5"];
    let v = json(&args);
    let text = stdout(&sumrank(&args));
    for key in ["singleton", "sphere_packing", "ball_size", "linear_anticode_size"] {
        let n: u64 = v[key].as_str().unwrap().parse().unwrap();
        let grouped = n.to_string().as_bytes().rchunks(3).rev().map(|c| std::str::from_utf8(c).unwrap()).collect::<Vec<_>>().join(",");
        assert!(text.contains(&grouped), "{key} = {grouped} missing from text output");
    }
}

#[test]
fn anticode_dim_prefers_uneven_split() {
    let v = json(&["anticode-dim", "--profile", "3x3,2x2", "--r", "4", "--q", "2"]);
    assert_eq!(v["k"], 11);
    assert_eq!(v["size"], "2048");
    assert_eq!(v["maximizers"], serde_json::json!([[3, 1]]));
}

#[test]
fn unsorted_profile_gets_a_notice() {
    let out = sumrank(&["anticode-dim", "--profile", "2x2,3x3", "--r", "4"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("3x3,2x2"));
    assert!(stdout(&out).contains("3x3,2x2"));
}

#[test]
fn compare_lists_the_hybrids() {
    let v = json(&["compare", "--q", "3", "--profile", "2x2,2x2,2x2,2x2,2x2,2x2,2x2", "--r", "8"]);
    let c = v["candidates"].as_array().unwrap();
    assert_eq!(c[0]["spec"], "full,full,ball(s=2,blocks=3..7)");
    assert_eq!(c[0]["size"], "69815601");
    assert!(c.iter().any(|x| x["spec"] == "full,full,full,full,zero,zero,zero" && x["linear"] == true));
}

#[test]
fn classify_counts_and_brute_force_agree() {
    let v = json(&["classify", "--profile", "2x2", "--r", "1", "--q", "3", "--count", "--brute"]);
    assert_eq!(v["case"], "a");
    // the 4 column spaces and the 4 row spaces of a line in GF(3)^2
    assert_eq!(v["count"], "8");
    assert_eq!(v["brute_force_count"], 8);
    assert_eq!(v["family_agrees"], true);
}

#[test]
fn binary_hamming_count_is_refused() {
    let out = sumrank(&["classify", "--profile", "1x1,1x1,1x1", "--r", "2", "--q", "2", "--count"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());

    let v = json(&["classify", "--profile", "1x1,1x1,1x1", "--r", "2", "--q", "2", "--count", "--brute"]);
    assert_eq!(v["count"], Value::Null);
    assert_eq!(v["brute_force_count"], 4);
}

#[test]
fn verify_accepts_an_optimal_anticode() {
    let f = data("optimal_3x3_2x2.txt");
    let v = json(&["verify", "--q", "2", "--profile", "3x3,2x2", "--basis", &f, "--r", "4"]);
    assert_eq!(v["dimension"], 11);
    assert_eq!(v["diameter"], 4);
    assert_eq!(v["is_anticode"], true);
    assert_eq!(v["optimal"], true);
}

#[test]
fn verify_rejects_a_wide_span() {
    let f = data("too_wide_3x3_2x2.txt");
    let v = json(&["verify", "--q", "2", "--profile", "3x3,2x2", "--basis", &f, "--r", "4"]);
    assert_eq!(v["diameter"], 5);
    assert_eq!(v["is_anticode"], false);
}

#[test]
fn verify_checks_the_profile() {
    let f = data("optimal_3x3_2x2.txt");
    let out = sumrank(&["verify", "--q", "2", "--profile", "3x3", "--basis", &f, "--r", "4"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn meshulam_report() {
    let f = data("span_2x3_1x1.txt");
    let v = json(&["meshulam", "--q", "3", "--profile", "2x3,1x1", "--basis", &f]);
    assert_eq!(v["ini"], serde_json::json!(["(1,1)", "(1,2)", "(2,1)"]));
    assert_eq!(v["rho"], 2);
    assert_eq!(v["max_srk"], 3);
    assert_eq!(v["holds"], true);
}

#[test]
fn geodesic_matches_sum_rank() {
    let f = data("pair_2x2_2x2.txt");
    let v = json(&["geodesic", "--q", "2", "--profile", "2x2,2x2", "--pair", &f]);
    assert_eq!(v["geodesic"], 2);
    assert_eq!(v["sum_rank"], 2);
    let v = json(&["geodesic", "--q", "2", "--profile", "2x2,1x1"]);
    assert_eq!(v["mismatches"], 0);
    assert_eq!(v["histogram"], serde_json::json!(["1", "10", "15", "6"]));
}

#[test]
fn demos_that_pass() {
    for name in ["distance-regularity", "hamming-binary", "remark-10-11"] {
        let out = sumrank(&["demo", name]);
        assert!(out.status.success(), "{name}: {}", stdout(&out));
        assert!(!stdout(&out).contains("FAIL"));
    }
}

#[test]
fn hybrid_demo_reports_the_off_by_one() {
    let out = sumrank(&["demo", "hybrid-f2-f5"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    let fails: Vec<&str> = text.lines().filter(|l| l.contains("FAIL")).collect();
    assert_eq!(fails.len(), 1, "{text}");
    assert!(fails[0].contains("69,815,601") && fails[0].contains("69,815,602"));
}

#[test]
fn errors_and_usage() {
    let out = sumrank(&["ball", "--q", "6", "--profile", "2x2", "--r", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("prime power"));

    let out = sumrank(&["ball", "--q", "2", "--profile", "2x2", "--r", "3"]);
    assert_eq!(out.status.code(), Some(1));

    let out = sumrank(&["ball", "--q", "2", "--profile", "2x2"]);
    assert_eq!(out.status.code(), Some(2));

    let out = sumrank(&["classify", "--profile", "2x2", "--r", "1", "--count"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cutoff_is_enforced() {
    let out = sumrank(&["--cutoff", "16", "geodesic", "--q", "2", "--profile", "2x2,1x1"]);
    assert_eq!(out.status.code(), Some(1));
}
