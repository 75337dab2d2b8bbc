use std::process::Command;

use serde_json::Value;

fn e8cas(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_e8cas")).args(args).output().expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = e8cas(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn sigma_set_of_adjoint() {
    let v = json(&["sigma-set", "--weight", "1,0,0,0,0,0,0,0"]);
    assert_eq!(v["member_count"], 3);
    assert_eq!(v["orbit_size_sum"], "240");
    let sumset = json(&["sigma-set", "--weight", "1,0,0,0,0,0,0,0", "--method", "sumset"]);
    assert_eq!(sumset["set"], v["set"]);
}

#[test]
fn sigma_set_csv_has_one_row_per_member() {
    let (code, out, _) = e8cas(&["--format", "csv", "sigma-set", "--weight", "0,0,0,0,0,0,0,1"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "q1,q2,q3,q4,q5,q6,q7,q8,a8_orbit_size");
    assert_eq!(lines.len(), 1 + 11);
}

#[test]
fn csv_refused_for_scalar_results() {
    let (code, _, err) = e8cas(&["--format", "csv", "dims", "--weight", "1,0,0,0,0,0,0,0"]);
    assert_eq!(code, 2);
    assert!(err.contains("csv"));
}

#[test]
fn dims_of_3875() {
    let v = json(&["dims", "--weight", "0,0,0,0,0,0,1,0"]);
    assert_eq!(v["by_orbits"], "3875");
    assert_eq!(v["by_weyl_formula"], "3875");
}

#[test]
fn dualities_pass_by_default() {
    let v = json(&["verify-dualities", "--points", "5"]);
    let reports = v["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 4);
    for r in reports {
        assert_eq!(r["passed"], true, "{r}");
    }
    assert_eq!(reports[0]["mode"], "exact");
    assert_eq!(reports[1]["mode"], "exact");
}

#[test]
fn omega_tables_verify() {
    let v = json(&["verify-omega"]);
    assert_eq!(v["passed"], true);
}

#[test]
fn invalid_arguments_exit_2() {
    assert_eq!(e8cas(&["dims", "--weight", "1,2,3"]).0, 2);
    assert_eq!(e8cas(&["dims", "--weight", "-1,0,0,0,0,0,0,0"]).0, 2);
    assert_eq!(e8cas(&["casimir-eval", "--degree", "9", "--alpha", "1", "--weight", "1,0,0,0,0,0,0,0"]).0, 2);
    assert_eq!(e8cas(&["casimir-eval", "--degree", "8", "--alpha", "8", "--weight", "1,0,0,0,0,0,0,0"]).0, 2);
    assert_eq!(e8cas(&["char", "--degree", "8", "--weight", "1,0,0,0,0,0,0,0", "--point", "1,2"]).0, 2);
    assert_eq!(e8cas(&["no-such-command"]).0, 2);
    assert_eq!(e8cas(&["verify-cache"]).0, 2);
}

#[test]
fn help_exits_0() {
    let (code, out, _) = e8cas(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("sigma-set"));
}

#[test]
fn enumeration_guard_exits_3() {
    let (code, _, err) = e8cas(&["char", "--degree", "8", "--weight", "1,1,1,1,1,1,1,1", "--method", "enumeration"]);
    assert_eq!(code, 3, "{err}");
}

#[test]
fn character_methods_agree() {
    for w in ["1,0,0,0,0,0,0,0", "0,0,0,0,0,0,1,0", "0,1,0,0,0,0,0,0"] {
        for m in ["8", "12"] {
            let a = json(&["char", "--degree", m, "--weight", w]);
            let b = json(&["char", "--degree", m, "--weight", w, "--method", "enumeration"]);
            assert_eq!(a["value"], b["value"], "{w} degree {m}");
        }
    }
}

#[test]
fn char_at_explicit_point() {
    // x = (1,0,…,0,−1), so ⟨α,h⟩ = α_1 − α_9. The 72 roots e_I − e_J give
    // 2·4 + 28·1 and the 168 roots ±(e_I + e_J + e_K − ⅓Σe) give 84·1.
    let v = json(&["char", "--degree", "2", "--weight", "1,0,0,0,0,0,0,0", "--point", "1,0,0,0,0,0,0,0"]);
    assert_eq!(v["value"], "120");
}

#[test]
fn casimir_eval_reports_vanishing_reference() {
    let v = json(&["casimir-eval", "--degree", "8", "--alpha", "7", "--weight", "0,0,0,0,0,0,1,0"]);
    assert_eq!(v["p"], Value::Null);
    assert!(v["p_note"].is_string());
    let v = json(&["casimir-eval", "--degree", "8", "--alpha", "1", "--weight", "1,0,0,0,0,0,0,0"]);
    assert_eq!(v["p"], "1");
    assert_eq!(v["k_function"], "K1(8)");
}

#[test]
fn multiplicities_agree_for_small_reps() {
    let v = json(&["multiplicities", "--weight", "0,0,0,0,0,0,0,1"]);
    assert_eq!(v["agree"], true);
    let rows = v["weights"].as_array().unwrap();
    assert_eq!(rows.last().unwrap()["freudenthal"], "370");
    assert_eq!(rows.last().unwrap()["chars"], "370");
}

#[test]
fn output_is_identical_across_thread_counts() {
    let args = ["verify-k", "--degree", "12", "--max-dim", "1000000", "--samples", "10"];
    let (c1, a, _) = e8cas(&[&["--threads", "1"], &args[..]].concat());
    let (c4, b, _) = e8cas(&[&["--threads", "4"], &args[..]].concat());
    assert_eq!((c1, c4), (1, 1));
    assert_eq!(a, b);
    let args = ["--seed", "7", "char", "--degree", "14", "--weight", "0,1,0,0,0,0,0,0", "--rep"];
    assert_eq!(e8cas(&[&["--threads", "1"], &args[..]].concat()), e8cas(&[&["--threads", "3"], &args[..]].concat()));
}

#[test]
fn seed_changes_random_points() {
    let a = json(&["--seed", "1", "char", "--degree", "8", "--weight", "1,0,0,0,0,0,0,0"]);
    let b = json(&["--seed", "2", "char", "--degree", "8", "--weight", "1,0,0,0,0,0,0,0"]);
    assert_ne!(a["point"], b["point"]);
}

#[test]
fn cache_round_trip_and_verification() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let first = e8cas(&["--cache-dir", d, "sigma-set", "--weight", "0,0,0,0,0,0,1,0"]);
    let second = e8cas(&["--cache-dir", d, "sigma-set", "--weight", "0,0,0,0,0,0,1,0"]);
    let uncached = e8cas(&["sigma-set", "--weight", "0,0,0,0,0,0,1,0"]);
    assert_eq!(first, second);
    assert_eq!(first, uncached);
    for w in ["1,0,0,0,0,0,0,0", "0,1,0,0,0,0,0,0", "2,0,0,0,0,0,0,0"] {
        e8cas(&["--cache-dir", d, "multiplicities", "--weight", w, "--method", "freudenthal"]);
    }
    let v = json(&["--cache-dir", d, "verify-cache"]);
    assert_eq!(v["entries"], 4);
    assert_eq!(v["checked"].as_array().unwrap().len(), 4);
    assert_eq!(v["passed"], true);
}

#[test]
fn tampered_cache_entry_fails_verification() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    e8cas(&["--cache-dir", d, "sigma-set", "--weight", "1,0,0,0,0,0,0,0"]);
    let file = std::fs::read_dir(dir.path()).unwrap().next().unwrap().unwrap().path();
    let text = std::fs::read_to_string(&file).unwrap().replace("\"240\"", "\"241\"");
    std::fs::write(&file, text).unwrap();
    let (code, out, _) = e8cas(&["--cache-dir", d, "verify-cache"]);
    assert_eq!(code, 1);
    assert!(out.contains("\"identical\": false"));
}

#[test]
fn verify_k_reports_classes() {
    let (code, out, _) = e8cas(&["verify-k", "--degree", "8"]);
    // The degree-8 span check fails for the p2^4 class; the report says so.
    assert_eq!(code, 1);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["class_count"], 2);
    assert_eq!(v["rank"], 3);
    assert_eq!(v["transcription"]["passed"], true);
    assert_eq!(v["span_with_theta2_powers"]["passed"], true);
}
