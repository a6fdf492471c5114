//! End-to-end tests of the `crl` binary: exit codes, JSON envelope shape,
//! determinism, and the error paths (validation, budget, mismatch).

use std::process::{Command, Output};

fn crl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_crl"))
        .args(args)
        .env_remove("CRL_MAX_DIM")
        .output()
        .expect("binary runs")
}

fn stdout_json(output: &Output) -> serde_json::Value {
    assert!(output.status.success(), "stderr: {}", String::from_utf8_lossy(&output.stderr));
    serde_json::from_slice(&output.stdout).expect("valid JSON")
}

#[test]
fn degree_reports_both_formulas() {
    let output = crl(&["--json", "degree", "3,2"]);
    let envelope = stdout_json(&output);
    assert_eq!(envelope["command"], "degree");
    assert_eq!(envelope["schema_version"], "1");
    assert_eq!(envelope["lambda"], serde_json::json!([3, 2]));
    assert_eq!(envelope["results"]["agree"], true);
    assert_eq!(envelope["results"]["multiplicity_formula"]["value"], "12");
    assert_eq!(envelope["results"]["multiplicity_formula"]["method"], "formula");
    assert_eq!(envelope["results"]["de_jonquieres"]["value"], "12");
    assert_eq!(envelope["timing_ms"], serde_json::Value::Null);

    let human = crl(&["degree", "3,2"]);
    assert!(human.status.success());
    assert!(String::from_utf8_lossy(&human.stdout).contains("12"));
}

#[test]
fn singular_lists_merge_cases() {
    let output = crl(&["--json", "singular", "2,1"]);
    let envelope = stdout_json(&output);
    assert_eq!(envelope["results"]["is_smooth"], false);
    assert_eq!(
        envelope["results"]["merge_set"]["case_a"][0]["partition"],
        serde_json::json!([3])
    );

    let smooth = stdout_json(&crl(&["--json", "singular", "3,3"]));
    assert_eq!(smooth["results"]["is_smooth"], true);
}

#[test]
fn ideal_cross_validates_both_methods() {
    let output = crl(&["--json", "ideal", "3,2", "4", "--gens-up-to", "5"]);
    let envelope = stdout_json(&output);
    assert_eq!(envelope["certification"], "certified");
    assert_eq!(envelope["results"]["cross_validation"]["match"], true);
    assert_eq!(envelope["results"]["kernel"]["dim_ideal"], 28);
    assert_eq!(envelope["results"]["kernel"]["method"], "linear-algebra");
    assert_eq!(envelope["results"]["prediction"]["method"], "complex-prediction");
    assert_eq!(
        envelope["results"]["prediction"]["predicted"],
        envelope["results"]["kernel"]["character"]
    );
    assert_eq!(
        envelope["results"]["minimal_generators"]["by_degree"]["4"],
        28
    );
    assert_eq!(
        envelope["assumptions"],
        serde_json::json!(["H1_IX_vanishes", "H1_OX_vanishes"])
    );
}

#[test]
fn ideal_output_is_byte_identical_across_runs() {
    let first = crl(&["--json", "ideal", "3,3", "3"]);
    let second = crl(&["--json", "ideal", "3,3", "3"]);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn unknown_correction_downgrades_to_kernel_with_warning() {
    let output = crl(&["--json", "ideal", "2,2,1", "3", "--method", "predict"]);
    let envelope = stdout_json(&output);
    assert!(envelope["results"].get("prediction").is_none());
    assert!(envelope["results"]["kernel"]["dim_ideal"].is_number());
    let warnings = envelope["warnings"].as_array().unwrap();
    assert_eq!(warnings.len(), 1);
    assert!(warnings[0].as_str().unwrap().contains("falling back"));
}

#[test]
fn invalid_prediction_degree_is_a_mismatch_error() {
    let output = crl(&["ideal", "3,2", "2", "--method", "predict"]);
    assert_eq!(output.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&output.stderr).contains("vanishing assumptions"));
}

#[test]
fn budget_exceeded_exits_3() {
    let output = Command::new(env!("CARGO_BIN_EXE_crl"))
        .args(["ideal", "3,2", "4", "--method", "kernel"])
        .env("CRL_MAX_DIM", "10")
        .output()
        .expect("binary runs");
    assert_eq!(output.status.code(), Some(3));
}

#[test]
fn validation_errors_exit_2() {
    assert_eq!(crl(&["degree", "0,1"]).status.code(), Some(2));
    assert_eq!(crl(&["degree", "banana"]).status.code(), Some(2));
    assert_eq!(
        crl(&["covariants", "--locus", "3,2", "--check", "Q + 1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        crl(&["covariants", "--locus", "3,2", "-d", "6"]).status.code(),
        Some(2),
        "base degree contradicting the locus size"
    );
    // No criterion table for a three-part locus.
    assert_eq!(
        crl(&["covariants", "--locus", "2,2,1"]).status.code(),
        Some(2)
    );
}

#[test]
fn covariant_table_reports_vanishing() {
    let output = crl(&["--json", "covariants", "--locus", "3,2", "-d", "5"]);
    let envelope = stdout_json(&output);
    let table = envelope["results"]["table"].as_array().unwrap();
    assert_eq!(table.len(), 1);
    assert_eq!(table[0]["degree"], 4);
    let entries = table[0]["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 4);
    for entry in entries {
        assert_eq!(entry["vanishes"], true, "{}", entry["label"]);
        assert_eq!(entry["nonzero"], true);
    }
}

#[test]
fn calibration_recovers_the_quintic_ratio() {
    let output = crl(&[
        "--json",
        "covariants",
        "--locus",
        "3,2",
        "--calibrate",
        "H^2",
        "--calibrate",
        "i*F^2",
    ]);
    let envelope = stdout_json(&output);
    assert_eq!(
        envelope["results"]["vanishing_combinations"],
        serde_json::json!([["25", "-6"]])
    );
}

#[test]
fn check_mode_tests_a_single_expression() {
    let output = crl(&[
        "--json",
        "covariants",
        "--locus",
        "3,3",
        "--check",
        "8*F*FF6 - 75*T(F,i,2)",
    ]);
    let envelope = stdout_json(&output);
    assert_eq!(envelope["results"]["vanishes"], true);
    assert_eq!(envelope["results"]["nonzero"], true);

    let output = crl(&["--json", "covariants", "--locus", "3,3", "--check", "H"]);
    let envelope = stdout_json(&output);
    assert_eq!(envelope["results"]["vanishes"], false);
}

#[test]
fn char_operations_print_characters() {
    let envelope = stdout_json(&crl(&["--json", "char", "cg", "2", "2"]));
    assert_eq!(envelope["results"]["rendered"], "s4 + s2 + s0");
    assert_eq!(envelope["results"]["dim"], 9);
    assert_eq!(envelope["results"]["method"], "formula");
    assert_eq!(envelope["lambda"], serde_json::Value::Null);

    let envelope = stdout_json(&crl(&["--json", "char", "plethysm", "2", "4"]));
    assert_eq!(envelope["results"]["rendered"], "s8 + s4 + s0");

    let envelope = stdout_json(&crl(&["--json", "char", "wedge", "2", "3"]));
    assert_eq!(envelope["results"]["rendered"], "s4 + s0");

    let envelope = stdout_json(&crl(&["--json", "char", "tensor", "s3 + s1", "s2"]));
    assert_eq!(envelope["results"]["rendered"], "s5 + 2s3 + 2s1");

    assert_eq!(crl(&["char", "tensor", "nope", "s2"]).status.code(), Some(2));
}

#[test]
fn timing_flag_populates_timing_field() {
    let envelope = stdout_json(&crl(&["--json", "--timing", "char", "cg", "1", "1"]));
    assert!(envelope["timing_ms"].is_u64());
}
