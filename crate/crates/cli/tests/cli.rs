use std::path::PathBuf;
use std::process::{Command, Output};

use covtype::WctReport;

fn docs(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("tests/docs");
    p.push(name);
    p.to_string_lossy().into_owned()
}

fn covtype(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_covtype"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 output")
}

fn write_temp(name: &str, text: &str) -> String {
    let dir = std::env::temp_dir().join(format!("covtype-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn abstract_product_matches_golden() {
    let out = covtype(&["wct", &docs("abstract_product.json")]);
    assert_eq!(out.status.code(), Some(0));
    let golden = include_str!("golden/abstract_product.txt");
    assert_eq!(stdout(&out), golden);
}

#[test]
fn abstract_product_rows() {
    let out = covtype(&["wct", "--format", "json", &docs("abstract_product.json")]);
    let report: WctReport = serde_json::from_str(&stdout(&out)).unwrap();
    let dims: Vec<i64> = report.dmax_table.iter().map(|r| r.dimension).collect();
    assert_eq!(dims, [-1, 3, 5, 5, 8, 8, 10, 10, 12]);
    assert_eq!(report.final_value, 70);
}

#[test]
fn json_round_trip_is_byte_identical() {
    for doc in ["abstract_product.json", "sp2_weighted.json", "lens_times_sphere.json"] {
        let out = covtype(&["wct", "--format", "json", "--refine", "indep", &docs(doc)]);
        let text = stdout(&out);
        if out.status.code() != Some(0) {
            continue;
        }
        let report: WctReport = serde_json::from_str(&text).unwrap();
        let mut again = serde_json::to_string_pretty(&report).unwrap();
        again.push('\n');
        assert_eq!(again, text, "{doc}");
    }
}

#[test]
fn sp2_targets() {
    let out = covtype(&["wct", &docs("sp2_weighted.json")]);
    let text = stdout(&out);
    assert!(text.contains("sct ≥ 24\n"), "{text}");
    assert!(text.contains("Δ ≥ 24\n"));

    let out = covtype(&["wct", &docs("sp2_unweighted.json")]);
    assert!(stdout(&out).contains("ct ≥ 20\n"));
    let out = covtype(&["wct", "--refine", "indep", &docs("sp2_unweighted.json")]);
    let text = stdout(&out);
    assert!(text.contains("\nct ≥ 21\n"), "{text}");
    assert!(text.contains("INDEPENDENT_MIN_WEIGHT"));
}

#[test]
fn refinements_from_document_and_flag() {
    let out = covtype(&["wct", "--refine", "hdim", &docs("lens_times_sphere.json")]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("ct ≥ 24\n"));
    let out = covtype(&["wct", "--refine", "hdim", &docs("sp2_unweighted.json")]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("BAD_PARAM"));
    // indep needs two distinct minimal-weight factors
    let out = covtype(&["wct", "--refine", "indep", &docs("sp2_weighted.json")]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("INDEPENDENCE_NOT_WITNESSED"));
}

#[test]
fn zero_product_exits_1() {
    let out = covtype(&["wct", &docs("zero_product.json")]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("ZERO_PRODUCT"));
    assert!(stdout(&out).is_empty());
}

#[test]
fn oracle_flag_agrees() {
    for doc in ["abstract_product.json", "lens5.json", "sp2_weighted.json"] {
        let out = covtype(&["wct", "--oracle", &docs(doc)]);
        assert_eq!(out.status.code(), Some(0), "{doc}: {}", stderr(&out));
    }
    let out = covtype(&["swct", "--oracle", &docs("rp5.json")]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn swct_examples() {
    let out = covtype(&["swct", &docs("rp5.json")]);
    let text = stdout(&out);
    assert!(text.starts_with("witness: (x×5)\n"), "{text}");
    assert!(text.contains("classes examined: "));
    assert!(text.contains("ct ≥ 21\n"));

    let out = covtype(&["swct", &docs("lens5.json")]);
    let text = stdout(&out);
    assert!(text.starts_with("witness: (x, y×2)\n"), "{text}");
    assert!(text.contains("ct ≥ 21\n"));

    let out = covtype(&["swct", &docs("sphere5.json")]);
    assert!(stdout(&out).contains("ct ≥ 7\n"));

    let out = covtype(&["swct", "--format", "json", "--max-degree", "3", &docs("rp5.json")]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["value"], 10);
    assert_eq!(v["max_total_degree"], 3);
}

#[test]
fn swct_rejects_non_strict() {
    let out = covtype(&["swct", &docs("sp2_weighted.json")]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("NOT_STRICT"));
}

#[test]
fn swct_budget_errors() {
    let out = covtype(&["swct", "--max-factors", "0", &docs("rp5.json")]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("BAD_BUDGET"));
    let poly = write_temp(
        "poly.json",
        r#"{"prime": 3, "generators": [{"name": "y", "degree": 2, "nilpotency": "unbounded"}]}"#,
    );
    let out = covtype(&["swct", &poly]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("UNBOUNDED_ALGEBRA"));
    let out = covtype(&["swct", "--max-degree", "6", &poly]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("witness: (y×3)"));
}

#[test]
fn catalog_examples() {
    let out = covtype(&["catalog", "su_quotient", "n=3", "p=3", "r=1"]);
    let text = stdout(&out);
    assert!(text.contains("computed: 40\n"));
    assert!(text.contains("expected: 40 "));
    assert!(text.ends_with("status: PASS\n"));

    let out = covtype(&["catalog", "stiefel", "dims=9,11,13", "i=3"]);
    let text = stdout(&out);
    assert!(text.contains("computed: 398\n"));
    assert!(text.ends_with("status: PASS\n"));

    let out = covtype(&["catalog", "dold", "r=1", "s=1"]);
    let text = stdout(&out);
    assert!(text.contains("computed: 8\n"));
    assert!(text.contains("printed 6, recomputed 8"));
    assert!(text.ends_with("status: FLAGGED\n"));

    let out = covtype(&["catalog", "--format", "json", "symplectic_product", "m=1", "n=1"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["computed"], 12);
    assert_eq!(v["status"], "FLAGGED");
    assert_eq!(v["printed"][0]["printed"], 14);
}

#[test]
fn catalog_errors() {
    for args in [
        &["catalog", "nope"][..],
        &["catalog", "lens"],
        &["catalog", "lens", "n=1", "zzz=2"],
        &["catalog", "lens", "n=x"],
        &["catalog", "lens", "n=1", "p=4"],
        &["catalog", "lens", "n"],
        &["catalog"],
        &["catalog", "lens", "n=1", "--all"],
        &["catalog", "lens", "n=99999999999"],
    ] {
        let out = covtype(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(stderr(&out).starts_with("error: "), "{args:?}");
    }
}

#[test]
fn catalog_all_has_no_failures() {
    let out = covtype(&["catalog", "--all"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(!text.contains("FAIL "));
    assert!(text.contains("PASS"));
    assert!(text.contains("FLAGGED"));
}

#[test]
fn malformed_documents_exit_1() {
    let cases = [
        ("empty.json", ""),
        ("array.json", "[]"),
        ("syntax.json", "{\"prime\": 3,"),
        ("unknown_field.json", r#"{"prime": 3, "generators": [], "bogus": 1}"#),
        ("nonprime.json", r#"{"prime": 4, "generators": []}"#),
        ("negative.json", r#"{"prime": 3, "generators": [{"name": "x", "degree": -1, "nilpotency": 2}]}"#),
        ("nil_str.json", r#"{"prime": 3, "generators": [{"name": "x", "degree": 2, "nilpotency": "many"}]}"#),
        ("odd.json", r#"{"prime": 3, "generators": [{"name": "x", "degree": 1, "nilpotency": 3}]}"#),
        (
            "bad_factor.json",
            r#"{"prime": 3, "generators": [{"name": "x", "degree": 2, "nilpotency": 3}], "sequence": [{"factor": "x^^2"}]}"#,
        ),
        (
            "huge.json",
            r#"{"prime": 2, "generators": [{"name": "x", "degree": 4000000000, "nilpotency": 4000000000}]}"#,
        ),
        (
            "copies.json",
            r#"{"prime": 2, "generators": [{"name": "x", "degree": 1, "nilpotency": "unbounded"}], "sequence": [{"factor": "x", "copies": 4000000000}]}"#,
        ),
        (
            "weight.json",
            r#"{"prime": 3, "generators": [{"name": "y", "degree": 2, "nilpotency": 3}], "weights": {"y": {"weight": 3}}, "sequence": [{"factor": "y"}]}"#,
        ),
        (
            "no_sequence.json",
            r#"{"prime": 3, "generators": [{"name": "y", "degree": 2, "nilpotency": 3}]}"#,
        ),
    ];
    for (name, text) in cases {
        let path = write_temp(name, text);
        let out = covtype(&["wct", &path]);
        assert_eq!(out.status.code(), Some(1), "{name}: {}", stderr(&out));
        assert!(stderr(&out).starts_with("error: "), "{name}");
    }
    let out = covtype(&["wct", "/nonexistent/doc.json"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("IO_ERROR"));
}

#[test]
fn located_error_messages() {
    let path = write_temp(
        "located.json",
        r#"{"prime": 3,
            "generators": [{"name": "x", "degree": 2, "nilpotency": 3}],
            "sequence": [{"factor": "x"}, {"factor": "w"}]}"#,
    );
    let out = covtype(&["wct", &path]);
    assert!(stderr(&out).contains("UNKNOWN_GENERATOR at sequence[1]"), "{}", stderr(&out));
    let path = write_temp("syntax2.json", "{\n  \"prime\": 3,\n  \"generators\": [}\n");
    let out = covtype(&["wct", &path]);
    assert!(stderr(&out).contains("PARSE_ERROR at line 3"), "{}", stderr(&out));
}

#[test]
fn usage_exit_codes() {
    assert_eq!(covtype(&["--help"]).status.code(), Some(0));
    assert_eq!(covtype(&[]).status.code(), Some(1));
    assert_eq!(covtype(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(covtype(&["wct"]).status.code(), Some(1));
    assert_eq!(covtype(&["--format", "xml", "catalog", "--all"]).status.code(), Some(1));
    assert_eq!(covtype(&["--refine", "bogus", "wct", "x"]).status.code(), Some(1));
}
