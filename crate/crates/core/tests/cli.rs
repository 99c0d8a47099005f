//! End-to-end behaviour of the command-line front end.

use proptest::prelude::*;

use theodorus::cli::run_with_io;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["theodorus"];
    argv.extend_from_slice(args);
    let code = run_with_io(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn seq_prints_terms() {
    assert_eq!(
        run(&["seq", "--kind", "fib", "--from", "1", "--to", "5"]).1,
        "1 1 2 3 5\n"
    );
    assert_eq!(
        run(&["seq", "--kind", "lucas", "--from", "0", "--to", "4"]).1,
        "2 1 3 4 7\n"
    );
    assert_eq!(run(&["seq", "--kind", "additive:2,5", "--to", "4"]).1, "2 5 7 12\n");
    assert_eq!(
        run(&["seq", "--kind", "theodorus", "--from", "3", "--to", "5"]).1,
        "3 4 5\n"
    );
    let (code, csv, _) = run(&["seq", "--to", "3", "--csv"]);
    assert_eq!(code, 0);
    assert_eq!(csv, "\"n\",\"term\"\n1,1\n2,1\n3,2\n");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["seq", "--kind", "pell"][..],
        &["verify"],
        &["verify", "--claim", "NOPE"],
        &["verify", "--all", "--claim", "AREA_RATIO"],
        &["frobnicate"],
        &["seq", "--from", "5", "--to", "2"],
        &["metrics", "--kind", "lucas", "--m", "2"],
        &["render", "--scheme", "plaid"],
        &["render", "--canvas", "0"],
        &["verify", "--claim", "AREA_RATIO", "--from", "0", "--to", "5"],
        &["--precision-bits", "8", "seq"],
        &["seq", "--json", "--csv"],
    ] {
        let (code, _, err) = run(args);
        assert_eq!(code, 2, "{args:?}: {err}");
        assert!(!err.is_empty(), "{args:?}");
    }
}

#[test]
fn help_exits_0() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("verify"));
}

#[test]
fn known_exception_exits_0() {
    // the floor identity fails only at n = 8, which is the stated exception
    let (code, out, _) = run(&["verify", "--claim", "FLOOR_CONJ", "--from", "8", "--to", "8"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("verified-with-exception"), "{out}");
}

#[test]
fn computation_error_exits_1() {
    // Hahn areas beyond the term cap
    let (code, _, err) = run(&["hahn", "--n-max", "12", "--term-cap", "10"]);
    assert_eq!(code, 1, "{err}");
}

#[test]
fn verify_text_lists_witness_params() {
    let (code, out, _) = run(&["verify", "--claim", "TEN_WINDING"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("TEN_WINDING  verified"), "{out}");
    assert!(out.contains("m = 10"), "{out}");
}

#[test]
fn windings_lists_each_revolution() {
    let (_, out, _) = run(&["windings", "--kind", "fib", "--revolutions", "3"]);
    assert_eq!(
        out,
        "k = 1: m = 10 triangles\nk = 2: m = 19 triangles\nk = 3: m = 29 triangles\n"
    );
}

#[test]
fn scan_floor_reports_exception() {
    let (code, out, _) = run(&["scan-floor", "--n-max", "200", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v[0]["status"], "verified-with-exception");
    assert_eq!(v[0]["witnesses"][0]["params"]["n"], 8);
}

#[test]
fn precision_env_var_is_honoured() {
    std::env::set_var("SPIRAL_PRECISION_BITS", "200");
    let (_, out, _) = run(&["verify", "--claim", "FLOOR_CONJ", "--json"]);
    std::env::remove_var("SPIRAL_PRECISION_BITS");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v[0]["precision_bits"].as_u64().unwrap() >= 200, "{out}");
}

#[test]
fn metrics_and_triangle_tables() {
    let (code, out, _) = run(&["metrics", "--to", "3", "--m", "2", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 3);
    assert!(v[0]["area"].as_str().unwrap().starts_with("0.5"));
    let (code, out, _) = run(&["triangle", "--kind", "fib", "--n", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("hypotenuse_radicand  5"), "{out}");
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 16, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn output_is_deterministic(n in 1u64..30, kind in prop::sample::select(vec!["fib", "lucas", "theodorus", "additive:3,4"])) {
        let n = n.to_string();
        for args in [
            vec!["metrics", "--kind", kind, "--to", n.as_str(), "--csv"],
            vec!["render", "--kind", kind, "--n", n.as_str()],
            vec!["seq", "--kind", kind, "--to", n.as_str(), "--json"],
        ] {
            let a = run(&args);
            let b = run(&args);
            prop_assert_eq!(a.0, 0);
            prop_assert_eq!(a, b);
        }
    }
}
