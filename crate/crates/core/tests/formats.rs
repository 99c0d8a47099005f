//! Report serialization and SVG rendering.

use std::collections::BTreeMap;

use proptest::prelude::*;

use theodorus::export_render::{export_report, parse_report_json, render_svg, Format, RenderOptions};
use theodorus::spiral_engine::geometry;
use theodorus::verifier::{verify_claim, ClaimId, ClaimReport, ParamRange, Status, VerifyConfig, Witness};
use theodorus::SequenceSpec;

fn status() -> impl Strategy<Value = Status> {
    prop_oneof![
        Just(Status::Verified),
        Just(Status::VerifiedWithException),
        Just(Status::Undecided),
        Just(Status::Refuted),
    ]
}

fn witness() -> impl Strategy<Value = Witness> {
    (
        "[a-z-]{1,12}",
        prop::collection::btree_map("[a-z]{1,3}", any::<i64>(), 0..3),
        prop::collection::btree_map("[a-z_]{1,8}", "[ -~]{0,20}", 0..3),
        prop::option::of("[ -~]{0,30}"),
    )
        .prop_map(|(label, params, values, note)| Witness {
            label,
            params,
            values,
            note,
        })
}

fn report() -> impl Strategy<Value = ClaimReport> {
    (
        0..ClaimId::ALL.len(),
        status(),
        (0u64..1000, 0u64..1000),
        prop::option::of((0.0f64..1.0, 0.0f64..1e9)),
        prop::collection::vec(witness(), 0..4),
        53u32..5000,
        prop::option::of(0.0f64..100.0),
        prop::collection::vec("[ -~]{0,40}", 0..2),
    )
        .prop_map(|(i, status, (a, b), dev, witnesses, bits, runtime, notes)| {
            let claim = ClaimId::ALL[i];
            ClaimReport {
                claim,
                kind: claim.kind(),
                status,
                range: ParamRange::new("n", a.min(b), a.max(b)),
                max_deviation_lo: dev.map(|d| d.0),
                max_deviation_hi: dev.map(|d| d.0 + d.1),
                witnesses,
                precision_bits: bits,
                runtime_s: runtime,
                notes,
            }
        })
}

proptest! {
    #[test]
    fn json_round_trip(reports in prop::collection::vec(report(), 0..5)) {
        let json = export_report(&reports, Format::Json).unwrap();
        let back = parse_report_json(&json).unwrap();
        prop_assert_eq!(back, reports);
    }

    #[test]
    fn csv_has_one_row_per_report(reports in prop::collection::vec(report(), 0..5)) {
        let csv = export_report(&reports, Format::Csv).unwrap();
        let mut rd = csv::Reader::from_reader(csv.as_bytes());
        let headers = rd.headers().unwrap().clone();
        prop_assert_eq!(&headers[0], "claim");
        let rows: Vec<_> = rd.records().collect::<Result<_, _>>().unwrap();
        prop_assert_eq!(rows.len(), reports.len());
        for (row, r) in rows.iter().zip(&reports) {
            prop_assert_eq!(&row[0], r.claim.name());
            prop_assert_eq!(&row[2], r.status.as_str());
            prop_assert_eq!(row[10].parse::<usize>().unwrap(), r.witnesses.len());
        }
    }

    #[test]
    fn svg_has_one_polygon_per_triangle(n in 1u64..40, kind in 0usize..3, digits in 1u8..8) {
        let spec = [SequenceSpec::fibonacci(), SequenceSpec::lucas(), SequenceSpec::ClassicTheodorus][kind].clone();
        let g = geometry(&spec, n, 64).unwrap();
        let opts = RenderOptions { decimal_digits: digits, label_angles: true, ..RenderOptions::default() };
        let svg = render_svg(&g, &opts).unwrap();
        let doc = roxmltree::Document::parse(&svg).unwrap();
        let root = doc.root_element();
        prop_assert_eq!(root.tag_name().name(), "svg");
        prop_assert_eq!(root.attribute("version"), Some("1.1"));
        let polygons = doc.descendants().filter(|e| e.has_tag_name("polygon")).count();
        prop_assert_eq!(polygons as u64, n);
    }
}

#[test]
fn malformed_json_is_rejected() {
    for bad in ["", "{", "[{}]", r#"[{"claim":"NOPE"}]"#, "null"] {
        assert!(parse_report_json(bad).is_err(), "{bad}");
    }
}

#[test]
fn real_reports_round_trip() {
    let config = VerifyConfig {
        n_max: Some(10),
        ..VerifyConfig::default()
    };
    let reports: Vec<_> = [ClaimId::FloorConj, ClaimId::TenWinding, ClaimId::AreaSumBound]
        .into_iter()
        .map(|c| verify_claim(c, &config))
        .collect();
    let json = export_report(&reports, Format::Json).unwrap();
    assert_eq!(parse_report_json(&json).unwrap(), reports);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    let keys: Vec<&str> = v[0].as_object().unwrap().keys().map(|k| k.as_str()).collect();
    for k in [
        "claim",
        "status",
        "range",
        "max_deviation_lo",
        "max_deviation_hi",
        "witnesses",
        "precision_bits",
        "runtime_s",
    ] {
        assert!(keys.contains(&k), "missing {k}");
    }
    assert!(v[0]["runtime_s"].is_null());
    let _: BTreeMap<String, serde_json::Value> = serde_json::from_value(v[0]["range"].clone()).unwrap();
}

#[test]
fn tempfile_export_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = theodorus::cli::run_with_io(
        [
            "theodorus",
            "verify",
            "--claim",
            "FLOOR_CONJ",
            "--json",
            "--out",
            path.to_str().unwrap(),
        ],
        &mut out,
        &mut err,
    );
    assert_eq!(code, 0, "{}", String::from_utf8_lossy(&err));
    assert!(out.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    let parsed = parse_report_json(&written).unwrap();
    assert_eq!(parsed[0].claim, ClaimId::FloorConj);
    assert_eq!(parsed[0].status, Status::VerifiedWithException);
}
