#![no_main]

use libfuzzer_sys::fuzz_target;
use theodorus::export_render::{export_report, parse_report_json, Format};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(reports) = parse_report_json(s) {
        let json = export_report(&reports, Format::Json).expect("parsed reports serialize");
        let again = parse_report_json(&json).expect("exported JSON re-parses");
        // NaN never survives a parse, so equality is well defined here.
        assert_eq!(again, reports);
        let _ = export_report(&reports, Format::Csv);
    }
});
