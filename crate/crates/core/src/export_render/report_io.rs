use std::str::FromStr;

use csv::{QuoteStyle, WriterBuilder};

use crate::error::{Error, Result};
use crate::verifier::ClaimReport;

/// Machine-readable output formats.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(Error::UnsupportedFormat(s.to_string())),
        }
    }
}

const CSV_HEADER: [&str; 13] = [
    "claim",
    "kind",
    "status",
    "param",
    "from",
    "to",
    "max_deviation_lo",
    "max_deviation_hi",
    "precision_bits",
    "runtime_s",
    "witness_count",
    "witnesses",
    "notes",
];

fn opt_f64(v: Option<f64>) -> String {
    v.map(|x| format!("{x:e}")).unwrap_or_default()
}

/// Serialize reports. JSON is a pretty-printed array (`[]` when empty);
/// CSV has one row per claim with a compact witness summary.
pub fn export_report(reports: &[ClaimReport], format: Format) -> Result<String> {
    match format {
        Format::Json => serde_json::to_string_pretty(reports).map_err(|e| Error::Parse(e.to_string())),
        Format::Csv => {
            let mut w = WriterBuilder::new()
                .quote_style(QuoteStyle::NonNumeric)
                .from_writer(Vec::new());
            let io = |e: csv::Error| Error::Parse(e.to_string());
            w.write_record(CSV_HEADER).map_err(io)?;
            for r in reports {
                let witnesses: Vec<String> = r.witnesses.iter().map(|w| w.summary()).collect();
                w.write_record([
                    r.claim.name().to_string(),
                    serde_json::to_value(r.kind)
                        .ok()
                        .and_then(|v| v.as_str().map(str::to_string))
                        .unwrap_or_default(),
                    r.status.as_str().to_string(),
                    r.range.param.clone(),
                    r.range.from.to_string(),
                    r.range.to.to_string(),
                    opt_f64(r.max_deviation_lo),
                    opt_f64(r.max_deviation_hi),
                    r.precision_bits.to_string(),
                    r.runtime_s.map(|t| format!("{t:.6}")).unwrap_or_default(),
                    r.witnesses.len().to_string(),
                    witnesses.join("; "),
                    r.notes.join("; "),
                ])
                .map_err(io)?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))
        }
    }
}

/// Parse the JSON produced by [`export_report`].
pub fn parse_report_json(text: &str) -> Result<Vec<ClaimReport>> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verifier::scan_floor_conjecture;

    #[test]
    fn empty_json_is_brackets() {
        assert_eq!(export_report(&[], Format::Json).unwrap(), "[]");
        let csv = export_report(&[], Format::Csv).unwrap();
        assert_eq!(csv.lines().count(), 1);
        assert!(csv.starts_with("\"claim\",\"kind\",\"status\""));
    }

    #[test]
    fn floor_report_csv_and_round_trip() {
        let r = scan_floor_conjecture(20);
        let csv = export_report(std::slice::from_ref(&r), Format::Csv).unwrap();
        let row = csv.lines().nth(1).unwrap();
        assert!(
            row.starts_with("\"FLOOR_CONJ\",\"conjecture-check\",\"verified-with-exception\",\"n\",0,20,"),
            "{row}"
        );
        assert!(row.contains("\"exception(n=8)\""), "{row}");
        let json = export_report(std::slice::from_ref(&r), Format::Json).unwrap();
        assert_eq!(parse_report_json(&json).unwrap(), vec![r]);
    }

    #[test]
    fn formats_parse() {
        assert_eq!("JSON".parse::<Format>().unwrap(), Format::Json);
        assert_eq!("xml".parse::<Format>(), Err(Error::UnsupportedFormat("xml".into())));
        assert!(parse_report_json("{").is_err());
    }
}
