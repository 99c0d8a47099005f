use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::claim::{ClaimId, ClaimKind};
use crate::exact_seq::IntervalReal;

/// Outcome of one claim, ordered from best to worst.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Verified,
    VerifiedWithException,
    Undecided,
    Refuted,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Verified => "verified",
            Status::VerifiedWithException => "verified-with-exception",
            Status::Undecided => "undecided",
            Status::Refuted => "refuted",
        }
    }

    /// True for the two verified states.
    pub fn is_success(self) -> bool {
        matches!(self, Status::Verified | Status::VerifiedWithException)
    }

    /// Worst of a collection; `Verified` when empty.
    pub fn worst(it: impl IntoIterator<Item = Status>) -> Status {
        it.into_iter().max().unwrap_or(Status::Verified)
    }
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Primary parameter range a claim was evaluated over.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamRange {
    pub param: String,
    pub from: u64,
    pub to: u64,
}

impl ParamRange {
    pub fn new(param: &str, from: u64, to: u64) -> Self {
        ParamRange {
            param: param.to_string(),
            from,
            to,
        }
    }
}

/// A parameter assignment with the values observed there.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub label: String,
    pub params: BTreeMap<String, i64>,
    pub values: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Witness {
    pub fn new(label: &str) -> Self {
        Witness {
            label: label.to_string(),
            params: BTreeMap::new(),
            values: BTreeMap::new(),
            note: None,
        }
    }

    pub fn param(mut self, k: &str, v: i64) -> Self {
        self.params.insert(k.to_string(), v);
        self
    }

    pub fn value(mut self, k: &str, v: impl ToString) -> Self {
        self.values.insert(k.to_string(), v.to_string());
        self
    }

    pub fn interval(self, k: &str, v: &IntervalReal) -> Self {
        self.value(k, fmt_interval(v))
    }

    pub fn note(mut self, n: impl Into<String>) -> Self {
        self.note = Some(n.into());
        self
    }

    /// Compact form used in tables, e.g. `exception(n=8)`.
    pub fn summary(&self) -> String {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        format!("{}({})", self.label, params.join(","))
    }
}

/// Number of significant digits printed for interval values in witnesses.
pub const WITNESS_DIGITS: usize = 20;

pub(crate) fn fmt_interval(v: &IntervalReal) -> String {
    v.to_decimal(WITNESS_DIGITS)
}

/// Result of checking one claim.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClaimReport {
    pub claim: ClaimId,
    pub kind: ClaimKind,
    pub status: Status,
    pub range: ParamRange,
    /// Lower end of an enclosure of the largest deviation observed.
    pub max_deviation_lo: Option<f64>,
    pub max_deviation_hi: Option<f64>,
    pub witnesses: Vec<Witness>,
    pub precision_bits: u32,
    /// Wall-clock seconds; `null` unless timing was requested.
    pub runtime_s: Option<f64>,
    #[serde(default)]
    pub notes: Vec<String>,
}

impl ClaimReport {
    /// Set the deviation bounds from an enclosure of a non-negative quantity.
    pub fn set_max_deviation(&mut self, dev: Option<&IntervalReal>) {
        match dev {
            Some(d) => {
                let (lo, hi) = d.to_f64_bounds();
                self.max_deviation_lo = Some(lo);
                self.max_deviation_hi = Some(hi);
            }
            None => {
                self.max_deviation_lo = None;
                self.max_deviation_hi = None;
            }
        }
    }
}
