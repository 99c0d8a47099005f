//! Claim registry and verification reports.
//!
//! Each [`ClaimId`] maps to an executable check over a parameter range.
//! Checks are decided with interval comparisons; a check that cannot be
//! decided at the current precision is retried at doubled precision up to
//! the configured cap and reported `undecided` only after that.
//!
//! Limit statements are never tested as literal equalities. For a limit
//! claim the deviation at the end of the range must lie within the claim's
//! [`Tolerance`] profile and the deviations over the last ten points must be
//! non-increasing.

mod checks;
mod claim;
mod claims;
mod floor;
mod report;
mod tolerance;

use std::time::Instant;

use rayon::prelude::*;

pub use claim::{ClaimId, ClaimKind};
pub use floor::{
    floor_sqrt_sum, floor_sqrt_sum_exact, scan_floor_conjecture, scan_floor_entries, sqrt_sum_at_least, FloorEntry,
    FLOOR_EXCEPTION,
};
pub use report::{ClaimReport, ParamRange, Status, Witness, WITNESS_DIGITS};
pub use tolerance::Tolerance;

use crate::error::{Error, Result};
use crate::exact_seq::{PrecisionPolicy, DEFAULT_PRECISION_CAP};
use crate::metrics::DEFAULT_TERM_CAP;

/// Settings shared by all claims in a run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Starting precision; doubled on undecided comparisons.
    pub precision_bits: u32,
    /// Precision cap for adaptive refinement.
    pub cap_bits: u32,
    /// Upper limit applied to every claim's default range end.
    pub n_max: Option<u64>,
    /// Term cap for Hahn areas and T-sums.
    pub term_cap: u64,
    /// Fill `runtime_s`. Off by default so reports are reproducible.
    pub record_timing: bool,
    /// Claims run by [`verify_all`].
    pub claims: Vec<ClaimId>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            precision_bits: 128,
            cap_bits: DEFAULT_PRECISION_CAP,
            n_max: None,
            term_cap: DEFAULT_TERM_CAP,
            record_timing: false,
            claims: ClaimId::ALL.to_vec(),
        }
    }
}

impl VerifyConfig {
    pub fn policy(&self) -> PrecisionPolicy {
        PrecisionPolicy::new(self.precision_bits, self.cap_bits)
    }
}

/// Per-call overrides of a claim's defaults.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ClaimParams {
    /// Explicit `(from, to)` range of the claim's primary parameter.
    pub range: Option<(u64, u64)>,
    /// Replaces the claim's default tolerance profile.
    pub tolerance: Option<Tolerance>,
}

/// Verify one claim with its default range (capped by `config.n_max`).
pub fn verify_claim(claim: ClaimId, config: &VerifyConfig) -> ClaimReport {
    verify_claim_with(claim, config, &ClaimParams::default()).expect("default ranges are valid")
}

/// Verify one claim with explicit overrides.
pub fn verify_claim_with(claim: ClaimId, config: &VerifyConfig, params: &ClaimParams) -> Result<ClaimReport> {
    let defaults = claims::defaults(claim);
    let (from, to) = match params.range {
        Some((a, b)) => {
            if a > b {
                return Err(Error::invalid(format!("empty range {a}..={b}")));
            }
            if a < defaults.min_from {
                return Err(Error::invalid(format!(
                    "{claim} needs {} >= {}",
                    defaults.param, defaults.min_from
                )));
            }
            (a, b)
        }
        None => {
            let to = match config.n_max {
                Some(cap) => defaults.to.min(cap).max(defaults.min_to),
                None => defaults.to,
            };
            (defaults.from.min(to), to)
        }
    };
    let ctx = claims::Ctx {
        from,
        to,
        tolerance: params.tolerance,
        term_cap: config.term_cap,
        policy: config.policy(),
    };
    let start = Instant::now();
    let mut report = claims::run(claim, &ctx, &defaults);
    if config.record_timing {
        report.runtime_s = Some(start.elapsed().as_secs_f64());
    }
    Ok(report)
}

/// Verify every claim in `config.claims`, in parallel, returned in
/// `ClaimId` order.
pub fn verify_all(config: &VerifyConfig) -> Vec<ClaimReport> {
    let mut ids = config.claims.clone();
    ids.sort();
    ids.dedup();
    ids.par_iter().map(|&c| verify_claim(c, config)).collect()
}

/// Worst status across reports (`Verified` for an empty list).
pub fn aggregate_status(reports: &[ClaimReport]) -> Status {
    Status::worst(reports.iter().map(|r| r.status))
}
