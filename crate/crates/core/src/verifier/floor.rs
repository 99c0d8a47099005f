//! Rigorous scan of `floor(sqrt F_{n+4}) = floor(sqrt F_{n+2} + sqrt F_n)`.

use num_bigint::BigInt;

use super::claim::ClaimId;
use super::report::{ClaimReport, ParamRange, Status, Witness};
use crate::error::{Error, Result};
use crate::exact_seq::{isqrt, BigNat, IntervalReal, PrecisionPolicy, SequenceSpec};

/// The one index the statement excludes.
pub const FLOOR_EXCEPTION: u64 = 8;

/// `sqrt(a) + sqrt(b) >= c`, decided with integers only.
///
/// Squaring gives `a + b + 2 sqrt(ab) >= c^2`; when `c^2 - a - b` is
/// positive this is `4ab >= (c^2 - a - b)^2`.
pub fn sqrt_sum_at_least(a: &BigNat, b: &BigNat, c: &BigNat) -> bool {
    let lhs = BigInt::from(c * c) - BigInt::from(a + b);
    if lhs.sign() != num_bigint::Sign::Plus {
        return true;
    }
    BigInt::from(a * b) * 4u32 >= &lhs * &lhs
}

/// `floor(sqrt a + sqrt b)` by integer arithmetic alone. The answer is
/// `isqrt(a) + isqrt(b)` or one more.
pub fn floor_sqrt_sum_exact(a: &BigNat, b: &BigNat) -> BigNat {
    let k = isqrt(a) + isqrt(b);
    let k1 = &k + 1u32;
    if sqrt_sum_at_least(a, b, &k1) {
        k1
    } else {
        k
    }
}

/// `floor(sqrt a + sqrt b)` from an interval enclosure, refined until the
/// floor is certain, then confirmed by the integer test.
/// Returns the floor and the precision it took.
pub fn floor_sqrt_sum(a: &BigNat, b: &BigNat, policy: &PrecisionPolicy) -> Result<(BigNat, u32)> {
    let (k, bits) = policy.refine("floor(sqrt a + sqrt b)", |p| {
        let s = &IntervalReal::sqrt_of(a, p) + &IntervalReal::sqrt_of(b, p);
        Ok(s.certain_floor())
    })?;
    let k = k
        .to_biguint()
        .ok_or_else(|| Error::invalid("negative floor of a sum of roots"))?;
    let confirmed = sqrt_sum_at_least(a, b, &k) && !sqrt_sum_at_least(a, b, &(&k + 1u32));
    if !confirmed {
        return Err(Error::invalid(format!("interval floor {k} failed the integer check")));
    }
    Ok((k, bits))
}

/// One scanned index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FloorEntry {
    pub n: u64,
    pub lhs: BigNat,
    /// `None` when the right-hand floor was undecided at the cap.
    pub rhs: Option<BigNat>,
    pub bits: u32,
}

impl FloorEntry {
    pub fn holds(&self) -> Option<bool> {
        self.rhs.as_ref().map(|r| *r == self.lhs)
    }
}

/// Evaluate both sides for `n = 0 ..= n_max` (with `F_0 = 0`).
pub fn scan_floor_entries(n_max: u64, policy: &PrecisionPolicy) -> Result<Vec<FloorEntry>> {
    let fibs = SequenceSpec::fibonacci().terms(0, n_max + 4)?;
    let mut out = Vec::with_capacity(n_max as usize + 1);
    for n in 0..=n_max as usize {
        let lhs = isqrt(&fibs[n + 4]);
        let (rhs, bits) = match floor_sqrt_sum(&fibs[n + 2], &fibs[n], policy) {
            Ok((k, b)) => (Some(k), b),
            Err(Error::PrecisionExhausted { cap_bits, .. }) => (None, cap_bits),
            Err(e) => return Err(e),
        };
        out.push(FloorEntry {
            n: n as u64,
            lhs,
            rhs,
            bits,
        });
    }
    Ok(out)
}

/// Scan `n = 0 ..= n_max` with the default precision policy.
pub fn scan_floor_conjecture(n_max: u64) -> ClaimReport {
    scan_floor_with(0, n_max, &PrecisionPolicy::default())
}

pub(crate) fn scan_floor_with(from: u64, n_max: u64, policy: &PrecisionPolicy) -> ClaimReport {
    let mut report = ClaimReport {
        claim: ClaimId::FloorConj,
        kind: ClaimId::FloorConj.kind(),
        status: Status::Verified,
        range: ParamRange::new("n", from, n_max),
        max_deviation_lo: None,
        max_deviation_hi: None,
        witnesses: Vec::new(),
        precision_bits: policy.start_bits,
        runtime_s: None,
        notes: vec!["index 0 uses F_0 = 0".to_string()],
    };
    let entries = match scan_floor_entries(n_max, policy) {
        Ok(e) => e,
        Err(e) => {
            report.status = Status::Undecided;
            report.notes.push(format!("scan failed: {e}"));
            return report;
        }
    };
    let fibs = SequenceSpec::fibonacci().terms(0, n_max + 4).unwrap_or_default();
    let mut statuses = Vec::new();
    for e in entries.iter().filter(|e| e.n >= from) {
        report.precision_bits = report.precision_bits.max(e.bits);
        let i = e.n as usize;
        let w = |label: &str| {
            Witness::new(label)
                .param("n", e.n as i64)
                .value("F_n", &fibs[i])
                .value("F_n+2", &fibs[i + 2])
                .value("F_n+4", &fibs[i + 4])
                .value("floor_sqrt_F_n+4", &e.lhs)
        };
        match (e.holds(), &e.rhs) {
            (Some(true), _) => {}
            (Some(false), Some(r)) => {
                let is_exception = e.n == FLOOR_EXCEPTION;
                statuses.push(if is_exception {
                    Status::VerifiedWithException
                } else {
                    Status::Refuted
                });
                let label = if is_exception { "exception" } else { "counterexample" };
                report.witnesses.push(w(label).value("floor_sqrt_sum", r));
            }
            _ => {
                statuses.push(Status::Undecided);
                report.witnesses.push(w("undecided").note("precision cap reached"));
            }
        }
    }
    report.status = Status::worst(statuses);
    report
}
