//! Precision-doubling refinement for predicates over intervals.

use crate::error::{Error, Result};

/// Default cap on working precision when refining an undecided predicate.
pub const DEFAULT_PRECISION_CAP: u32 = 4096;

/// Start precision and cap for adaptive refinement.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrecisionPolicy {
    pub start_bits: u32,
    pub cap_bits: u32,
}

impl Default for PrecisionPolicy {
    fn default() -> Self {
        PrecisionPolicy {
            start_bits: 128,
            cap_bits: DEFAULT_PRECISION_CAP,
        }
    }
}

impl PrecisionPolicy {
    pub fn new(start_bits: u32, cap_bits: u32) -> Self {
        PrecisionPolicy {
            start_bits: start_bits.max(2),
            cap_bits: cap_bits.max(start_bits),
        }
    }

    /// Precisions tried in order: `start, 2 start, 4 start, ..., cap`.
    pub fn schedule(&self) -> impl Iterator<Item = u32> {
        let cap = self.cap_bits;
        std::iter::successors(Some(self.start_bits), move |&p| {
            (p < cap).then(|| p.saturating_mul(2).min(cap))
        })
    }

    /// Evaluate `f` at increasing precision until it returns `Some`.
    /// Returns the value and the precision that decided it.
    pub fn refine<T>(&self, what: &str, mut f: impl FnMut(u32) -> Result<Option<T>>) -> Result<(T, u32)> {
        for p in self.schedule() {
            if let Some(v) = f(p)? {
                return Ok((v, p));
            }
        }
        Err(Error::PrecisionExhausted {
            what: what.to_string(),
            cap_bits: self.cap_bits,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn schedule_doubles_up_to_cap() {
        let p = PrecisionPolicy::new(128, 1000);
        assert_eq!(p.schedule().collect::<Vec<_>>(), vec![128, 256, 512, 1000]);
    }

    #[test]
    fn refine_reports_exhaustion() {
        let p = PrecisionPolicy::new(64, 256);
        let r: Result<(bool, u32)> = p.refine("never", |_| Ok(None));
        assert!(matches!(r, Err(Error::PrecisionExhausted { cap_bits: 256, .. })));
        let (v, bits) = p.refine("at 256", |b| Ok((b >= 256).then_some(7))).unwrap();
        assert_eq!((v, bits), (7, 256));
    }
}
