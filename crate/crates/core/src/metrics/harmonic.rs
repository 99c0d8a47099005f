use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::exact_seq::{IntervalReal, PrecisionPolicy};

/// Rational exponent `p` in `H_{m,p}`.
pub type Exponent = Ratio<i64>;

/// `x^q` for positive `x` and rational `q`, as `(x^numer)^(1/denom)`.
pub fn rational_power(x: &IntervalReal, q: Exponent) -> Result<IntervalReal> {
    let den = u32::try_from(*q.denom()).map_err(|_| Error::invalid("exponent denominator too large"))?;
    let p = x
        .powi(*q.numer())
        .ok_or_else(|| Error::invalid("negative power of an interval containing zero"))?;
    Ok(p.nth_root(den))
}

/// `k^(-p)`.
pub fn harmonic_term(k: u64, p: Exponent, precision_bits: u32) -> Result<IntervalReal> {
    rational_power(&IntervalReal::from_int(k, precision_bits), -p)
}

/// `H_{m,p} = sum_{k=1}^m k^(-p)`.
pub fn harmonic_number(m: u64, p: Exponent, precision_bits: u32) -> Result<IntervalReal> {
    if m < 1 {
        return Err(Error::invalid("harmonic number needs m >= 1"));
    }
    let w = precision_bits + 16 + (64 - m.leading_zeros());
    let mut sum = IntervalReal::zero(w);
    for k in 1..=m {
        sum = &sum + &harmonic_term(k, p, w)?;
    }
    Ok(sum.round_to(precision_bits))
}

/// `(1 + (m^(1-p) - 1)/(1-p), 1 + ((m+1)^(1-p) - 1)/(1-p))`.
pub fn harmonic_bounds(m: u64, p: Exponent, precision_bits: u32) -> Result<(IntervalReal, IntervalReal)> {
    let q = Exponent::from_integer(1) - p;
    if q == Exponent::from_integer(0) {
        return Err(Error::invalid("harmonic bounds are undefined for p = 1"));
    }
    let w = precision_bits + 16;
    let qv = IntervalReal::from_ratio(*q.numer(), *q.denom(), w);
    let bound = |x: u64| -> Result<IntervalReal> {
        let t = rational_power(&IntervalReal::from_int(x, w), q)?.add_int(-1);
        Ok(t.div(&qv).expect("q != 0").add_int(1).round_to(precision_bits))
    };
    Ok((bound(m)?, bound(m + 1)?))
}

/// Whether `lower < H_{m,p} < upper` holds strictly.
///
/// At `m = 1` the lower bound equals `H_{1,p} = 1` exactly, so the strict
/// inequality fails; that case is answered without intervals.
pub fn harmonic_bounds_check(m: u64, p: Exponent) -> Result<bool> {
    if p == Exponent::from_integer(1) {
        return Err(Error::invalid("harmonic bounds are undefined for p = 1"));
    }
    if m == 1 {
        return Ok(false);
    }
    let policy = PrecisionPolicy::default();
    let (ok, _) = policy.refine(&format!("harmonic sandwich m={m} p={p}"), |bits| {
        let h = harmonic_number(m, p, bits)?;
        let (lo, hi) = harmonic_bounds(m, p, bits)?;
        Ok(match (lo.lt(&h), h.lt(&hi)) {
            (Some(a), Some(b)) => Some(a && b),
            (Some(false), _) | (_, Some(false)) => Some(false),
            _ => None,
        })
    })?;
    Ok(ok)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn half() -> Exponent {
        Exponent::new(-1, 2)
    }

    #[test]
    fn sums() {
        assert!(harmonic_number(3, half(), 64)
            .unwrap()
            .to_decimal(7)
            .starts_with("4.146264"));
        assert_eq!(harmonic_number(1, Exponent::from_integer(2), 64).unwrap().to_f64(), 1.0);
        // H_{4,1} = 25/12
        let h = harmonic_number(4, Exponent::from_integer(1), 64).unwrap();
        assert!(h.overlaps(&IntervalReal::from_ratio(25, 12, 64)));
    }

    #[test]
    fn sandwich() {
        assert!(harmonic_bounds_check(10, half()).unwrap());
        assert!(!harmonic_bounds_check(1, half()).unwrap());
        // for p > 0 the sandwich is reversed
        assert!(!harmonic_bounds_check(50, Exponent::from_integer(2)).unwrap());
        assert!(harmonic_bounds_check(10, Exponent::from_integer(1)).is_err());
    }
}
