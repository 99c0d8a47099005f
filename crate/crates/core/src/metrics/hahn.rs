use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exact_seq::{fib, sqrt5, BigNat, IntervalReal, SqrtSum};

/// Default limit on the number of square roots in one Hahn area or T-sum.
pub const DEFAULT_TERM_CAP: u64 = 2_000_000;

/// Total area of the `F_n` classic triangles starting at the `F_{n+1}`-th.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HahnArea {
    pub n: u64,
    pub value: IntervalReal,
    pub term_count: BigNat,
}

/// `Hn(n) = sum_{i=0}^{F_n - 1} sqrt(F_{n+1} + i) / 2` with the default term cap.
pub fn hahn_area(n: u64, precision_bits: u32) -> Result<HahnArea> {
    hahn_area_capped(n, precision_bits, DEFAULT_TERM_CAP)
}

pub fn hahn_area_capped(n: u64, precision_bits: u32, cap: u64) -> Result<HahnArea> {
    if n < 1 {
        return Err(Error::invalid("Hahn area needs n >= 1"));
    }
    let count = fib(n);
    let terms = count.to_u64().filter(|&c| c <= cap).ok_or_else(|| Error::CapExceeded {
        terms: count.to_string(),
        cap,
    })?;
    let start = fib(n + 1);
    let w = precision_bits + 24;
    let mut acc = SqrtSum::new(w);
    let mut j = start;
    for _ in 0..terms {
        acc.push(&j);
        j += 1u32;
    }
    Ok(HahnArea {
        n,
        value: acc.finish(w).mul_pow2(-1).round_to(precision_bits),
        term_count: count,
    })
}

/// Integral bounds `(L, U)` with `L < Hn(n) < U`:
/// `L = ((F_{n+2} - 1)^{3/2} - (F_{n+1} - 1)^{3/2}) / 3`,
/// `U = (F_{n+2}^{3/2} - F_{n+1}^{3/2}) / 3`.
pub fn hahn_bounds(n: u64, precision_bits: u32) -> Result<(IntervalReal, IntervalReal)> {
    if n < 1 {
        return Err(Error::invalid("Hahn bounds need n >= 1"));
    }
    let a = fib(n + 1);
    let b = fib(n + 2);
    let w = precision_bits + 16;
    let pow32 = |x: &BigNat| {
        let v = IntervalReal::from_biguint(x, w);
        &v * &IntervalReal::sqrt_of(x, w)
    };
    let one = BigNat::from(1u32);
    let lower = (&pow32(&(&b - &one)) - &pow32(&(&a - &one))).div_int(3);
    let upper = (&pow32(&b) - &pow32(&a)).div_int(3);
    Ok((lower.round_to(precision_bits), upper.round_to(precision_bits)))
}

/// `phi sqrt(phi) = sqrt(2 + sqrt 5)`.
pub fn hahn_ratio_limit(precision_bits: u32) -> IntervalReal {
    let w = precision_bits + 8;
    sqrt5(w).add_int(2).sqrt().round_to(precision_bits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_hahn_areas() {
        let h1 = hahn_area(1, 64).unwrap();
        assert_eq!(h1.value.to_f64(), 0.5);
        assert_eq!(h1.term_count, BigNat::from(1u32));
        assert!(hahn_area(2, 64).unwrap().value.to_decimal(6).starts_with("0.70710"));
        // (sqrt 8 + ... + sqrt 12) / 2
        assert!(hahn_area(5, 64).unwrap().value.to_decimal(7).starts_with("7.885716"));
        assert_eq!(hahn_area(5, 64).unwrap().term_count, BigNat::from(5u32));
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            hahn_area_capped(10, 64, 54),
            Err(Error::CapExceeded { cap: 54, .. })
        ));
        assert!(hahn_area_capped(10, 64, 55).is_ok());
    }

    #[test]
    fn sandwich_small_n() {
        for n in 2..=12 {
            let h = hahn_area(n, 96).unwrap().value;
            let (lo, hi) = hahn_bounds(n, 96).unwrap();
            assert_eq!(lo.lt(&h), Some(true), "n={n}");
            assert_eq!(h.lt(&hi), Some(true), "n={n}");
        }
    }

    #[test]
    fn limit_value() {
        assert!(hahn_ratio_limit(64).to_decimal(7).starts_with("2.058171"));
    }
}
