use crate::error::{Error, Result};
use crate::exact_seq::{c_perimeter, sqrt5, IntervalReal, SequenceSpec, SqrtSum};

use super::{bits, sqrt_big};

/// `S_n = sqrt(F_1) + ... + sqrt(F_n)`, the outer legs of the first `n`
/// triangles.
pub fn external_perimeter(n: u64, precision_bits: u32) -> Result<IntervalReal> {
    if n < 1 {
        return Err(Error::invalid("external perimeter needs n >= 1"));
    }
    let mut acc = SqrtSum::new(precision_bits + 16);
    for f in SequenceSpec::fibonacci().terms(1, n)? {
        acc.push(&f);
    }
    Ok(acc.finish(precision_bits + 16).round_to(precision_bits))
}

/// `S_n - C (sqrt(F_n) - 5^(-1/4))` with `C = phi^2 (1 + phi^(-1/2))`.
pub fn perimeter_deviation(n: u64, precision_bits: u32) -> Result<IntervalReal> {
    Ok(perimeter_deviations(n, precision_bits)?.pop().expect("n >= 1"))
}

/// Perimeter deviations for `n = 1 ..= n_max`.
pub fn perimeter_deviations(n_max: u64, precision_bits: u32) -> Result<Vec<IntervalReal>> {
    if n_max < 1 {
        return Err(Error::invalid("perimeter deviation needs n >= 1"));
    }
    let fibs = SequenceSpec::fibonacci().terms(1, n_max)?;
    let w = precision_bits + bits(fibs.last().expect("non-empty")) / 2 + 24;
    let c = c_perimeter(w);
    let fourth_root_5_inv = sqrt5(w).sqrt().recip().expect("positive");
    let mut acc = SqrtSum::new(w);
    let mut out = Vec::with_capacity(fibs.len());
    for f in &fibs {
        acc.push(f);
        let inner = &sqrt_big(f, w) - &fourth_root_5_inv;
        out.push((&acc.finish(w) - &(&c * &inner)).round_to(precision_bits));
    }
    Ok(out)
}

/// `P_n = sqrt(F_n) + sqrt(F_{n+1}) + sqrt(F_{n+2})`.
pub fn triangle_perimeter(n: u64, precision_bits: u32) -> Result<IntervalReal> {
    if n < 1 {
        return Err(Error::invalid("triangle perimeter needs n >= 1"));
    }
    let w = precision_bits + 8;
    let t = SequenceSpec::fibonacci().terms(n, n + 2)?;
    let s = &(&sqrt_big(&t[0], w) + &sqrt_big(&t[1], w)) + &sqrt_big(&t[2], w);
    Ok(s.round_to(precision_bits))
}

/// `P_{n+1} / P_n`.
pub fn perimeter_ratio(n: u64, precision_bits: u32) -> Result<IntervalReal> {
    let w = precision_bits + 8;
    let a = triangle_perimeter(n + 1, w)?;
    let b = triangle_perimeter(n, w)?;
    Ok(a.div(&b).expect("positive perimeter").round_to(precision_bits))
}

/// `sqrt(F_{n+4}) / (sqrt(F_{n+2}) + sqrt(F_n))`.
pub fn spine_ratio(n: u64, precision_bits: u32) -> Result<IntervalReal> {
    let w = precision_bits + 8;
    let t = SequenceSpec::fibonacci().terms(n, n + 4)?;
    let den = &sqrt_big(&t[2], w) + &sqrt_big(&t[0], w);
    let r = sqrt_big(&t[4], w)
        .div(&den)
        .ok_or_else(|| Error::invalid("zero denominator"))?;
    Ok(r.round_to(precision_bits))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_perimeters() {
        assert_eq!(external_perimeter(1, 64).unwrap().to_f64(), 1.0);
        // 1 + 1 + sqrt 2 + sqrt 3
        assert!(external_perimeter(4, 64).unwrap().to_decimal(7).starts_with("5.146264"));
        assert!(triangle_perimeter(1, 64).unwrap().to_decimal(7).starts_with("3.41421"));
        assert!(triangle_perimeter(4, 64).unwrap().to_decimal(7).starts_with("6.79654"));
    }

    #[test]
    fn deviation_within_one() {
        let one = IntervalReal::one(96);
        for d in perimeter_deviations(60, 96).unwrap().iter().skip(1) {
            assert_eq!(d.abs().le(&one), Some(true));
        }
    }

    #[test]
    fn spine_ratio_at_zero() {
        // sqrt(F_4) / (sqrt(F_2) + sqrt(F_0)) = sqrt(3)
        let r = spine_ratio(0, 64).unwrap();
        assert!(r.to_decimal(6).starts_with("1.73205"));
    }
}
