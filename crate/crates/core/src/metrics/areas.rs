use crate::error::{Error, Result};
use crate::exact_seq::{fib, sqrt_phi, IntervalReal, SequenceSpec, SqrtSum};
use crate::spiral_engine::triangle;

use super::bits;

/// Area of one spiral triangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AreaValue {
    pub value: IntervalReal,
    pub n: u64,
    pub spec: SequenceSpec,
}

/// `A_n = sqrt(opposite * adjacent) / 2`.
pub fn triangle_area(spec: &SequenceSpec, n: u64, precision_bits: u32) -> Result<AreaValue> {
    let t = triangle(spec, n)?;
    let prod = &t.opposite_radicand * &t.adjacent_radicand;
    Ok(AreaValue {
        value: IntervalReal::sqrt_of(&prod, precision_bits).mul_pow2(-1),
        n,
        spec: spec.clone(),
    })
}

/// `A_{n+1} / A_n`, which simplifies to `sqrt(a_{n+2} / a_n)`.
pub fn area_ratio(spec: &SequenceSpec, n: u64, precision_bits: u32) -> Result<IntervalReal> {
    let lo = triangle(spec, n)?;
    let hi = triangle(spec, n + 1)?;
    let num = &hi.opposite_radicand * &hi.adjacent_radicand;
    let den = &lo.opposite_radicand * &lo.adjacent_radicand;
    Ok(IntervalReal::sqrt_ratio(&num, &den, precision_bits))
}

/// `A_1 + ... + A_n - (sqrt(phi)/2)(F_{n+2} - 1)` on the Fibonacci spiral.
pub fn area_sum_deviation(n: u64, precision_bits: u32) -> Result<IntervalReal> {
    Ok(area_sum_deviations(n, precision_bits)?.pop().expect("n >= 1"))
}

/// The deviations for `n = 1 ..= n_max`, in order.
pub fn area_sum_deviations(n_max: u64, precision_bits: u32) -> Result<Vec<IntervalReal>> {
    if n_max < 1 {
        return Err(Error::invalid("area sum needs n >= 1"));
    }
    let frac = precision_bits + 16;
    let mut acc = SqrtSum::new(frac);
    let mut out = Vec::with_capacity(n_max as usize);
    let fibs = SequenceSpec::fibonacci().terms(1, n_max + 2)?;
    let w = precision_bits + bits(&fibs[n_max as usize + 1]) + 24;
    let half_root_phi = sqrt_phi(w).mul_pow2(-1);
    for n in 1..=n_max as usize {
        acc.push(&(&fibs[n - 1] * &fibs[n]));
        let sum = acc.finish(w).mul_pow2(-1);
        let f = IntervalReal::from_biguint(&fibs[n + 1], w).add_int(-1);
        out.push((&sum - &(&half_root_phi * &f)).round_to(precision_bits));
    }
    debug_assert_eq!(fibs[n_max as usize + 1], fib(n_max + 2));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_areas() {
        let fib = SequenceSpec::fibonacci();
        assert_eq!(triangle_area(&fib, 1, 64).unwrap().value.to_f64(), 0.5);
        // sqrt(15)/2
        assert!(triangle_area(&fib, 4, 64)
            .unwrap()
            .value
            .to_decimal(7)
            .starts_with("1.936492"));
        let c = triangle_area(&SequenceSpec::ClassicTheodorus, 9, 64).unwrap();
        assert_eq!(c.value.to_f64(), 1.5);
    }

    #[test]
    fn first_deviations() {
        let d = area_sum_deviations(3, 96).unwrap();
        assert!(d[0].to_decimal(8).starts_with("-0.13600982"));
        assert!(d[1].to_decimal(8).starts_with("-0.064912868"));
        let quarter = IntervalReal::from_ratio(1, 4, 96);
        for x in &d {
            assert_eq!(x.abs().le(&quarter), Some(true));
        }
    }
}
