use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exact_seq::{
    abs_beta, fib, lucas, phi, pi, sqrt5, BigNat, IntervalReal, PrecisionPolicy, SequenceSpec, SqrtSum,
};

use super::hahn::DEFAULT_TERM_CAP;
use super::sqrt_big;

fn fib_product(n: u64, m: u64) -> BigNat {
    let terms = SequenceSpec::fibonacci().terms(n, n + m).expect("fibonacci terms");
    terms.iter().product()
}

/// `A_{n,m} = sqrt(F_n F_{n+1} ... F_{n+m}) / 2`.
pub fn generalized_area(n: u64, m: u64, precision_bits: u32) -> Result<IntervalReal> {
    if n < 1 || m < 1 {
        return Err(Error::invalid("generalized area needs n >= 1 and m >= 1"));
    }
    Ok(IntervalReal::sqrt_of(&fib_product(n, m), precision_bits).mul_pow2(-1))
}

/// `A_{n+1,m} / A_{n,m}`, formed from the two exact products.
pub fn generalized_area_ratio(n: u64, m: u64, precision_bits: u32) -> Result<IntervalReal> {
    if n < 1 || m < 1 {
        return Err(Error::invalid("generalized area ratio needs n >= 1 and m >= 1"));
    }
    Ok(IntervalReal::sqrt_ratio(
        &fib_product(n + 1, m),
        &fib_product(n, m),
        precision_bits,
    ))
}

/// `phi^((m+1)/2)`.
pub fn generalized_area_limit(m: u64, precision_bits: u32) -> IntervalReal {
    let w = precision_bits + 16;
    phi(w)
        .powi(m as i64 + 1)
        .expect("positive power")
        .sqrt()
        .round_to(precision_bits)
}

/// `T_{n,m} = sum_{i=1}^{F_{n-1}} sqrt(F_n + i^m)` with the default term cap.
pub fn t_sum(n: u64, m: u64, precision_bits: u32) -> Result<IntervalReal> {
    t_sum_capped(n, m, precision_bits, DEFAULT_TERM_CAP)
}

pub fn t_sum_capped(n: u64, m: u64, precision_bits: u32, cap: u64) -> Result<IntervalReal> {
    if n < 2 || m < 1 {
        return Err(Error::invalid("T-sum needs n >= 2 and m >= 1"));
    }
    let count = fib(n - 1);
    let terms = count.to_u64().filter(|&c| c <= cap).ok_or_else(|| Error::CapExceeded {
        terms: count.to_string(),
        cap,
    })?;
    let exp = u32::try_from(m).map_err(|_| Error::invalid("m too large"))?;
    let base = fib(n);
    let w = precision_bits + 24;
    let mut acc = SqrtSum::new(w);
    for i in 1..=terms {
        acc.push(&(&base + BigNat::from(i).pow(exp)));
    }
    Ok(acc.finish(w).round_to(precision_bits))
}

/// `sqrt((L_{m+2} + F_{m+2} sqrt 5) / 2)`.
pub fn t_sum_limit(m: u64, precision_bits: u32) -> IntervalReal {
    let w = precision_bits + 16;
    let l = IntervalReal::from_biguint(&lucas(m + 2), w);
    let f = IntervalReal::from_biguint(&fib(m + 2), w);
    (&l + &(&f * &sqrt5(w))).mul_pow2(-1).sqrt().round_to(precision_bits)
}

/// `beta^n = (L_n - F_n sqrt 5) / 2` at working precision `w`.
fn beta_pow(n: u64, s5: &IntervalReal, w: u32) -> IntervalReal {
    let l = IntervalReal::from_biguint(&lucas(n), w);
    let f = IntervalReal::from_biguint(&fib(n), w);
    (&l - &(&f * s5)).mul_pow2(-1)
}

fn series_bits(n_terms: u64, precision_bits: u32) -> u32 {
    let extra = u32::try_from(n_terms.saturating_mul(7) / 10).unwrap_or(u32::MAX / 2);
    precision_bits.saturating_add(extra).saturating_add(64)
}

/// `sqrt|beta| * sum_{n=0}^{N-1} (-1)^n |beta|^n / (2n+1)`, the arctangent
/// series at `sqrt|beta|`. Converges to `atan(sqrt|beta|)`.
///
/// Since `beta < 0`, `(-1)^n |beta|^n = beta^n = (L_n - F_n sqrt 5) / 2`.
pub fn arctan_beta_series(n_terms: u64, precision_bits: u32) -> Result<IntervalReal> {
    Ok(arctan_beta_partial_sums(n_terms, precision_bits)?
        .pop()
        .expect("n_terms >= 1"))
}

/// All partial sums of [`arctan_beta_series`] for `N = 1 ..= n_terms`.
pub fn arctan_beta_partial_sums(n_terms: u64, precision_bits: u32) -> Result<Vec<IntervalReal>> {
    if n_terms < 1 {
        return Err(Error::invalid("series needs at least one term"));
    }
    // L_n - F_n sqrt 5 cancels about 0.7 n bits
    let w = series_bits(n_terms, precision_bits);
    let s5 = sqrt5(w);
    let root = abs_beta(w).sqrt();
    let lucas_terms = SequenceSpec::lucas().terms(1, n_terms)?;
    let fib_terms = SequenceSpec::fibonacci().terms(1, n_terms)?;
    let mut sum = IntervalReal::zero(w);
    let mut out = Vec::with_capacity(n_terms as usize);
    for n in 0..n_terms {
        // beta^0 = 1, beta^n = (L_n - F_n sqrt 5) / 2
        let t = if n == 0 {
            IntervalReal::one(w)
        } else {
            let l = IntervalReal::from_biguint(&lucas_terms[n as usize - 1], w);
            let f = IntervalReal::from_biguint(&fib_terms[n as usize - 1], w);
            (&l - &(&f * &s5)).mul_pow2(-1)
        };
        sum = &sum + &t.div_int(2 * n + 1);
        out.push((&sum * &root).round_to(precision_bits));
    }
    Ok(out)
}

/// `sqrt|beta| * sum_{n=1}^{N} (-1)^n (L_n - F_n sqrt 5) / (2n+1)`, evaluated
/// literally. Kept for comparison: the factor `1/2` and the `n = 0` term
/// are missing and the sign pattern doubles up, so it converges to
/// `2 (atanh(sqrt|beta|) - sqrt|beta|)`, not to the angle.
pub fn arctan_beta_series_as_displayed(n_terms: u64, precision_bits: u32) -> Result<IntervalReal> {
    if n_terms < 1 {
        return Err(Error::invalid("series needs at least one term"));
    }
    let w = series_bits(n_terms + 1, precision_bits);
    let s5 = sqrt5(w);
    let mut sum = IntervalReal::zero(w);
    for n in 1..=n_terms {
        let t = beta_pow(n, &s5, w).mul_pow2(1).div_int(2 * n + 1);
        sum = if n % 2 == 0 { &sum + &t } else { &sum - &t };
    }
    Ok((&sum * &abs_beta(w).sqrt()).round_to(precision_bits))
}

/// Radial distance between successive windings near index `n`.
///
/// Classic spiral: `sqrt(n + ceil(2 pi sqrt n)) - sqrt(n)`, one winding at
/// radius `sqrt n` taking about `2 pi sqrt n` unit steps. Additive spirals:
/// `sqrt(a_{n+10}) - sqrt(a_n)`.
pub fn winding_gap(spec: &SequenceSpec, n: u64, precision_bits: u32) -> Result<IntervalReal> {
    if n < 1 {
        return Err(Error::invalid("winding gap needs n >= 1"));
    }
    match spec {
        SequenceSpec::ClassicTheodorus => {
            let nn = BigNat::from(n);
            let policy = PrecisionPolicy::new(precision_bits.max(64), crate::exact_seq::DEFAULT_PRECISION_CAP);
            let (steps, _) = policy.refine("ceil(2 pi sqrt n)", |p| {
                let v = (&pi(p) * &sqrt_big(&nn, p)).mul_pow2(1);
                Ok(v.certain_ceil())
            })?;
            let steps = steps.to_biguint().expect("positive");
            let w = precision_bits + 32 + (64 - n.leading_zeros());
            let gap = &sqrt_big(&(&nn + steps), w) - &sqrt_big(&nn, w);
            Ok(gap.round_to(precision_bits))
        }
        SequenceSpec::Additive { .. } => {
            let w = precision_bits + 16;
            let a = spec.term(n)?;
            let b = spec.term(n + 10)?;
            Ok((&sqrt_big(&b, w) - &sqrt_big(&a, w)).round_to(precision_bits))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generalized_examples() {
        assert!(generalized_area_ratio(1, 1, 64)
            .unwrap()
            .to_decimal(6)
            .starts_with("1.41421"));
        let r = generalized_area_ratio(60, 1, 128).unwrap();
        let d = &r - &phi(128);
        assert!(d.abs().to_f64() < 1e-8);
    }

    #[test]
    fn t_sum_examples() {
        assert!(t_sum(3, 1, 64).unwrap().to_decimal(6).starts_with("1.73205"));
        // sqrt 6 + sqrt 7 + sqrt 8 = 7.9070...
        let want = 6f64.sqrt() + 7f64.sqrt() + 8f64.sqrt();
        assert!((t_sum(5, 1, 64).unwrap().to_f64() - want).abs() < 1e-12);
        assert!(t_sum_limit(1, 64).to_decimal(7).starts_with("2.058171"));
    }

    #[test]
    fn series_first_term_and_limit() {
        assert!(arctan_beta_series(1, 64).unwrap().to_decimal(6).starts_with("0.78615"));
        let s = arctan_beta_series(200, 128).unwrap();
        let t = abs_beta(160).sqrt().atan();
        let d = (&s - &t).abs();
        assert!(d.to_f64() < 1e-20, "{s} vs {t}");
        // 2 (atanh(0.78615...) - 0.78615...) = 0.550250...
        let lit = arctan_beta_series_as_displayed(200, 128).unwrap();
        assert!(lit.to_decimal(5).starts_with("0.5502"), "{lit}");
    }

    #[test]
    fn gaps() {
        let g = winding_gap(&SequenceSpec::fibonacci(), 10, 64).unwrap();
        let want = 6765f64.sqrt() - 55f64.sqrt();
        assert!((g.to_f64() - want).abs() < 1e-10);
        let c = winding_gap(&SequenceSpec::ClassicTheodorus, 10_000, 64).unwrap();
        assert!((c.to_f64() - std::f64::consts::PI).abs() < 0.1);
    }
}
