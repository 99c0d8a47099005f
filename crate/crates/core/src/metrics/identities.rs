use crate::error::{Error, Result};
use crate::exact_seq::{beta, phi, sqrt5, IntervalReal, PrecisionPolicy};

/// `T(n) = n - 2 floor(n / 2)`, the parity of `n`.
pub fn t_parity(n: u64) -> i64 {
    (n % 2) as i64
}

fn phi_pow(f: &IntervalReal, e: i64) -> IntervalReal {
    f.powi(e).expect("phi > 0")
}

/// Left- and right-hand sides of the three golden-ratio summation identities:
///
/// 1. `sum_{k=1}^n (-phi)^((-1)^k - k) / sqrt(5 phi)`
///    `= ((2 phi)^T(n) phi^(-n) - 1) / sqrt(5 phi^5)`
/// 2. `sum_{k=1}^n phi^(((-1)^(k+1) - 2(k+1)) / 2) / sqrt 5`
///    `= (2 - phi^(-n+T(n)) + phi - phi^(-n+2-T(n))) / sqrt(5 phi^5)`
/// 3. `sum_{k=1}^n phi^(k + 1/2) / sqrt 5 = sqrt(phi)(F_{n+2} - 1) + (beta^n - 1) / sqrt(5 phi^3)`
pub fn prop3_sides(part: u8, n: u64, precision_bits: u32) -> Result<(IntervalReal, IntervalReal)> {
    Ok(prop3_sides_upto(part, n, precision_bits)?.pop().expect("n >= 1"))
}

/// [`prop3_sides`] for every `n = 1 ..= n_max` in one pass.
pub fn prop3_sides_upto(part: u8, n_max: u64, precision_bits: u32) -> Result<Vec<(IntervalReal, IntervalReal)>> {
    if n_max < 1 {
        return Err(Error::invalid("identity needs n >= 1"));
    }
    if !(1..=3).contains(&part) {
        return Err(Error::invalid(format!("identity part must be 1, 2 or 3, got {part}")));
    }
    let extra = u32::try_from(n_max * 7 / 10).unwrap_or(u32::MAX / 2);
    // running products lose about log2(n) bits
    let w = precision_bits + extra + 48 + (64 - n_max.leading_zeros());
    let f = phi(w);
    let inv_f = f.recip().expect("phi > 0");
    let s5 = sqrt5(w);
    let five = IntervalReal::from_int(5, w);
    let root5 = |e: i64| (&five * &phi_pow(&f, e)).sqrt();
    let d5 = root5(5);
    let root_phi = f.sqrt();
    let inv_root = root_phi.recip().expect("phi > 0");
    let inv_root3 = &inv_root * &inv_f;
    let d3 = root5(3);
    let b = beta(w);
    let fibs = crate::exact_seq::SequenceSpec::fibonacci().terms(3, n_max + 2)?;

    let mut out = Vec::with_capacity(n_max as usize);
    let mut sum = IntervalReal::zero(w);
    // phi^(-k), phi^k and beta^k for the current k
    let mut inv_pow = IntervalReal::one(w);
    let mut pow = IntervalReal::one(w);
    let mut beta_pow = IntervalReal::one(w);
    for k in 1..=n_max {
        inv_pow = &inv_pow * &inv_f;
        let t = t_parity(k);
        let (lhs, rhs) = match part {
            1 => {
                // exponent 1 - k for even k, -1 - k for odd k
                let term = if k % 2 == 0 { &inv_pow * &f } else { &inv_pow * &inv_f };
                let e = if k % 2 == 0 { 1 - k as i64 } else { -1 - k as i64 };
                sum = if e % 2 == 0 { &sum + &term } else { &sum - &term };
                let lhs = sum.div(&root5(1)).expect("positive");
                let two_phi_t = if t == 1 { f.mul_pow2(1) } else { IntervalReal::one(w) };
                let num = (&two_phi_t * &inv_pow).add_int(-1);
                (lhs, num.div(&d5).expect("positive"))
            }
            2 => {
                // phi^((-1-2k)/2) for odd k, phi^((-3-2k)/2) for even k
                let term = if k % 2 == 1 {
                    &inv_pow * &inv_root
                } else {
                    &inv_pow * &inv_root3
                };
                sum = &sum + &term;
                let lhs = sum.div(&s5).expect("positive");
                let (a, c) = if t == 1 {
                    (&inv_pow * &f, &inv_pow * &f)
                } else {
                    (inv_pow.clone(), &inv_pow * &f.sqr())
                };
                let num = &(&f.add_int(2) - &a) - &c;
                (lhs, num.div(&d5).expect("positive"))
            }
            _ => {
                pow = &pow * &f;
                beta_pow = &beta_pow * &b;
                sum = &sum + &(&pow * &root_phi);
                let lhs = sum.div(&s5).expect("positive");
                let fib_part = &root_phi * &IntervalReal::from_biguint(&fibs[k as usize - 1], w).add_int(-1);
                let beta_part = beta_pow.add_int(-1).div(&d3).expect("positive");
                (lhs, &fib_part + &beta_part)
            }
        };
        out.push((lhs.round_to(w), rhs.round_to(w)));
    }
    Ok(out)
}

/// `lhs - rhs` of identity `part`; contains zero when the identity holds.
pub fn prop3_identity(part: u8, n: u64, precision_bits: u32) -> Result<IntervalReal> {
    let (l, r) = prop3_sides(part, n, precision_bits)?;
    Ok((&l - &r).round_to(precision_bits))
}

/// The two inequalities `-1/sqrt(5 phi^5) <= S_1(n)` and
/// `S_2(n) <= (2 + phi) / sqrt(5 phi^5)`, where `S_1`, `S_2` are the
/// left-hand sums of identities 1 and 2.
pub fn corollary4_check(n: u64, precision_bits: u32) -> Result<(bool, bool)> {
    Ok(corollary4_upto(n, precision_bits)?.pop().expect("n >= 1"))
}

/// [`corollary4_check`] for every `n = 1 ..= n_max`, doubling precision
/// until all comparisons are decided.
pub fn corollary4_upto(n_max: u64, precision_bits: u32) -> Result<Vec<(bool, bool)>> {
    let policy = PrecisionPolicy::new(precision_bits, crate::exact_seq::DEFAULT_PRECISION_CAP);
    let (res, _) = policy.refine(&format!("corollary inequalities n<={n_max}"), |p| {
        let s1 = prop3_sides_upto(1, n_max, p)?;
        let s2 = prop3_sides_upto(2, n_max, p)?;
        let w = s1[0].0.precision_bits();
        let f = phi(w);
        let d = (&sqrt5(w) * &f.powi(5).expect("positive")).sqrt();
        let lower = IntervalReal::from_int(-1, w).div(&d).expect("positive");
        let upper = f.add_int(2).div(&d).expect("positive");
        let mut out = Vec::with_capacity(s1.len());
        for ((a, _), (b, _)) in s1.iter().zip(&s2) {
            match (lower.le(a), b.le(&upper)) {
                (Some(x), Some(y)) => out.push((x, y)),
                _ => return Ok(None),
            }
        }
        Ok(Some(out))
    })?;
    Ok(res)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identities_hold_small_n() {
        for part in 1..=3 {
            for n in 1..=30 {
                let r = prop3_identity(part, n, 128).unwrap();
                assert!(r.contains_zero(), "part {part} n {n}: {r}");
                assert!(r.radius_f64() < 1e-30, "part {part} n {n}: {r}");
            }
        }
        assert!(prop3_identity(4, 1, 64).is_err());
    }

    #[test]
    fn corollary_small_n() {
        for n in [1, 2, 3, 10, 100] {
            assert_eq!(corollary4_check(n, 128).unwrap(), (true, true));
        }
    }
}
