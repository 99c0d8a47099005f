//! Transcendental functions over [`IntervalReal`]: `pi`, `atan`, `asin`.
//!
//! Series are evaluated in interval arithmetic and closed with an explicit
//! remainder enclosure, so results are certified, not just accurate.

use num_bigint::BigInt;

use super::dyadic::{Dyadic, Rounding};
use super::interval::IntervalReal;

/// Halving steps applied before the arctangent series.
const ATAN_REDUCTIONS: i64 = 8;

/// Alternating arctangent series for `0 <= x <= 1/2`, with remainder.
fn atan_series(x: &IntervalReal, w: u32) -> IntervalReal {
    let x2 = x.sqr();
    let mut pow = x.clone();
    let mut sum = IntervalReal::zero(w);
    let stop = Dyadic::new(BigInt::from(1), -(w as i64) - 4);
    let mut k: u64 = 0;
    loop {
        let term = pow.div_int(2 * k + 1);
        if k.is_multiple_of(2) {
            sum = &sum + &term;
        } else {
            sum = &sum - &term;
        }
        pow = &pow * &x2;
        k += 1;
        let bound = pow.mag();
        if bound < stop {
            // |remainder| <= x^(2k+1)/(2k+1) <= x^(2k+1)
            let r = IntervalReal::from_bounds(bound.neg(), bound, w).expect("symmetric");
            return &sum + &r;
        }
    }
}

/// Arctangent of `1/q` for an integer `q >= 2` (Machin terms).
fn atan_inv(q: u32, w: u32) -> IntervalReal {
    atan_series(&IntervalReal::from_ratio(1, q, w), w)
}

/// Interval containing pi, `prec` bits.
pub fn pi(prec: u32) -> IntervalReal {
    let w = prec + 16;
    let a = atan_inv(5, w).mul_int(16);
    let b = atan_inv(239, w).mul_int(4);
    (&a - &b).round_to(prec)
}

/// arctan at a single dyadic point, at working precision `w`.
fn atan_point(v: &Dyadic, w: u32) -> IntervalReal {
    if v.is_zero() {
        return IntervalReal::zero(w);
    }
    let neg = v.is_negative();
    let a = IntervalReal::exact(v.abs(), w);
    let one = IntervalReal::one(w);
    let res = if a.gt(&one) == Some(true) {
        let inv = a.recip().expect("positive");
        &pi(w).mul_pow2(-1) - &atan_reduced(&inv, w)
    } else {
        atan_reduced(&a, w)
    };
    if neg {
        -res
    } else {
        res
    }
}

/// atan for `0 <= x <= 1` via `atan x = 2 atan(x / (1 + sqrt(1 + x^2)))`.
fn atan_reduced(x: &IntervalReal, w: u32) -> IntervalReal {
    let one = IntervalReal::one(w);
    let mut y = x.clone();
    for _ in 0..ATAN_REDUCTIONS {
        let d = &one + &(&one + &y.sqr()).sqrt();
        y = (&y / &d).round_to(w);
    }
    atan_series(&y, w).mul_pow2(ATAN_REDUCTIONS)
}

impl IntervalReal {
    /// Certified arctangent; uses monotonicity so the result is the hull of
    /// the endpoint enclosures.
    pub fn atan(&self) -> IntervalReal {
        let prec = self.precision_bits();
        let w = prec + 40;
        if self.is_point() {
            return atan_point(self.lo(), w).round_to(prec);
        }
        let lo = atan_point(self.lo(), w);
        let hi = atan_point(self.hi(), w);
        IntervalReal::from_bounds(
            lo.lo().round(prec, Rounding::Down),
            hi.hi().round(prec, Rounding::Up),
            prec,
        )
        .expect("atan is monotone")
    }

    /// Certified arcsine for intervals inside `(-1, 1)`; `None` otherwise.
    pub fn asin(&self) -> Option<IntervalReal> {
        let prec = self.precision_bits();
        let w = prec + 16;
        let x = self.clone().with_precision(w);
        let one = IntervalReal::one(w);
        let c = &one - &x.sqr();
        if !c.is_strictly_positive() {
            return None;
        }
        let t = x.div(&c.sqrt())?;
        Some(t.atan().round_to(prec))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_contains_reference_digits() {
        let p = pi(200);
        // 3.14159265358979323846264338327950288419716939937510...
        let s = p.to_decimal(50);
        assert!(s.starts_with("3.141592653589793238462643383279502884197169399375"));
        assert!(p.width() < Dyadic::new(BigInt::from(1), -195));
    }

    #[test]
    fn atan_one_is_quarter_pi() {
        let a = IntervalReal::one(128).atan();
        let q = pi(128).mul_pow2(-2);
        assert!(a.overlaps(&q));
        assert!(a.width() < Dyadic::new(BigInt::from(1), -120));
    }

    #[test]
    fn atan_large_and_negative() {
        let x = IntervalReal::from_int(3, 128);
        let a = x.atan();
        // atan(3) = 1.2490457723982544258...
        assert!(a.to_decimal(25).starts_with("1.249045772398254425829917"));
        let b = (-&x).atan();
        assert!(b.overlaps(&-&a));
    }

    #[test]
    fn asin_half_is_sixth_pi() {
        let h = IntervalReal::from_ratio(1, 2, 128);
        let a = h.asin().unwrap();
        let sixth = pi(128).div_int(6);
        assert!(a.overlaps(&sixth));
        assert!(IntervalReal::one(64).asin().is_none());
    }
}
