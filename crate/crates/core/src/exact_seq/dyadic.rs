//! Exact binary fractions `mantissa * 2^exponent` with directed rounding.
//!
//! These are the endpoints of [`IntervalReal`](super::IntervalReal). All
//! arithmetic here is exact except the explicitly rounded operations
//! (`round`, `div`, `root`), which take a [`Rounding`] direction so callers can
//! round lower endpoints down and upper endpoints up.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Direction for a rounded operation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rounding {
    /// Toward negative infinity.
    Down,
    /// Toward positive infinity.
    Up,
}

/// A dyadic rational `mant * 2^exp`, kept normalized (odd mantissa, or zero
/// with exponent 0) so that equal values compare equal structurally.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Dyadic {
    mant: BigInt,
    exp: i64,
}

fn pow2(s: u64) -> BigInt {
    BigInt::one() << s
}

/// `floor(m / 2^s)`.
fn shr_floor(m: &BigInt, s: u64) -> BigInt {
    if s == 0 {
        return m.clone();
    }
    if m.is_negative() {
        let neg = -m;
        -((neg + (pow2(s) - 1u32)) >> s)
    } else {
        m >> s
    }
}

fn shr_round(m: &BigInt, s: u64, dir: Rounding) -> BigInt {
    match dir {
        Rounding::Down => shr_floor(m, s),
        Rounding::Up => -shr_floor(&-m, s),
    }
}

fn div_round(a: &BigInt, b: &BigInt, dir: Rounding) -> BigInt {
    match dir {
        Rounding::Down => a.div_floor(b),
        Rounding::Up => -((-a).div_floor(b)),
    }
}

impl Dyadic {
    pub fn new(mant: BigInt, exp: i64) -> Self {
        Dyadic { mant, exp }.normalized()
    }

    pub fn zero() -> Self {
        Dyadic {
            mant: BigInt::zero(),
            exp: 0,
        }
    }

    pub fn one() -> Self {
        Dyadic {
            mant: BigInt::one(),
            exp: 0,
        }
    }

    pub fn from_int(v: impl Into<BigInt>) -> Self {
        Dyadic::new(v.into(), 0)
    }

    /// Exact conversion of a finite `f64`. Returns `None` for NaN or infinity.
    pub fn from_f64(v: f64) -> Option<Self> {
        if !v.is_finite() {
            return None;
        }
        if v == 0.0 {
            return Some(Dyadic::zero());
        }
        let bits = v.to_bits();
        let sign = if bits >> 63 == 1 { -1i64 } else { 1 };
        let raw_exp = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (mant, exp) = if raw_exp == 0 {
            (frac as i64, -1074)
        } else {
            ((frac | (1u64 << 52)) as i64, raw_exp - 1075)
        };
        Some(Dyadic::new(BigInt::from(sign * mant), exp))
    }

    fn normalized(mut self) -> Self {
        match self.mant.trailing_zeros() {
            None => {
                self.exp = 0;
                self
            }
            Some(0) => self,
            Some(tz) => {
                self.mant >>= tz;
                self.exp += tz as i64;
                self
            }
        }
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mant
    }

    pub fn exponent(&self) -> i64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.mant.is_positive()
    }

    pub fn sign(&self) -> Sign {
        self.mant.sign()
    }

    /// `floor(log2 |x|)`; `None` for zero.
    pub fn ilog2(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.exp + self.mant.bits() as i64 - 1)
        }
    }

    pub fn neg(&self) -> Self {
        Dyadic {
            mant: -&self.mant,
            exp: self.exp,
        }
    }

    pub fn abs(&self) -> Self {
        Dyadic {
            mant: self.mant.abs(),
            exp: self.exp,
        }
    }

    pub fn add(&self, other: &Dyadic) -> Dyadic {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let e = self.exp.min(other.exp);
        let a = &self.mant << (self.exp - e) as u64;
        let b = &other.mant << (other.exp - e) as u64;
        Dyadic::new(a + b, e)
    }

    pub fn sub(&self, other: &Dyadic) -> Dyadic {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Dyadic) -> Dyadic {
        if self.is_zero() || other.is_zero() {
            return Dyadic::zero();
        }
        // product of odd mantissas is odd, no renormalization needed
        Dyadic {
            mant: &self.mant * &other.mant,
            exp: self.exp + other.exp,
        }
    }

    /// Exact multiplication by `2^k`.
    pub fn mul_pow2(&self, k: i64) -> Dyadic {
        if self.is_zero() {
            return Dyadic::zero();
        }
        Dyadic {
            mant: self.mant.clone(),
            exp: self.exp + k,
        }
    }

    /// Round to at most `prec` significant bits in the given direction.
    pub fn round(&self, prec: u32, dir: Rounding) -> Dyadic {
        let bits = self.mant.bits();
        if bits <= prec as u64 {
            return self.clone();
        }
        let s = bits - prec as u64;
        Dyadic::new(shr_round(&self.mant, s, dir), self.exp + s as i64)
    }

    /// `self / other` rounded to `prec` bits. Panics if `other` is zero.
    pub fn div(&self, other: &Dyadic, prec: u32, dir: Rounding) -> Dyadic {
        assert!(!other.is_zero(), "dyadic division by zero");
        if self.is_zero() {
            return Dyadic::zero();
        }
        let k = (prec as i64 + other.mant.bits() as i64 - self.mant.bits() as i64 + 2).max(0);
        let num = &self.mant << k as u64;
        let q = div_round(&num, &other.mant, dir);
        Dyadic::new(q, self.exp - other.exp - k).round(prec, dir)
    }

    /// `self^(1/n)` for `self >= 0`, rounded to `prec` bits. Panics on a
    /// negative argument.
    pub fn root(&self, n: u32, prec: u32, dir: Rounding) -> Dyadic {
        assert!(n >= 1, "root index must be positive");
        assert!(!self.is_negative(), "root of negative dyadic");
        if self.is_zero() || n == 1 {
            return self.round(prec, dir);
        }
        let n64 = n as i64;
        let want = n64 * (prec as i64 + 2);
        let t0 = (want - self.mant.bits() as i64).max(0);
        let t = t0 + (self.exp - t0).rem_euclid(n64);
        let m = (&self.mant << t as u64).to_biguint().expect("non-negative mantissa");
        let e = (self.exp - t) / n64;
        let mut r: BigUint = m.nth_root(n);
        if dir == Rounding::Up && num_traits::pow::pow(r.clone(), n as usize) != m {
            r += 1u32;
        }
        Dyadic::new(BigInt::from(r), e).round(prec, dir)
    }

    /// Largest integer not above the value.
    pub fn floor(&self) -> BigInt {
        if self.exp >= 0 {
            &self.mant << self.exp as u64
        } else {
            shr_floor(&self.mant, (-self.exp) as u64)
        }
    }

    /// Smallest integer not below the value.
    pub fn ceil(&self) -> BigInt {
        -self.neg().floor()
    }

    /// Directed conversion to `f64`: the result is a lower (`Down`) or upper
    /// (`Up`) bound of the exact value. Saturates to infinities on overflow.
    pub fn to_f64(&self, dir: Rounding) -> f64 {
        let Some(l2) = self.ilog2() else {
            return 0.0;
        };
        let neg = self.is_negative();
        if l2 > 1023 {
            return match (neg, dir) {
                (false, Rounding::Down) => f64::MAX,
                (false, Rounding::Up) => f64::INFINITY,
                (true, Rounding::Down) => f64::NEG_INFINITY,
                (true, Rounding::Up) => -f64::MAX,
            };
        }
        if l2 < -1020 {
            return match (neg, dir) {
                (false, Rounding::Down) => 0.0,
                (false, Rounding::Up) => f64::MIN_POSITIVE,
                (true, Rounding::Down) => -f64::MIN_POSITIVE,
                (true, Rounding::Up) => 0.0,
            };
        }
        let r = self.round(53, dir);
        let m = r.mant.to_i64().expect("53-bit mantissa") as f64;
        let e = r.exp;
        // split the scaling so intermediate factors stay normal
        let half = e / 2;
        m * 2f64.powi(half as i32) * 2f64.powi((e - half) as i32)
    }

    /// Nearest-ish `f64` (rounds toward negative infinity); for display only.
    pub fn to_f64_approx(&self) -> f64 {
        self.to_f64(Rounding::Down)
    }

    /// Decimal rendering with `digits` significant digits (rounded to nearest).
    pub fn to_decimal(&self, digits: usize) -> String {
        let digits = digits.max(1);
        if self.is_zero() {
            return "0".to_string();
        }
        let neg = self.is_negative();
        let mag = self.mant.abs();
        let (num, den) = if self.exp >= 0 {
            (mag << self.exp as u64, BigInt::one())
        } else {
            (mag, pow2((-self.exp) as u64))
        };
        // decimal exponent estimate, then correct
        let l2 = self.ilog2().unwrap_or(0);
        let mut e10 = ((l2 as f64) * std::f64::consts::LOG10_2).floor() as i64;
        let ten = BigInt::from(10u32);
        let scaled = |k: i64| -> (BigInt, BigInt) {
            if k >= 0 {
                (&num * num_traits::pow(ten.clone(), k as usize), den.clone())
            } else {
                (num.clone(), &den * num_traits::pow(ten.clone(), (-k) as usize))
            }
        };
        // want 10^e10 <= value < 10^(e10+1)
        loop {
            let (a, b) = scaled(-e10);
            if a < b {
                e10 -= 1;
                continue;
            }
            if a >= &b * &ten {
                e10 += 1;
                continue;
            }
            break;
        }
        let shift = digits as i64 - 1 - e10;
        let (a, b) = scaled(shift);
        let (q, r) = a.div_rem(&b);
        let mut q = if &r * 2u32 >= b { q + 1u32 } else { q };
        if q >= num_traits::pow(ten.clone(), digits) {
            q /= &ten;
            e10 += 1;
        }
        let s = q.to_string();
        let (int_part, frac_part) = s.split_at(1);
        let body = if (-5..=20).contains(&e10) {
            if e10 >= 0 {
                let e = e10 as usize;
                let mut all = s.clone();
                if all.len() <= e {
                    all.push_str(&"0".repeat(e + 1 - all.len()));
                }
                let (i, f) = all.split_at(e + 1);
                let f = f.trim_end_matches('0');
                if f.is_empty() {
                    i.to_string()
                } else {
                    format!("{i}.{f}")
                }
            } else {
                let lead = "0".repeat((-e10 - 1) as usize);
                let f = s.trim_end_matches('0');
                format!("0.{lead}{f}")
            }
        } else {
            let f = frac_part.trim_end_matches('0');
            if f.is_empty() {
                format!("{int_part}e{e10}")
            } else {
                format!("{int_part}.{f}e{e10}")
            }
        };
        if neg {
            format!("-{body}")
        } else {
            body
        }
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.sign(), other.sign()) {
            (a, b) if a != b => (a as i8).cmp(&(b as i8)),
            _ => match self.sub(other).sign() {
                Sign::Minus => Ordering::Less,
                Sign::NoSign => Ordering::Equal,
                Sign::Plus => Ordering::Greater,
            },
        }
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(20);
        f.write_str(&self.to_decimal(digits))
    }
}

impl From<i64> for Dyadic {
    fn from(v: i64) -> Self {
        Dyadic::from_int(v)
    }
}

impl From<&BigUint> for Dyadic {
    fn from(v: &BigUint) -> Self {
        Dyadic::from_int(BigInt::from(v.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(m: i64, e: i64) -> Dyadic {
        Dyadic::new(BigInt::from(m), e)
    }

    #[test]
    fn normalization_makes_equal_values_equal() {
        assert_eq!(d(4, 0), d(1, 2));
        assert_eq!(d(0, 17), Dyadic::zero());
    }

    #[test]
    fn directed_rounding_brackets_value() {
        let x = d(0b1011_0111, 0);
        assert_eq!(x.round(4, Rounding::Down), d(0b1011, 4));
        assert_eq!(x.round(4, Rounding::Up), d(0b1100, 4));
        let y = x.neg();
        assert_eq!(y.round(4, Rounding::Down), d(-0b1100, 4));
        assert_eq!(y.round(4, Rounding::Up), d(-0b1011, 4));
    }

    #[test]
    fn division_brackets_one_third() {
        let lo = d(1, 0).div(&d(3, 0), 64, Rounding::Down);
        let hi = d(1, 0).div(&d(3, 0), 64, Rounding::Up);
        assert!(lo < hi);
        assert!(lo.mul(&d(3, 0)) < d(1, 0));
        assert!(hi.mul(&d(3, 0)) > d(1, 0));
    }

    #[test]
    fn roots_exact_on_perfect_powers() {
        assert_eq!(d(144, 0).root(2, 64, Rounding::Down), d(12, 0));
        assert_eq!(d(144, 0).root(2, 64, Rounding::Up), d(12, 0));
        assert_eq!(d(1, -6).root(3, 64, Rounding::Up), d(1, -2));
        let lo = d(2, 0).root(2, 80, Rounding::Down);
        let hi = d(2, 0).root(2, 80, Rounding::Up);
        assert!(lo.mul(&lo) < d(2, 0) && hi.mul(&hi) > d(2, 0));
    }

    #[test]
    fn floor_and_ceil() {
        assert_eq!(d(-7, -1).floor(), BigInt::from(-4));
        assert_eq!(d(-7, -1).ceil(), BigInt::from(-3));
        assert_eq!(d(7, -1).floor(), BigInt::from(3));
        assert_eq!(d(3, 2).ceil(), BigInt::from(12));
    }

    #[test]
    fn f64_conversion_is_directed() {
        let third_lo = d(1, 0).div(&d(3, 0), 200, Rounding::Down);
        let third_hi = d(1, 0).div(&d(3, 0), 200, Rounding::Up);
        let a = third_lo.to_f64(Rounding::Down);
        let b = third_hi.to_f64(Rounding::Up);
        assert!(a < b);
        assert!(Dyadic::from_f64(a).unwrap() <= third_lo);
        assert!(Dyadic::from_f64(b).unwrap() >= third_hi);
        assert_eq!(Dyadic::from_f64(0.75).unwrap(), d(3, -2));
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(d(3, -1).to_decimal(5), "1.5");
        assert_eq!(d(144, 0).to_decimal(10), "144");
        assert_eq!(d(-1, -3).to_decimal(3), "-0.125");
        assert_eq!(d(1, 100).to_decimal(4), "1.268e30");
        assert_eq!(d(1, -40).to_decimal(3), "9.09e-13");
    }
}
