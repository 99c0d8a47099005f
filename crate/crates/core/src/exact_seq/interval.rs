//! Certified real intervals with dyadic endpoints and outward rounding.
//!
//! `precision_bits` is the number of significant mantissa bits kept on each
//! endpoint after a rounded operation. Every operation rounds its lower
//! endpoint down and its upper endpoint up, so the exact result is always
//! contained. For a value of magnitude `v` one rounding step widens an
//! endpoint by at most `|v| * 2^(1 - precision_bits)`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use super::dyadic::{Dyadic, Rounding};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalReal {
    lo: Dyadic,
    hi: Dyadic,
    precision_bits: u32,
}

impl IntervalReal {
    /// Interval `[lo, hi]`; `None` when `lo > hi`.
    pub fn from_bounds(lo: Dyadic, hi: Dyadic, precision_bits: u32) -> Option<Self> {
        (lo <= hi).then_some(IntervalReal { lo, hi, precision_bits })
    }

    fn rounded(lo: Dyadic, hi: Dyadic, prec: u32) -> Self {
        debug_assert!(lo <= hi);
        IntervalReal {
            lo: lo.round(prec, Rounding::Down),
            hi: hi.round(prec, Rounding::Up),
            precision_bits: prec,
        }
    }

    /// Degenerate interval holding exactly `v` (no rounding).
    pub fn exact(v: Dyadic, precision_bits: u32) -> Self {
        IntervalReal {
            lo: v.clone(),
            hi: v,
            precision_bits,
        }
    }

    pub fn zero(prec: u32) -> Self {
        Self::exact(Dyadic::zero(), prec)
    }

    pub fn one(prec: u32) -> Self {
        Self::exact(Dyadic::one(), prec)
    }

    /// An integer, rounded outward to `prec` bits if it does not fit.
    pub fn from_int(v: impl Into<BigInt>, prec: u32) -> Self {
        let d = Dyadic::from_int(v);
        Self::rounded(d.clone(), d, prec)
    }

    pub fn from_biguint(v: &BigUint, prec: u32) -> Self {
        Self::from_int(BigInt::from(v.clone()), prec)
    }

    /// `num / den`; panics if `den` is zero.
    pub fn from_ratio(num: impl Into<BigInt>, den: impl Into<BigInt>, prec: u32) -> Self {
        let n = Dyadic::from_int(num);
        let d = Dyadic::from_int(den);
        IntervalReal {
            lo: n.div(&d, prec, Rounding::Down),
            hi: n.div(&d, prec, Rounding::Up),
            precision_bits: prec,
        }
        .ordered()
    }

    /// Exact hull of an `f64` value.
    pub fn from_f64(v: f64, prec: u32) -> Option<Self> {
        Dyadic::from_f64(v).map(|d| Self::exact(d, prec))
    }

    /// `sqrt(n)` for a non-negative integer, exact when `n` is a perfect square.
    pub fn sqrt_of(n: &BigUint, prec: u32) -> Self {
        let d = Dyadic::from(n);
        IntervalReal {
            lo: d.root(2, prec, Rounding::Down),
            hi: d.root(2, prec, Rounding::Up),
            precision_bits: prec,
        }
    }

    /// `sqrt(num / den)` for positive `den`.
    pub fn sqrt_ratio(num: &BigUint, den: &BigUint, prec: u32) -> Self {
        // sqrt(num/den) = sqrt(num*den)/den keeps one rounding in the root
        let w = prec + 4;
        let prod = num * den;
        Self::sqrt_of(&prod, w)
            .div(&Self::from_biguint(den, w))
            .expect("positive denominator")
            .round_to(prec)
    }

    fn ordered(self) -> Self {
        if self.lo <= self.hi {
            self
        } else {
            IntervalReal {
                lo: self.hi,
                hi: self.lo,
                precision_bits: self.precision_bits,
            }
        }
    }

    pub fn lo(&self) -> &Dyadic {
        &self.lo
    }

    pub fn hi(&self) -> &Dyadic {
        &self.hi
    }

    pub fn precision_bits(&self) -> u32 {
        self.precision_bits
    }

    /// Same endpoints, new working precision for subsequent operations.
    pub fn with_precision(mut self, prec: u32) -> Self {
        self.precision_bits = prec;
        self
    }

    /// Round endpoints outward to `prec` bits and adopt that precision.
    pub fn round_to(&self, prec: u32) -> Self {
        Self::rounded(self.lo.clone(), self.hi.clone(), prec)
    }

    pub fn width(&self) -> Dyadic {
        self.hi.sub(&self.lo)
    }

    pub fn midpoint(&self) -> Dyadic {
        self.lo.add(&self.hi).mul_pow2(-1)
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, v: &Dyadic) -> bool {
        &self.lo <= v && v <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&Dyadic::zero())
    }

    /// True when `other` lies inside `self`.
    pub fn encloses(&self, other: &IntervalReal) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn overlaps(&self, other: &IntervalReal) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// Upper bound of `|x|` over the interval.
    pub fn mag(&self) -> Dyadic {
        std::cmp::max(self.lo.abs(), self.hi.abs())
    }

    /// Lower bound of `|x|` over the interval.
    pub fn mig(&self) -> Dyadic {
        if self.contains_zero() {
            Dyadic::zero()
        } else {
            std::cmp::min(self.lo.abs(), self.hi.abs())
        }
    }

    pub fn abs(&self) -> Self {
        IntervalReal {
            lo: self.mig(),
            hi: self.mag(),
            precision_bits: self.precision_bits,
        }
    }

    /// Enclosure of `max(x, y)` for `x` in `self`, `y` in `other`.
    pub fn max(&self, other: &IntervalReal) -> Self {
        IntervalReal {
            lo: std::cmp::max(&self.lo, &other.lo).clone(),
            hi: std::cmp::max(&self.hi, &other.hi).clone(),
            precision_bits: self.precision_bits.max(other.precision_bits),
        }
    }

    pub fn min(&self, other: &IntervalReal) -> Self {
        IntervalReal {
            lo: std::cmp::min(&self.lo, &other.lo).clone(),
            hi: std::cmp::min(&self.hi, &other.hi).clone(),
            precision_bits: self.precision_bits.max(other.precision_bits),
        }
    }

    /// Smallest interval containing both.
    pub fn hull(&self, other: &IntervalReal) -> Self {
        IntervalReal {
            lo: std::cmp::min(&self.lo, &other.lo).clone(),
            hi: std::cmp::max(&self.hi, &other.hi).clone(),
            precision_bits: self.precision_bits.max(other.precision_bits),
        }
    }

    fn prec_with(&self, other: &IntervalReal) -> u32 {
        self.precision_bits.max(other.precision_bits)
    }

    pub fn add(&self, other: &IntervalReal) -> Self {
        Self::rounded(self.lo.add(&other.lo), self.hi.add(&other.hi), self.prec_with(other))
    }

    pub fn sub(&self, other: &IntervalReal) -> Self {
        Self::rounded(self.lo.sub(&other.hi), self.hi.sub(&other.lo), self.prec_with(other))
    }

    pub fn neg(&self) -> Self {
        IntervalReal {
            lo: self.hi.neg(),
            hi: self.lo.neg(),
            precision_bits: self.precision_bits,
        }
    }

    pub fn mul(&self, other: &IntervalReal) -> Self {
        let prec = self.prec_with(other);
        if !self.lo.is_negative() && !other.lo.is_negative() {
            return Self::rounded(self.lo.mul(&other.lo), self.hi.mul(&other.hi), prec);
        }
        let p = [
            self.lo.mul(&other.lo),
            self.lo.mul(&other.hi),
            self.hi.mul(&other.lo),
            self.hi.mul(&other.hi),
        ];
        let lo = p.iter().min().expect("four products").clone();
        let hi = p.iter().max().expect("four products").clone();
        Self::rounded(lo, hi, prec)
    }

    /// Exact scaling by `2^k`.
    pub fn mul_pow2(&self, k: i64) -> Self {
        IntervalReal {
            lo: self.lo.mul_pow2(k),
            hi: self.hi.mul_pow2(k),
            precision_bits: self.precision_bits,
        }
    }

    pub fn mul_int(&self, k: impl Into<BigInt>) -> Self {
        self.mul(&Self::exact(Dyadic::from_int(k), self.precision_bits))
    }

    pub fn div_int(&self, k: impl Into<BigInt>) -> Self {
        self.div(&Self::exact(Dyadic::from_int(k), self.precision_bits))
            .expect("non-zero integer divisor")
    }

    pub fn add_int(&self, k: impl Into<BigInt>) -> Self {
        self.add(&Self::exact(Dyadic::from_int(k), self.precision_bits))
    }

    /// `x^2`, tighter than `x * x` when the interval straddles zero.
    pub fn sqr(&self) -> Self {
        if self.contains_zero() {
            let m = self.mag();
            IntervalReal {
                lo: Dyadic::zero(),
                hi: m.mul(&m).round(self.precision_bits, Rounding::Up),
                precision_bits: self.precision_bits,
            }
        } else {
            let a = self.mig();
            let b = self.mag();
            Self::rounded(a.mul(&a), b.mul(&b), self.precision_bits)
        }
    }

    /// `self / other`, or `None` when `other` contains zero.
    pub fn div(&self, other: &IntervalReal) -> Option<Self> {
        if other.contains_zero() {
            return None;
        }
        let prec = self.prec_with(other);
        let candidates = [
            (&self.lo, &other.lo),
            (&self.lo, &other.hi),
            (&self.hi, &other.lo),
            (&self.hi, &other.hi),
        ];
        let lo = candidates
            .iter()
            .map(|(a, b)| a.div(b, prec, Rounding::Down))
            .min()
            .expect("four quotients");
        let hi = candidates
            .iter()
            .map(|(a, b)| a.div(b, prec, Rounding::Up))
            .max()
            .expect("four quotients");
        Some(IntervalReal {
            lo,
            hi,
            precision_bits: prec,
        })
    }

    pub fn recip(&self) -> Option<Self> {
        Self::one(self.precision_bits).div(self)
    }

    /// Integer power by repeated squaring. Negative exponents require the
    /// interval to exclude zero.
    pub fn powi(&self, k: i64) -> Option<Self> {
        if k < 0 {
            return self.powi(-k)?.recip();
        }
        let mut result = Self::one(self.precision_bits);
        let mut base = self.clone();
        let mut e = k as u64;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.sqr();
            }
        }
        Some(result)
    }

    /// Square root. Negative lower endpoints are clamped to zero (the root's
    /// domain); panics if the whole interval is negative.
    pub fn sqrt(&self) -> Self {
        self.nth_root(2)
    }

    /// Real `n`-th root of a non-negative interval (clamped like [`sqrt`](Self::sqrt)).
    pub fn nth_root(&self, n: u32) -> Self {
        assert!(
            !self.hi.is_negative(),
            "root of a negative interval [{}, {}]",
            self.lo,
            self.hi
        );
        let lo = if self.lo.is_negative() {
            Dyadic::zero()
        } else {
            self.lo.root(n, self.precision_bits, Rounding::Down)
        };
        IntervalReal {
            lo,
            hi: self.hi.root(n, self.precision_bits, Rounding::Up),
            precision_bits: self.precision_bits,
        }
    }

    /// Certain `self < other`: `Some(true)` / `Some(false)` when decided by
    /// the bounds, `None` when the intervals overlap.
    pub fn lt(&self, other: &IntervalReal) -> Option<bool> {
        if self.hi < other.lo {
            Some(true)
        } else if self.lo >= other.hi {
            Some(false)
        } else {
            None
        }
    }

    pub fn le(&self, other: &IntervalReal) -> Option<bool> {
        if self.hi <= other.lo {
            Some(true)
        } else if self.lo > other.hi {
            Some(false)
        } else {
            None
        }
    }

    pub fn gt(&self, other: &IntervalReal) -> Option<bool> {
        other.lt(self)
    }

    pub fn ge(&self, other: &IntervalReal) -> Option<bool> {
        other.le(self)
    }

    /// `(lower bound, upper bound)` as `f64`, rounded outward.
    pub fn to_f64_bounds(&self) -> (f64, f64) {
        (self.lo.to_f64(Rounding::Down), self.hi.to_f64(Rounding::Up))
    }

    /// Midpoint as `f64`; presentation only.
    pub fn to_f64(&self) -> f64 {
        self.midpoint().to_f64_approx()
    }

    /// Midpoint to `digits` significant decimal digits.
    pub fn to_decimal(&self, digits: usize) -> String {
        self.midpoint().to_decimal(digits)
    }

    /// Integer enclosure `[floor(lo), ceil(hi)]`.
    pub fn floor_bounds(&self) -> (BigInt, BigInt) {
        (self.lo.floor(), self.hi.floor())
    }

    /// `n` such that `self ⊂ (n - 1, n]` when decidable (i.e. `ceil` of every
    /// point of the interval agrees).
    pub fn certain_ceil(&self) -> Option<BigInt> {
        let a = self.lo.ceil();
        let b = self.hi.ceil();
        (a == b).then_some(a)
    }

    /// Like [`certain_ceil`](Self::certain_ceil) for `floor`.
    pub fn certain_floor(&self) -> Option<BigInt> {
        let a = self.lo.floor();
        let b = self.hi.floor();
        (a == b).then_some(a)
    }

    /// True when both endpoints are integers and equal.
    pub fn is_exact_integer(&self) -> bool {
        self.is_point() && self.lo.exponent() >= 0
    }

    pub(crate) fn is_strictly_positive(&self) -> bool {
        self.lo.is_positive()
    }

    /// Upper bound on the radius, as `f64`.
    pub fn radius_f64(&self) -> f64 {
        self.width().mul_pow2(-1).to_f64(Rounding::Up)
    }
}

impl fmt::Display for IntervalReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(20);
        if self.is_point() {
            write!(f, "{}", self.lo.to_decimal(digits))
        } else {
            write!(f, "{} ± {:.2e}", self.to_decimal(digits), self.radius_f64())
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $call:expr) => {
        impl<'a> $tr<&'a IntervalReal> for &'a IntervalReal {
            type Output = IntervalReal;
            fn $method(self, rhs: &'a IntervalReal) -> IntervalReal {
                $call(self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, IntervalReal::add);
forward_binop!(Sub, sub, IntervalReal::sub);
forward_binop!(Mul, mul, IntervalReal::mul);
forward_binop!(Div, div, |a: &IntervalReal, b: &IntervalReal| a
    .div(b)
    .expect("interval division by an interval containing zero"));

impl Neg for IntervalReal {
    type Output = IntervalReal;
    fn neg(self) -> IntervalReal {
        IntervalReal::neg(&self)
    }
}

impl Neg for &IntervalReal {
    type Output = IntervalReal;
    fn neg(self) -> IntervalReal {
        IntervalReal::neg(self)
    }
}

/// Running sum of square roots of non-negative integers on a fixed-point grid.
///
/// Each term contributes `floor` and `ceil` of `sqrt(n) * 2^frac_bits` to two
/// exact integer accumulators, which avoids rounding the partial sums at all.
#[derive(Clone, Debug)]
pub struct SqrtSum {
    frac_bits: u64,
    lo: BigUint,
    hi: BigUint,
    terms: u64,
}

impl SqrtSum {
    pub fn new(frac_bits: u32) -> Self {
        SqrtSum {
            frac_bits: frac_bits as u64,
            lo: BigUint::zero(),
            hi: BigUint::zero(),
            terms: 0,
        }
    }

    pub fn push(&mut self, n: &BigUint) {
        let scaled = n << (2 * self.frac_bits);
        let r = scaled.sqrt();
        if &r * &r == scaled {
            self.hi += &r;
        } else {
            self.hi += &r + 1u32;
        }
        self.lo += r;
        self.terms += 1;
    }

    pub fn terms(&self) -> u64 {
        self.terms
    }

    pub fn finish(&self, prec: u32) -> IntervalReal {
        let e = -(self.frac_bits as i64);
        let lo = Dyadic::new(BigInt::from(self.lo.clone()), e);
        let hi = Dyadic::new(BigInt::from(self.hi.clone()), e);
        IntervalReal::rounded(lo, hi, prec)
    }
}
