//! Named irrational constants and the Binet residual.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

use super::elementary;
use super::interval::IntervalReal;
use super::sequence::fib;

/// Extra bits carried by [`constant`] so the returned width stays below
/// `2^(2 - precision_bits)` even for values larger than 1.
const CONSTANT_GUARD_BITS: u32 = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Constant {
    Phi,
    Beta,
    AbsBeta,
    SqrtPhi,
    Sqrt5,
    Pi,
    /// `phi^2 (1 + phi^(-1/2))`, the perimeter-bound scale.
    CPerimeter,
}

impl Constant {
    pub const ALL: [Constant; 7] = [
        Constant::Phi,
        Constant::Beta,
        Constant::AbsBeta,
        Constant::SqrtPhi,
        Constant::Sqrt5,
        Constant::Pi,
        Constant::CPerimeter,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Constant::Phi => "phi",
            Constant::Beta => "beta",
            Constant::AbsBeta => "abs_beta",
            Constant::SqrtPhi => "sqrt_phi",
            Constant::Sqrt5 => "sqrt5",
            Constant::Pi => "pi",
            Constant::CPerimeter => "C_perimeter",
        }
    }
}

impl fmt::Display for Constant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Constant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Constant::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownConstant(s.to_string()))
    }
}

pub fn sqrt5(prec: u32) -> IntervalReal {
    IntervalReal::from_int(5, prec).sqrt()
}

/// `(1 + sqrt 5) / 2`.
pub fn phi(prec: u32) -> IntervalReal {
    sqrt5(prec).add_int(1).mul_pow2(-1)
}

/// `(1 - sqrt 5) / 2`.
pub fn beta(prec: u32) -> IntervalReal {
    (-&sqrt5(prec)).add_int(1).mul_pow2(-1)
}

/// `|beta| = phi - 1 = 1/phi`.
pub fn abs_beta(prec: u32) -> IntervalReal {
    sqrt5(prec).add_int(-1).mul_pow2(-1)
}

pub fn sqrt_phi(prec: u32) -> IntervalReal {
    phi(prec).sqrt()
}

pub fn pi(prec: u32) -> IntervalReal {
    elementary::pi(prec)
}

pub fn c_perimeter(prec: u32) -> IntervalReal {
    let p = phi(prec);
    let inv_root = sqrt_phi(prec).recip().expect("phi > 0");
    &p.sqr() * &inv_root.add_int(1)
}

/// Interval for the named constant, width at most `2^(2 - precision_bits)`.
pub fn constant(c: Constant, precision_bits: u32) -> Result<IntervalReal> {
    if precision_bits < 53 {
        return Err(Error::invalid(format!(
            "precision_bits must be at least 53, got {precision_bits}"
        )));
    }
    let w = precision_bits + CONSTANT_GUARD_BITS;
    let v = match c {
        Constant::Phi => phi(w),
        Constant::Beta => beta(w),
        Constant::AbsBeta => abs_beta(w),
        Constant::SqrtPhi => sqrt_phi(w),
        Constant::Sqrt5 => sqrt5(w),
        Constant::Pi => pi(w),
        Constant::CPerimeter => c_perimeter(w),
    };
    Ok(v.with_precision(precision_bits))
}

/// Lookup by name (`phi`, `beta`, `abs_beta`, `sqrt_phi`, `sqrt5`, `pi`, `C_perimeter`).
pub fn constant_by_name(name: &str, precision_bits: u32) -> Result<IntervalReal> {
    constant(name.parse()?, precision_bits)
}

/// `phi^n - (sqrt5 F_n + beta^n)`; contains zero by Binet's formula.
pub fn binet_residual(n: u64, precision_bits: u32) -> IntervalReal {
    let w = precision_bits;
    let lhs = phi(w).powi(n as i64).expect("non-negative power");
    let f = IntervalReal::from_biguint(&fib(n), w);
    let rhs = &(&sqrt5(w) * &f) + &beta(w).powi(n as i64).expect("non-negative power");
    &lhs - &rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_seq::Dyadic;
    use num_bigint::BigInt;

    fn limit(prec: u32) -> Dyadic {
        Dyadic::new(BigInt::from(1), 2 - prec as i64)
    }

    #[test]
    fn constant_values_and_widths() {
        let phi = constant(Constant::Phi, 64).unwrap();
        assert!(phi.to_decimal(11).starts_with("1.618033988"));
        let b = constant(Constant::Beta, 64).unwrap();
        assert!(b.to_decimal(11).starts_with("-0.618033988"));
        let c = constant(Constant::CPerimeter, 64).unwrap();
        assert!(c.to_decimal(8).starts_with("4.676205"), "{c}");
        for k in Constant::ALL {
            for prec in [53, 64, 128, 300] {
                let v = constant(k, prec).unwrap();
                assert!(v.width() <= limit(prec), "{k} at {prec}");
            }
        }
    }

    #[test]
    fn constant_rejects_low_precision_and_unknown_names() {
        assert!(constant(Constant::Pi, 52).is_err());
        assert_eq!(constant_by_name("tau", 64), Err(Error::UnknownConstant("tau".into())));
        assert!(constant_by_name("C_perimeter", 64).is_ok());
    }

    #[test]
    fn beta_is_one_minus_phi() {
        let b = constant(Constant::Beta, 128).unwrap();
        let one_minus = (-&constant(Constant::Phi, 128).unwrap()).add_int(1);
        assert!(b.overlaps(&one_minus));
    }

    #[test]
    fn binet_residual_examples() {
        assert!(binet_residual(1, 128).contains_zero());
        let r = binet_residual(10, 128);
        assert!(r.contains_zero());
        assert!(r.width() < Dyadic::new(BigInt::from(1), -100));
        assert!(binet_residual(50, 256).contains_zero());
    }
}
