//! Exact sequence terms: Fibonacci and Lucas by fast doubling, integer square
//! root, and the [`SequenceSpec`] that selects which sequence drives a spiral.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision non-negative integer.
pub type BigNat = num_bigint::BigUint;

/// `(F_n, F_{n+1})` by fast doubling.
///
/// Walks the bits of `n` from the top using
/// `F_{2k} = F_k (2 F_{k+1} - F_k)` and `F_{2k+1} = F_k^2 + F_{k+1}^2`.
pub fn fib_pair(n: u64) -> (BigNat, BigNat) {
    let mut a = BigNat::zero(); // F_k
    let mut b = BigNat::one(); // F_{k+1}
    if n == 0 {
        return (a, b);
    }
    let top = 63 - n.leading_zeros();
    for i in (0..=top).rev() {
        let two_b = &b << 1u32;
        let c = &a * (two_b - &a);
        let d = &a * &a + &b * &b;
        if (n >> i) & 1 == 0 {
            a = c;
            b = d;
        } else {
            b = &c + &d;
            a = d;
        }
    }
    (a, b)
}

/// `F_n` with `F_0 = 0`, `F_1 = F_2 = 1`.
pub fn fib(n: u64) -> BigNat {
    fib_pair(n).0
}

/// `L_n` with `L_0 = 2`, `L_1 = 1`.
pub fn lucas(n: u64) -> BigNat {
    // L_n = F_{n-1} + F_{n+1} = 2 F_{n+1} - F_n
    let (f, g) = fib_pair(n);
    (g << 1u32) - f
}

/// `floor(sqrt(n))`.
pub fn isqrt(n: &BigNat) -> BigNat {
    n.sqrt()
}

/// The integer sequence under the spiral's square roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SequenceSpec {
    /// `a_1 = seed_a`, `a_2 = seed_b`, `a_{n+1} = a_n + a_{n-1}`.
    Additive { seed_a: BigNat, seed_b: BigNat },
    /// `a_n = n`; the classic square-root spiral.
    ClassicTheodorus,
}

impl SequenceSpec {
    pub fn fibonacci() -> Self {
        SequenceSpec::Additive {
            seed_a: BigNat::one(),
            seed_b: BigNat::one(),
        }
    }

    /// Lucas numbers starting at `L_1 = 1`, `L_2 = 3`.
    pub fn lucas() -> Self {
        SequenceSpec::Additive {
            seed_a: BigNat::one(),
            seed_b: BigNat::from(3u32),
        }
    }

    pub fn additive(seed_a: BigNat, seed_b: BigNat) -> Result<Self> {
        if seed_a.is_zero() || seed_b.is_zero() {
            return Err(Error::invalid("additive seeds must be strictly positive"));
        }
        Ok(SequenceSpec::Additive { seed_a, seed_b })
    }

    pub fn is_fibonacci(&self) -> bool {
        *self == Self::fibonacci()
    }

    /// `a_n`. Index 0 is defined when it stays non-negative: `F_0 = 0`,
    /// `L_0 = 2`, `a_0 = b - a` in general, and `0` for the classic spiral.
    pub fn term(&self, n: u64) -> Result<BigNat> {
        match self {
            SequenceSpec::ClassicTheodorus => Ok(BigNat::from(n)),
            SequenceSpec::Additive { seed_a, seed_b } => match n {
                0 => {
                    if seed_b >= seed_a {
                        Ok(seed_b - seed_a)
                    } else {
                        Err(Error::invalid("a_0 = b - a is negative for these seeds"))
                    }
                }
                1 => Ok(seed_a.clone()),
                _ => {
                    // a_n = a F_{n-2} + b F_{n-1}
                    let (f, g) = fib_pair(n - 2);
                    Ok(seed_a * f + seed_b * g)
                }
            },
        }
    }

    /// Terms `a_from ..= a_to`, iterating the recurrence after the first two.
    pub fn terms(&self, from: u64, to: u64) -> Result<Vec<BigNat>> {
        if to < from {
            return Ok(Vec::new());
        }
        let len = (to - from + 1) as usize;
        let mut out = Vec::with_capacity(len);
        match self {
            SequenceSpec::ClassicTheodorus => out.extend((from..=to).map(BigNat::from)),
            SequenceSpec::Additive { .. } => {
                out.push(self.term(from)?);
                if len > 1 {
                    out.push(self.term(from + 1)?);
                }
                while out.len() < len {
                    let k = out.len();
                    let next = &out[k - 1] + &out[k - 2];
                    out.push(next);
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for SequenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceSpec::ClassicTheodorus => f.write_str("theodorus"),
            s if s.is_fibonacci() => f.write_str("fib"),
            s if *s == SequenceSpec::lucas() => f.write_str("lucas"),
            SequenceSpec::Additive { seed_a, seed_b } => write!(f, "additive:{seed_a},{seed_b}"),
        }
    }
}

fn parse_seed(s: &str) -> Result<BigNat> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("invalid seed `{s}`")));
    }
    BigNat::from_str(s).map_err(|e| Error::Parse(format!("invalid seed `{s}`: {e}")))
}

impl FromStr for SequenceSpec {
    type Err = Error;

    /// Accepts `fib`, `lucas`, `theodorus` and `additive:A,B`.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fib" | "fibonacci" => Ok(Self::fibonacci()),
            "lucas" => Ok(Self::lucas()),
            "theodorus" | "classic" => Ok(SequenceSpec::ClassicTheodorus),
            _ => {
                let rest = s.strip_prefix("additive:").ok_or_else(|| {
                    Error::Parse(format!(
                        "unknown sequence `{s}` (expected fib, lucas, additive:a,b or theodorus)"
                    ))
                })?;
                let (a, b) = rest
                    .split_once(',')
                    .ok_or_else(|| Error::Parse(format!("expected `additive:a,b`, got `{s}`")))?;
                Self::additive(parse_seed(a)?, parse_seed(b)?).map_err(|e| Error::Parse(e.to_string()))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_fib(n: u64) -> BigNat {
        let (mut a, mut b) = (BigNat::zero(), BigNat::one());
        for _ in 0..n {
            let c = &a + &b;
            a = b;
            b = c;
        }
        a
    }

    #[test]
    fn fib_examples() {
        assert_eq!(fib(0), BigNat::zero());
        assert_eq!(fib(1), BigNat::one());
        assert_eq!(fib(12), BigNat::from(144u32));
        for n in 0..120 {
            assert_eq!(fib(n), naive_fib(n), "F_{n}");
        }
    }

    #[test]
    fn lucas_examples() {
        assert_eq!(lucas(0), BigNat::from(2u32));
        assert_eq!(lucas(1), BigNat::one());
        assert_eq!(lucas(7), BigNat::from(29u32));
    }

    #[test]
    fn isqrt_examples() {
        assert_eq!(isqrt(&BigNat::from(144u32)), BigNat::from(12u32));
        assert_eq!(isqrt(&BigNat::from(21u32)), BigNat::from(4u32));
        assert_eq!(isqrt(&BigNat::zero()), BigNat::zero());
    }

    #[test]
    fn additive_terms() {
        let l = SequenceSpec::lucas();
        let got: Vec<_> = (0..8).map(|n| l.term(n).unwrap()).collect();
        let want: Vec<_> = [2u32, 1, 3, 4, 7, 11, 18, 29].map(BigNat::from).to_vec();
        assert_eq!(got, want);
        assert_eq!(l.terms(0, 7).unwrap(), want);
        let f = SequenceSpec::fibonacci();
        assert_eq!(f.term(0).unwrap(), BigNat::zero());
        let g = SequenceSpec::additive(BigNat::from(5u32), BigNat::from(2u32)).unwrap();
        assert!(g.term(0).is_err());
        assert_eq!(g.term(4).unwrap(), BigNat::from(9u32));
    }

    #[test]
    fn additive_rejects_zero_seed() {
        assert!(SequenceSpec::additive(BigNat::zero(), BigNat::one()).is_err());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("fib".parse::<SequenceSpec>().unwrap(), SequenceSpec::fibonacci());
        assert_eq!("additive:1,3".parse::<SequenceSpec>().unwrap(), SequenceSpec::lucas());
        assert_eq!(
            "theodorus".parse::<SequenceSpec>().unwrap(),
            SequenceSpec::ClassicTheodorus
        );
        let g: SequenceSpec = "additive:2,7".parse().unwrap();
        assert_eq!(g.to_string(), "additive:2,7");
        for bad in [
            "",
            "pell",
            "additive:",
            "additive:1",
            "additive:0,1",
            "additive:-1,2",
            "additive:+1,2",
        ] {
            assert!(bad.parse::<SequenceSpec>().is_err(), "{bad}");
        }
    }
}
