use serde::{Deserialize, Serialize};

use crate::exact_seq::{phi, IntervalReal};

/// Expected size of a limit deviation at parameter `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "profile", rename_all = "kebab-case")]
pub enum Tolerance {
    /// `scale * phi^(num * n / den)`.
    PhiPow { scale: u32, num: i64, den: u32 },
    /// `scale / sqrt(n)`.
    InverseSqrt { scale: u32 },
}

impl Tolerance {
    pub const fn phi_pow(scale: u32, num: i64, den: u32) -> Self {
        Tolerance::PhiPow { scale, num, den }
    }

    /// The tolerance at `n`, as an interval at `prec` bits.
    pub fn at(&self, n: u64, prec: u32) -> IntervalReal {
        let w = prec + 16;
        let v = match *self {
            Tolerance::PhiPow { scale, num, den } => {
                let e = num * n as i64;
                phi(w).powi(e).expect("phi > 0").nth_root(den).mul_int(scale)
            }
            Tolerance::InverseSqrt { scale } => IntervalReal::from_int(scale, w)
                .div(&IntervalReal::from_int(n, w).sqrt())
                .expect("n >= 1"),
        };
        v.round_to(prec)
    }

    pub fn describe(&self) -> String {
        match *self {
            Tolerance::PhiPow { scale, num, den: 1 } => format!("{scale}*phi^({num}n)"),
            Tolerance::PhiPow { scale, num, den } => format!("{scale}*phi^({num}n/{den})"),
            Tolerance::InverseSqrt { scale } => format!("{scale}/sqrt(n)"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values() {
        let t = Tolerance::phi_pow(1, -1, 1).at(1, 64);
        assert!(t.to_decimal(6).starts_with("0.61803"));
        let s = Tolerance::InverseSqrt { scale: 10 }.at(100, 64);
        assert_eq!(s.to_f64(), 1.0);
        assert_eq!(Tolerance::phi_pow(2, -1, 2).describe(), "2*phi^(-1n/2)");
    }
}
