use crate::error::{Error, Result};
use crate::exact_seq::{BigNat, IntervalReal, SequenceSpec};

/// Integer radicands of a spiral triangle; the side lengths are their square
/// roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Triangle {
    pub adjacent_radicand: BigNat,
    pub opposite_radicand: BigNat,
    pub hypotenuse_radicand: BigNat,
}

impl Triangle {
    /// `adjacent + opposite == hypotenuse`, the right-angle condition.
    pub fn is_pythagorean(&self) -> bool {
        &self.adjacent_radicand + &self.opposite_radicand == self.hypotenuse_radicand
    }
}

/// The `n`-th triangle (`n >= 1`).
///
/// For an additive sequence the legs are `sqrt(a_n)` (opposite) and
/// `sqrt(a_{n+1})` (adjacent), with hypotenuse `sqrt(a_{n+2})`. For the
/// classic spiral the legs are `1` and `sqrt(n)`.
pub fn triangle(spec: &SequenceSpec, n: u64) -> Result<Triangle> {
    if n < 1 {
        return Err(Error::invalid("triangle index must be >= 1"));
    }
    Ok(match spec {
        SequenceSpec::ClassicTheodorus => Triangle {
            adjacent_radicand: BigNat::from(n),
            opposite_radicand: BigNat::from(1u32),
            hypotenuse_radicand: BigNat::from(n + 1),
        },
        SequenceSpec::Additive { .. } => {
            let mut t = spec.terms(n, n + 2)?.into_iter();
            let opposite_radicand = t.next().expect("three terms");
            let adjacent_radicand = t.next().expect("three terms");
            let hypotenuse_radicand = t.next().expect("three terms");
            Triangle {
                adjacent_radicand,
                opposite_radicand,
                hypotenuse_radicand,
            }
        }
    })
}

/// `tan(theta_n) = sqrt(opposite / adjacent)`.
pub fn tan_angle(spec: &SequenceSpec, n: u64, precision_bits: u32) -> Result<IntervalReal> {
    let t = triangle(spec, n)?;
    Ok(IntervalReal::sqrt_ratio(
        &t.opposite_radicand,
        &t.adjacent_radicand,
        precision_bits,
    ))
}

/// The angle `theta_n` at the common vertex, in radians.
pub fn angle(spec: &SequenceSpec, n: u64, precision_bits: u32) -> Result<IntervalReal> {
    let w = precision_bits + 16;
    Ok(tan_angle(spec, n, w)?.atan().round_to(precision_bits))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_seq::pi;

    fn radicands(t: &Triangle) -> (u64, u64, u64) {
        let f = |b: &BigNat| u64::try_from(b).unwrap();
        (
            f(&t.adjacent_radicand),
            f(&t.opposite_radicand),
            f(&t.hypotenuse_radicand),
        )
    }

    #[test]
    fn fibonacci_triangles() {
        let fib = SequenceSpec::fibonacci();
        assert_eq!(radicands(&triangle(&fib, 1).unwrap()), (1, 1, 2));
        assert_eq!(radicands(&triangle(&fib, 4).unwrap()), (5, 3, 8));
        assert!(triangle(&fib, 0).is_err());
        for n in 1..60 {
            assert!(triangle(&fib, n).unwrap().is_pythagorean());
        }
    }

    #[test]
    fn classic_triangles() {
        let c = SequenceSpec::ClassicTheodorus;
        assert_eq!(radicands(&triangle(&c, 1).unwrap()), (1, 1, 2));
        assert_eq!(radicands(&triangle(&c, 7).unwrap()), (7, 1, 8));
    }

    #[test]
    fn first_angles() {
        let fib = SequenceSpec::fibonacci();
        let a1 = angle(&fib, 1, 96).unwrap();
        assert!(a1.overlaps(&pi(96).mul_pow2(-2)));
        // atan(sqrt(1/2)) = 0.6154797086703873...
        assert!(angle(&fib, 2, 96)
            .unwrap()
            .to_decimal(15)
            .starts_with("0.61547970867038"));
        // atan(1/2) = 0.4636476090008061...
        let c4 = angle(&SequenceSpec::ClassicTheodorus, 4, 96).unwrap();
        assert!(c4.to_decimal(15).starts_with("0.46364760900080"));
    }
}
