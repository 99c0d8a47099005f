//! Property tests against independent oracles: naive recurrences, integer
//! square roots, exact rational arithmetic and the Pythagorean relation.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use theodorus::exact_seq::{fib, fib_pair, isqrt, lucas, Dyadic};
use theodorus::spiral_engine::triangle;
use theodorus::{IntervalReal, SequenceSpec};

fn naive_additive(a: u64, b: u64, n: u64) -> BigUint {
    // a_1 = a, a_2 = b
    let (mut x, mut y) = (BigUint::from(a), BigUint::from(b));
    for _ in 1..n {
        let z = &x + &y;
        x = y;
        y = z;
    }
    x
}

fn to_rational(d: &Dyadic) -> BigRational {
    let m = BigRational::from_integer(d.mantissa().clone());
    let e = d.exponent();
    let two = BigRational::from_integer(BigInt::from(2));
    if e >= 0 {
        m * num_traits::pow(two, e as usize)
    } else {
        m / num_traits::pow(two, (-e) as usize)
    }
}

fn encloses(x: &IntervalReal, v: &BigRational) -> bool {
    to_rational(x.lo()) <= *v && *v <= to_rational(x.hi())
}

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

proptest! {
    #[test]
    fn fib_matches_recurrence_and_identities(n in 0u64..2000) {
        let (f, g) = fib_pair(n);
        prop_assert_eq!(&f, &fib(n));
        prop_assert_eq!(&g, &fib(n + 1));
        prop_assert_eq!(&fib(n + 2), &(&f + &g));
        // L_n = F_{n-1} + F_{n+1}, with F_{-1} = 1
        let prev = if n == 0 { BigUint::one() } else { fib(n - 1) };
        prop_assert_eq!(lucas(n), prev + &g);
    }

    #[test]
    fn cassini_identity(n in 1u64..1500) {
        // F_{n+1} F_{n-1} - F_n^2 = (-1)^n
        let lhs = BigInt::from(fib(n + 1) * fib(n - 1));
        let rhs = BigInt::from(fib(n).pow(2u32));
        let sign = if n % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        prop_assert_eq!(lhs - rhs, sign);
    }

    #[test]
    fn additive_terms_match_naive(a in 1u64..1000, b in 1u64..1000, from in 1u64..60, len in 0u64..40) {
        let spec = SequenceSpec::additive(BigUint::from(a), BigUint::from(b)).unwrap();
        let got = spec.terms(from, from + len).unwrap();
        for (i, t) in got.iter().enumerate() {
            let n = from + i as u64;
            prop_assert_eq!(t, &naive_additive(a, b, n));
            prop_assert_eq!(t, &spec.term(n).unwrap());
        }
    }

    #[test]
    fn isqrt_brackets(limbs in prop::collection::vec(any::<u32>(), 0..10)) {
        let n = BigUint::new(limbs);
        let r = isqrt(&n);
        let r1 = &r + 1u32;
        prop_assert!(&r * &r <= n);
        prop_assert!(n < &r1 * &r1);
    }

    #[test]
    fn triangles_are_right(n in 1u64..400, a in 1u64..50, b in 1u64..50) {
        for spec in [
            SequenceSpec::fibonacci(),
            SequenceSpec::lucas(),
            SequenceSpec::ClassicTheodorus,
            SequenceSpec::additive(BigUint::from(a), BigUint::from(b)).unwrap(),
        ] {
            let t = triangle(&spec, n).unwrap();
            prop_assert!(t.is_pythagorean(), "{} n={}", spec, n);
        }
    }

    #[test]
    fn interval_ops_enclose_exact_results(
        an in -1000i64..1000, ad in 1i64..1000,
        bn in -1000i64..1000, bd in 1i64..1000,
        prec in 8u32..80,
    ) {
        let a = IntervalReal::from_ratio(an, ad, prec);
        let b = IntervalReal::from_ratio(bn, bd, prec);
        let (ra, rb) = (ratio(an, ad), ratio(bn, bd));
        prop_assert!(encloses(&a, &ra));
        prop_assert!(encloses(&(&a + &b), &(&ra + &rb)));
        prop_assert!(encloses(&(&a - &b), &(&ra - &rb)));
        prop_assert!(encloses(&(&a * &b), &(&ra * &rb)));
        prop_assert!(encloses(&a.sqr(), &(&ra * &ra)));
        if !rb.is_zero() {
            if let Some(q) = a.div(&b) {
                prop_assert!(encloses(&q, &(&ra / &rb)));
            }
        }
    }

    #[test]
    fn sqrt_encloses_root(k in 0u64..1_000_000, prec in 8u32..120) {
        let s = IntervalReal::sqrt_of(&BigUint::from(k), prec);
        // lo^2 <= k <= hi^2 with both ends non-negative
        let lo = to_rational(s.lo());
        let hi = to_rational(s.hi());
        let kr = BigRational::from_integer(BigInt::from(k));
        prop_assert!(lo >= BigRational::zero());
        prop_assert!(&lo * &lo <= kr && kr <= &hi * &hi);
        let r = isqrt(&BigUint::from(k));
        if &r * &r == BigUint::from(k) {
            prop_assert!(s.is_point());
        }
    }
}
