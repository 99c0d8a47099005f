use crate::error::Result;
use crate::exact_seq::{phi, pi, sqrt_phi, IntervalReal, SequenceSpec};
use crate::spiral_engine::{triangle, Point2};

/// Circumscribed and inscribed circles of one triangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircleMetrics {
    pub circum_radius: IntervalReal,
    pub circum_area: IntervalReal,
    pub circum_circumference: IntervalReal,
    pub in_radius: IntervalReal,
    pub in_area: IntervalReal,
}

/// Circle metrics of the `n`-th Fibonacci triangle.
pub fn circle_metrics(n: u64, precision_bits: u32) -> Result<CircleMetrics> {
    circle_metrics_of(&SequenceSpec::fibonacci(), n, precision_bits)
}

/// Circle metrics of the `n`-th triangle of any spiral.
///
/// The circumradius of a right triangle is half its hypotenuse; the
/// inradius is `(leg + leg - hypotenuse) / 2`.
pub fn circle_metrics_of(spec: &SequenceSpec, n: u64, precision_bits: u32) -> Result<CircleMetrics> {
    let t = triangle(spec, n)?;
    let w = precision_bits + 16;
    let p = pi(w);
    let hyp = IntervalReal::sqrt_of(&t.hypotenuse_radicand, w);
    let opp = IntervalReal::sqrt_of(&t.opposite_radicand, w);
    let adj = IntervalReal::sqrt_of(&t.adjacent_radicand, w);
    let circum_radius = hyp.mul_pow2(-1);
    let circum_area = (&p * &IntervalReal::from_biguint(&t.hypotenuse_radicand, w)).mul_pow2(-2);
    let circum_circumference = &p * &hyp;
    let in_radius = (&(&opp + &adj) - &hyp).mul_pow2(-1);
    let in_area = &p * &in_radius.sqr();
    let r = |x: IntervalReal| x.round_to(precision_bits);
    Ok(CircleMetrics {
        circum_radius: r(circum_radius),
        circum_area: r(circum_area),
        circum_circumference: r(circum_circumference),
        in_radius: r(in_radius),
        in_area: r(in_area),
    })
}

/// `(A_n / in_area, circum_area / in_area)` for the Fibonacci spiral.
pub fn incircle_ratios(n: u64, precision_bits: u32) -> Result<(IntervalReal, IntervalReal)> {
    let w = precision_bits + 16;
    let c = circle_metrics(n, w)?;
    let area = super::triangle_area(&SequenceSpec::fibonacci(), n, w)?.value;
    let a = area.div(&c.in_area).expect("positive incircle");
    let b = c.circum_area.div(&c.in_area).expect("positive incircle");
    Ok((a.round_to(precision_bits), b.round_to(precision_bits)))
}

/// Limits of [`incircle_ratios`]:
/// `2 sqrt(phi) / (pi (1 + sqrt(phi) - phi)^2)` and `phi^2 / (1 + sqrt(phi) - phi)^2`.
pub fn incircle_ratio_limits(precision_bits: u32) -> (IntervalReal, IntervalReal) {
    let w = precision_bits + 16;
    let f = phi(w);
    let s = sqrt_phi(w);
    let k = (&s.add_int(1) - &f).sqr();
    let la = s.mul_pow2(1).div(&(&pi(w) * &k)).expect("positive");
    let lc = f.sqr().div(&k).expect("positive");
    (la.round_to(precision_bits), lc.round_to(precision_bits))
}

/// Circumcenter and circumradius through three points, or `None` when the
/// points are not certainly in general position.
pub fn circumcircle_from_points(a: &Point2, b: &Point2, c: &Point2) -> Option<(Point2, IntervalReal)> {
    let sa = &a.x.sqr() + &a.y.sqr();
    let sb = &b.x.sqr() + &b.y.sqr();
    let sc = &c.x.sqr() + &c.y.sqr();
    let byc = &b.y - &c.y;
    let cya = &c.y - &a.y;
    let ayb = &a.y - &b.y;
    let d = (&(&(&a.x * &byc) + &(&b.x * &cya)) + &(&c.x * &ayb)).mul_pow2(1);
    let ux = &(&(&sa * &byc) + &(&sb * &cya)) + &(&sc * &ayb);
    let cxb = &c.x - &b.x;
    let axc = &a.x - &c.x;
    let bxa = &b.x - &a.x;
    let uy = &(&(&sa * &cxb) + &(&sb * &axc)) + &(&sc * &bxa);
    let center = Point2::new(ux.div(&d)?, uy.div(&d)?);
    let r = center.dist(a);
    Some((center, r))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_circumcircle() {
        let c = circle_metrics(1, 64).unwrap();
        assert!(c.circum_area.overlaps(&pi(64).mul_pow2(-1)));
        assert_eq!(c.in_radius.lt(&c.circum_radius), Some(true));
    }

    #[test]
    fn limits() {
        let (la, lc) = incircle_ratio_limits(64);
        assert!(la.to_decimal(9).starts_with("1.8933787"));
        assert!(lc.to_decimal(9).starts_with("6.1212318"));
    }

    #[test]
    fn circumcircle_of_right_triangle() {
        let p = |x, y| Point2::new(IntervalReal::from_int(x, 64), IntervalReal::from_int(y, 64));
        let (center, r) = circumcircle_from_points(&p(0, 0), &p(4, 0), &p(0, 3)).unwrap();
        assert!(center.x.overlaps(&IntervalReal::from_int(2, 64)));
        assert!(r.overlaps(&IntervalReal::from_ratio(5, 2, 64)));
    }
}
