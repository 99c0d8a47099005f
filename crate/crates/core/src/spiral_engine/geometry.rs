use super::triangle::{tan_angle, triangle, Triangle};
use crate::error::{Error, Result};
use crate::exact_seq::{pi, IntervalReal, PrecisionPolicy, SequenceSpec};

/// Hard limit on the number of triangles summed by [`windings_count`].
pub const MAX_WINDING_TRIANGLES: u64 = 2_000_000;

/// A point in the plane with interval coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Point2 {
    pub x: IntervalReal,
    pub y: IntervalReal,
}

impl Point2 {
    pub fn new(x: IntervalReal, y: IntervalReal) -> Self {
        Point2 { x, y }
    }

    pub fn origin(prec: u32) -> Self {
        Point2::new(IntervalReal::zero(prec), IntervalReal::zero(prec))
    }

    pub fn add(&self, o: &Point2) -> Point2 {
        Point2::new(&self.x + &o.x, &self.y + &o.y)
    }

    pub fn sub(&self, o: &Point2) -> Point2 {
        Point2::new(&self.x - &o.x, &self.y - &o.y)
    }

    pub fn div_int(&self, k: i64) -> Point2 {
        Point2::new(self.x.div_int(k), self.y.div_int(k))
    }

    /// Euclidean norm.
    pub fn norm(&self) -> IntervalReal {
        (&self.x.sqr() + &self.y.sqr()).sqrt()
    }

    pub fn dist(&self, o: &Point2) -> IntervalReal {
        self.sub(o).norm()
    }

    pub fn round_to(&self, prec: u32) -> Point2 {
        Point2::new(self.x.round_to(prec), self.y.round_to(prec))
    }

    /// `(x, y)` midpoints; presentation only.
    pub fn to_f64(&self) -> (f64, f64) {
        (self.x.to_f64(), self.y.to_f64())
    }
}

/// Vertices and cumulative angles of the first `n_triangles` triangles.
///
/// `vertices[0]` is the outer end of the first spine, on the positive x
/// axis; `vertices[k]` is the outer end of the hypotenuse of triangle `k`.
/// `cumulative_angles[k]` is the polar angle of `vertices[k]`, so
/// `cumulative_angles[0] = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpiralGeometry {
    pub spec: SequenceSpec,
    pub n_triangles: u64,
    pub triangles: Vec<Triangle>,
    pub vertices: Vec<Point2>,
    pub cumulative_angles: Vec<IntervalReal>,
    pub precision_bits: u32,
}

impl SpiralGeometry {
    /// Corners of triangle `k` (1-based): origin, inner and outer vertex.
    pub fn triangle_corners(&self, k: usize) -> [Point2; 3] {
        [
            Point2::origin(self.precision_bits),
            self.vertices[k - 1].clone(),
            self.vertices[k].clone(),
        ]
    }
}

/// Working precision for `n` chained rotations. Interval wrapping in the
/// complex product loses about half a bit per step.
fn working_bits(prec: u32, n: u64) -> u32 {
    let extra = u32::try_from(n / 2).unwrap_or(u32::MAX / 2);
    prec.saturating_add(extra).saturating_add(32)
}

/// Unrounded construction at working precision `w`.
fn build(spec: &SequenceSpec, n: u64, w: u32) -> Result<(Vec<Triangle>, Vec<Point2>, Vec<IntervalReal>)> {
    let first = triangle(spec, 1)?;
    let mut tris = Vec::with_capacity(n as usize);
    let mut verts = Vec::with_capacity(n as usize + 1);
    let mut angles = Vec::with_capacity(n as usize + 1);
    verts.push(Point2::new(
        IntervalReal::sqrt_of(&first.adjacent_radicand, w),
        IntervalReal::zero(w),
    ));
    angles.push(IntervalReal::zero(w));
    for k in 1..=n {
        let t = if k == 1 { first.clone() } else { triangle(spec, k)? };
        let tan = tan_angle(spec, k, w)?;
        let p = verts.last().expect("non-empty");
        // multiply by (1 + i tan): the new leg is perpendicular to the spine
        let next = Point2::new(&p.x - &(&p.y * &tan), &p.y + &(&p.x * &tan));
        let theta = angles.last().expect("non-empty") + &tan.atan();
        verts.push(next);
        angles.push(theta);
        tris.push(t);
    }
    Ok((tris, verts, angles))
}

/// Build the spiral of `n_triangles` triangles.
pub fn geometry(spec: &SequenceSpec, n_triangles: u64, precision_bits: u32) -> Result<SpiralGeometry> {
    if n_triangles < 1 {
        return Err(Error::invalid("geometry needs at least one triangle"));
    }
    let w = working_bits(precision_bits, n_triangles);
    let (triangles, verts, angles) = build(spec, n_triangles, w)?;
    let cumulative_angles: Vec<_> = angles.iter().map(|a| a.round_to(precision_bits)).collect();
    if cumulative_angles.windows(2).any(|p| p[0].lt(&p[1]) != Some(true)) {
        return Err(Error::PrecisionExhausted {
            what: "strictly increasing cumulative angles".into(),
            cap_bits: w,
        });
    }
    Ok(SpiralGeometry {
        spec: spec.clone(),
        n_triangles,
        triangles,
        vertices: verts.iter().map(|v| v.round_to(precision_bits)).collect(),
        cumulative_angles,
        precision_bits,
    })
}

/// Smallest `m` with `theta_1 + ... + theta_m >= 2 pi k`.
pub fn windings_count(spec: &SequenceSpec, revolutions: u64, precision_bits: u32) -> Result<u64> {
    let policy = PrecisionPolicy::new(precision_bits, crate::exact_seq::DEFAULT_PRECISION_CAP);
    windings_count_with(spec, revolutions, &policy, MAX_WINDING_TRIANGLES)
}

/// [`windings_count`] with explicit precision schedule and triangle limit.
///
/// Each comparison against `2 pi k` is decided by interval bounds. If one is
/// undecided the whole prefix sum is redone at the next precision.
pub fn windings_count_with(
    spec: &SequenceSpec,
    revolutions: u64,
    policy: &PrecisionPolicy,
    max_triangles: u64,
) -> Result<u64> {
    if revolutions < 1 {
        return Err(Error::invalid("revolutions must be >= 1"));
    }
    let what = format!("windings_count({spec}, {revolutions})");
    let (m, _) = policy.refine(&what, |p| {
        let w = p + 40;
        let target = pi(w).mul_int(2 * revolutions);
        let mut sum = IntervalReal::zero(w);
        for m in 1..=max_triangles {
            sum = &sum + &tan_angle(spec, m, w)?.atan();
            match sum.ge(&target) {
                Some(true) => return Ok(Some(m)),
                Some(false) => {}
                None => return Ok(None),
            }
        }
        Err(Error::CapExceeded {
            terms: format!("more than {max_triangles} triangles"),
            cap: max_triangles,
        })
    })?;
    Ok(m)
}

/// Centroids `c_1 .. c_n` of the first `n` triangles and the chain length
/// `d_n = |c_2 - c_1| + ... + |c_n - c_{n-1}|`.
pub fn centroid_chain(spec: &SequenceSpec, n: u64, precision_bits: u32) -> Result<(Vec<Point2>, IntervalReal)> {
    let (centroids, mut d) = centroid_walk(spec, n, precision_bits)?;
    Ok((centroids, d.pop().expect("n >= 2")))
}

/// The partial chain lengths `d_2, d_3, ..., d_n`.
pub fn centroid_distances(spec: &SequenceSpec, n: u64, precision_bits: u32) -> Result<Vec<IntervalReal>> {
    Ok(centroid_walk(spec, n, precision_bits)?.1)
}

fn centroid_walk(spec: &SequenceSpec, n: u64, precision_bits: u32) -> Result<(Vec<Point2>, Vec<IntervalReal>)> {
    if n < 2 {
        return Err(Error::invalid("centroid chain needs n >= 2"));
    }
    let w = working_bits(precision_bits, n) + 8;
    let (_, verts, _) = build(spec, n, w)?;
    // the third corner is the origin
    let centroids: Vec<Point2> = verts.windows(2).map(|v| v[0].add(&v[1]).div_int(3)).collect();
    let mut d = IntervalReal::zero(w);
    let mut partial = Vec::with_capacity(centroids.len() - 1);
    for c in centroids.windows(2) {
        d = &d + &c[1].dist(&c[0]);
        partial.push(d.round_to(precision_bits));
    }
    Ok((centroids.iter().map(|c| c.round_to(precision_bits)).collect(), partial))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_seq::BigNat;

    #[test]
    fn radii_match_hypotenuses() {
        for spec in [SequenceSpec::fibonacci(), SequenceSpec::ClassicTheodorus] {
            let g = geometry(&spec, 40, 96).unwrap();
            for (k, t) in g.triangles.iter().enumerate() {
                let r = g.vertices[k + 1].norm();
                let want = IntervalReal::sqrt_of(&t.hypotenuse_radicand, 96);
                assert!(r.overlaps(&want), "{spec} k={}", k + 1);
            }
        }
    }

    #[test]
    fn classic_radii_and_first_vertex() {
        let g = geometry(&SequenceSpec::ClassicTheodorus, 3, 64).unwrap();
        assert!(g.vertices[0].x.contains(&crate::exact_seq::Dyadic::one()));
        for k in 1..=3u32 {
            let want = IntervalReal::sqrt_of(&BigNat::from(k + 1), 64);
            assert!(g.vertices[k as usize].norm().overlaps(&want));
        }
    }

    #[test]
    fn ten_triangles_pass_one_turn() {
        let g = geometry(&SequenceSpec::fibonacci(), 10, 64).unwrap();
        let two_pi = pi(64).mul_int(2);
        assert_eq!(g.cumulative_angles[10].gt(&two_pi), Some(true));
        assert_eq!(g.cumulative_angles[9].lt(&two_pi), Some(true));
        assert_eq!(windings_count(&SequenceSpec::fibonacci(), 1, 64).unwrap(), 10);
    }

    #[test]
    fn classic_centroid_d2() {
        let (_, d) = centroid_chain(&SequenceSpec::ClassicTheodorus, 2, 128).unwrap();
        // sqrt(2 + sqrt 2) / 3
        let two = IntervalReal::from_int(2, 160);
        let want = (&two + &two.sqrt()).sqrt().div_int(3);
        assert!(d.overlaps(&want));
    }
}
