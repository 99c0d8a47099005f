//! Scalar quantities of the spiral: areas and their sums, perimeters, Hahn
//! areas, generalized harmonic numbers, circumcircles and incircles, the
//! generalized area products and square-root sums, series for the limiting
//! angle, winding gaps and the golden-ratio summation identities.
//!
//! Everything is returned as a certified [`IntervalReal`](crate::IntervalReal).
//! Where a sum of many terms is needed, exact fixed-point accumulation
//! ([`SqrtSum`](crate::exact_seq::SqrtSum)) is used so the result does not
//! depend on summation order.

mod areas;
mod circles;
mod generalized;
mod hahn;
mod harmonic;
mod identities;
mod perimeter;

pub use areas::{area_ratio, area_sum_deviation, area_sum_deviations, triangle_area, AreaValue};
pub use circles::{
    circle_metrics, circle_metrics_of, circumcircle_from_points, incircle_ratio_limits, incircle_ratios, CircleMetrics,
};
pub use generalized::{
    arctan_beta_partial_sums, arctan_beta_series, arctan_beta_series_as_displayed, generalized_area,
    generalized_area_limit, generalized_area_ratio, t_sum, t_sum_capped, t_sum_limit, winding_gap,
};
pub use hahn::{hahn_area, hahn_area_capped, hahn_bounds, hahn_ratio_limit, HahnArea, DEFAULT_TERM_CAP};
pub use harmonic::{harmonic_bounds, harmonic_bounds_check, harmonic_number, harmonic_term, rational_power, Exponent};
pub use identities::{corollary4_check, corollary4_upto, prop3_identity, prop3_sides, prop3_sides_upto, t_parity};
pub use perimeter::{
    external_perimeter, perimeter_deviation, perimeter_deviations, perimeter_ratio, spine_ratio, triangle_perimeter,
};

use crate::exact_seq::{BigNat, IntervalReal};

/// Bit length of `n`, as `u32`.
pub(crate) fn bits(n: &BigNat) -> u32 {
    u32::try_from(n.bits()).unwrap_or(u32::MAX / 4)
}

pub(crate) fn sqrt_big(n: &BigNat, prec: u32) -> IntervalReal {
    IntervalReal::sqrt_of(n, prec)
}
