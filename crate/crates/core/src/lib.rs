//! Theodorus-type spirals built from additive integer recurrences.
//!
//! The crate constructs the spiral of right triangles whose sides are square
//! roots of consecutive sequence terms (Fibonacci by default, any additive
//! recurrence, or the classic `a_n = n` spiral), evaluates every derived
//! quantity in certified interval arithmetic, and checks a registry of
//! statements about those quantities.
//!
//! * [`exact_seq`]: big-integer sequences and [`IntervalReal`].
//! * [`spiral_engine`]: triangles, angles, vertices, windings, centroids.
//! * [`metrics`]: areas, perimeters, Hahn areas, circles, series.
//! * [`verifier`]: claim registry and reports.
//! * [`export_render`]: SVG, JSON and CSV output.
//! * [`cli`]: the command-line front end.

pub mod cli;
pub mod error;
pub mod exact_seq;
pub mod export_render;
pub mod metrics;
pub mod spiral_engine;
pub mod verifier;

pub use error::{Error, Result};
pub use exact_seq::{BigNat, IntervalReal, SequenceSpec};
