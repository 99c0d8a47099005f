//! Exact integer sequences and certified interval arithmetic.

mod adaptive;
mod constants;
mod dyadic;
mod elementary;
mod interval;
mod sequence;

pub use adaptive::{PrecisionPolicy, DEFAULT_PRECISION_CAP};
pub use constants::{
    abs_beta, beta, binet_residual, c_perimeter, constant, constant_by_name, phi, pi, sqrt5, sqrt_phi, Constant,
};
pub use dyadic::{Dyadic, Rounding};
pub use interval::{IntervalReal, SqrtSum};
pub use sequence::{fib, fib_pair, isqrt, lucas, BigNat, SequenceSpec};
