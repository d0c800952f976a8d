//! Exact arithmetic: rationals, values of the form `r·(√π)^s`, truncated
//! power series, and the γ₂ₙ coefficient family.

mod gamma_coeff;
mod half_int;
mod rational;
mod series;

pub use gamma_coeff::{
    double_factorial, gamma_coeff_double_factorial, gamma_coeff_product, gamma_coeff_recurrence,
    gamma_coeff_via_jet, GammaCoefficient,
};
pub use half_int::HalfIntValue;
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use rational::{factorial, ratio, rational_ln, rational_to_f64, RationalRepr};
pub use series::{
    jet_nth_derivative_at_zero, series_reciprocal_one_minus_x, series_rsqrt_one_minus_x,
    PowerSeries,
};
