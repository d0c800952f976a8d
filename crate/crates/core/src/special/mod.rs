//! Half-integer gamma and factorial values in exact form, the Euler-integral
//! gamma oracle, and the Gauss hypergeometric function ₂F₁.

mod gamma;
mod half;
mod hyp2f1;

pub use gamma::{
    factorial_numeric, gamma_exact, gamma_numeric, gamma_value, GammaArg, GAMMA_TOL_FLOOR,
};
pub use half::{gamma_half_minus, gamma_half_plus, gamma_recurrence_check, half_factorial};
pub use hyp2f1::{hyp2f1_integral, hyp2f1_series, Hyp2F1Params, SERIES_TERM_BUDGET};

use serde::{Deserialize, Serialize};

/// A numerical value with its estimated absolute error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Estimate {
    pub value: f64,
    pub error_estimate: f64,
}

impl Estimate {
    pub fn exact(value: f64) -> Self {
        Estimate {
            value,
            error_estimate: 0.0,
        }
    }
}
