use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::invalid;
use crate::exact::{gamma_coeff_product, gamma_coeff_recurrence, ratio, HalfIntValue};
use crate::Result;

/// `Γ(n + 1/2) = γ₂ₙ·√π`.
pub fn gamma_half_plus(n: u32) -> HalfIntValue {
    HalfIntValue::times_sqrt_pi(gamma_coeff_recurrence(n))
}

/// `Γ(1/2 − n) = (−1)ⁿ·√π/γ₂ₙ`.
pub fn gamma_half_minus(n: u32) -> HalfIntValue {
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    HalfIntValue::times_sqrt_pi(ratio(sign, 1) / gamma_coeff_product(n))
}

/// `(n + 1/2)! = (2n+1)/2 · γ₂ₙ·√π`.
pub fn half_factorial(n: u32) -> HalfIntValue {
    let step = ratio(2 * n as i64 + 1, 2);
    HalfIntValue::times_sqrt_pi(step * gamma_coeff_product(n))
}

/// Both sides of `Γ(p+1) = p·Γ(p)` at the half-integer `p = n + 1/2`.
///
/// Rejects any `p` that is not of that form.
pub fn gamma_recurrence_check(p: f64) -> Result<(HalfIntValue, HalfIntValue)> {
    let n = p - 0.5;
    if !(n >= 0.0 && n.fract() == 0.0 && n <= u32::MAX as f64) {
        return Err(invalid("p", p, "expected a half-integer n + 1/2 with n >= 0"));
    }
    let n = n as u32;
    let p_exact = BigRational::new(BigInt::from(2 * n as u64 + 1), BigInt::from(2));
    let lhs = gamma_half_plus(n + 1);
    let rhs = gamma_half_plus(n).scale(&p_exact);
    Ok((lhs, rhs))
}
