//! Fractional derivatives in closed form: the Riemann–Liouville power rule,
//! the `α!` self-derivative, and the half-integer-order derivatives of
//! `(1−x)^(−1)` in their ₂F₁ forms together with the regularized value at 0.
//!
//! The order window `m − 1 < α ≤ m` comes from the defining convolution
//! integrals; only the closed forms are evaluated here. The ₂F₁ forms keep
//! `m` as an explicit parameter, with `m = n + 1` the canonical choice for
//! `α = n + 1/2`.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::error::invalid;
use crate::exact::{
    factorial, gamma_coeff_double_factorial, jet_nth_derivative_at_zero, ratio,
    series_reciprocal_one_minus_x, HalfIntValue,
};
use crate::special::{
    factorial_numeric, gamma_exact, gamma_half_minus, gamma_value, half_factorial, hyp2f1_series,
    Estimate, GammaArg, Hyp2F1Params,
};
use crate::{Error, Result};

const GAMMA_TOL: f64 = 1e-12;
const SERIES_TOL: f64 = 1e-16;

/// A derivative order `α > 0` with its integer ceiling window `m − 1 < α ≤ m`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FracOrder {
    alpha: f64,
    m: u32,
}

impl FracOrder {
    pub fn new(alpha: f64, m: u32) -> Result<Self> {
        if !(alpha > 0.0 && alpha.is_finite()) {
            return Err(invalid("alpha", alpha, "order must be positive"));
        }
        if !((m as f64) - 1.0 < alpha && alpha <= m as f64) {
            return Err(invalid("m", m, "order window requires m - 1 < alpha <= m"));
        }
        Ok(FracOrder { alpha, m })
    }

    /// The smallest admissible `m`, i.e. `⌈α⌉`.
    pub fn canonical(alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha.is_finite()) {
            return Err(invalid("alpha", alpha, "order must be positive"));
        }
        Self::new(alpha, alpha.ceil() as u32)
    }

    /// `α = n + 1/2` with `m = n + 1`.
    pub fn half_integer(n: u32) -> Self {
        FracOrder {
            alpha: n as f64 + 0.5,
            m: n + 1,
        }
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn m(&self) -> u32 {
        self.m
    }
}

/// A value known exactly or only numerically.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FracValue {
    Exact(HalfIntValue),
    Numeric(Estimate),
}

impl FracValue {
    pub fn to_f64(&self) -> f64 {
        match self {
            FracValue::Exact(v) => v.to_f64(),
            FracValue::Numeric(e) => e.value,
        }
    }

    pub fn exact(&self) -> Option<&HalfIntValue> {
        match self {
            FracValue::Exact(v) => Some(v),
            FracValue::Numeric(_) => None,
        }
    }

    pub fn error_estimate(&self) -> f64 {
        match self {
            FracValue::Exact(_) => 0.0,
            FracValue::Numeric(e) => e.error_estimate,
        }
    }
}

/// `Γ(θ+1)/Γ(θ−α+1)`, the coefficient of the power rule.
pub fn power_rule_coefficient(theta: f64, order: FracOrder) -> Result<FracValue> {
    if !(theta > -1.0 && theta.is_finite()) {
        return Err(invalid("theta", theta, "power rule requires theta > -1"));
    }
    let lower = theta - order.alpha + 1.0;
    if let GammaArg::Pole(_) = GammaArg::classify(lower) {
        return Err(Error::GammaPole { arg: lower });
    }
    let upper = theta + 1.0;
    if let (Some(num), Some(den)) = (gamma_exact(upper)?, gamma_exact(lower)?) {
        return Ok(FracValue::Exact(&num / &den));
    }
    let num = gamma_value(upper, GAMMA_TOL)?;
    let den = gamma_value(lower, GAMMA_TOL)?;
    let value = num.value / den.value;
    let rel = num.error_estimate / num.value.abs() + den.error_estimate / den.value.abs();
    Ok(FracValue::Numeric(Estimate {
        value,
        error_estimate: value.abs() * rel,
    }))
}

/// `D^α t^θ = Γ(θ+1)/Γ(θ−α+1) · t^(θ−α)`.
pub fn frac_derivative_power(theta: f64, order: FracOrder, t: f64) -> Result<f64> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(invalid("t", t, "t must be positive"));
    }
    let coef = power_rule_coefficient(theta, order)?;
    Ok(coef.to_f64() * t.powf(theta - order.alpha))
}

/// `d^α t^α/dt^α = α!`.
pub fn alpha_self_derivative(alpha: f64) -> Result<FracValue> {
    if !(alpha > -1.0 && alpha.is_finite()) {
        return Err(invalid("alpha", alpha, "alpha! requires alpha > -1"));
    }
    match GammaArg::classify(alpha + 1.0) {
        GammaArg::Integer(k) => Ok(FracValue::Exact(HalfIntValue::rational(
            BigRational::from_integer(factorial(k - 1)),
        ))),
        // α = n + 1/2 for n ≥ 0
        GammaArg::HalfPlus(n) if n >= 1 => Ok(FracValue::Exact(half_factorial(n - 1))),
        // α = −1/2
        GammaArg::HalfPlus(_) => Ok(FracValue::Exact(HalfIntValue::times_sqrt_pi(ratio(1, 1)))),
        _ => Ok(FracValue::Numeric(factorial_numeric(alpha, GAMMA_TOL)?)),
    }
}

/// `dᵏ(1−x)^(−1)/dxᵏ` at 0, read off the truncated series of `1/(1−x)`.
pub fn kth_derivative_reciprocal(k: u32) -> BigInt {
    let series = series_reciprocal_one_minus_x(k as usize);
    let d = jet_nth_derivative_at_zero(&series, k as usize).expect("series has order k");
    debug_assert!(d.is_integer());
    d.to_integer()
}

fn check_unit_interval(x: f64) -> Result<()> {
    if x > 0.0 && x < 1.0 {
        Ok(())
    } else {
        Err(invalid("x", x, "x must lie in (0, 1)"))
    }
}

fn third_parameter(n: u32, m: u32) -> Result<f64> {
    if m == 0 {
        return Err(invalid("m", m, "m must be a positive integer"));
    }
    // m − n + 1/2 is a half-integer, so never a series pole
    Ok(m as f64 - n as f64 + 0.5)
}

/// Riemann–Liouville form
/// `x^(−n−1/2)/Γ(1/2−n) · ₂F₁(1, 1; m−n+1/2; x)`.
///
/// Diverges like `x^(−n−1/2)` as `x → 0⁺`.
pub fn rl_half_derivative(n: u32, m: u32, x: f64) -> Result<f64> {
    check_unit_interval(x)?;
    let c = third_parameter(n, m)?;
    let f = hyp2f1_series(Hyp2F1Params::new(1.0, 1.0, c, x), SERIES_TOL)?;
    let inv_gamma = gamma_half_minus(n).recip().expect("Γ(1/2−n) is nonzero").to_f64();
    Ok(x.powf(-(n as f64) - 0.5) * inv_gamma * f.value)
}

/// `1/Γ(1/2−n)`, the limit of `x^(n+1/2)` times the Riemann–Liouville form.
pub fn rl_asymptotic_limit(n: u32) -> HalfIntValue {
    gamma_half_minus(n).recip().expect("Γ(1/2−n) is nonzero")
}

/// `Γ(m+1)/Γ(m−n+1/2)` in exact form.
pub fn caputo_prefactor(n: u32, m: u32) -> Result<HalfIntValue> {
    let c = third_parameter(n, m)?;
    let num = HalfIntValue::rational(BigRational::from_integer(factorial(m as u64)));
    let den = gamma_exact(c)?.expect("half-integer gamma is exact");
    Ok(&num / &den)
}

/// Caputo form
/// `Γ(m+1)/Γ(m−n+1/2) · x^(m−n−1/2) · ₂F₁(m+1, 1; m−n+1/2; x)`.
///
/// Tends to 0 as `x → 0⁺` whenever `m > n + 1/2`.
pub fn caputo_half_derivative(n: u32, m: u32, x: f64) -> Result<f64> {
    check_unit_interval(x)?;
    let c = third_parameter(n, m)?;
    let f = hyp2f1_series(Hyp2F1Params::new(m as f64 + 1.0, 1.0, c, x), SERIES_TOL)?;
    let prefactor = caputo_prefactor(n, m)?.to_f64();
    Ok(prefactor * x.powf(m as f64 - n as f64 - 0.5) * f.value)
}

/// `D^((2n+1)/2)(1−x)^(−1)` at 0, regularized as `(2n+1)/2 · γ₂ₙ·√π`.
pub fn regularized_half_derivative_at_zero(n: u32) -> HalfIntValue {
    let step = ratio(2 * n as i64 + 1, 2);
    HalfIntValue::times_sqrt_pi(step * gamma_coeff_double_factorial(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    const SQRT_PI: f64 = 1.772_453_850_905_516;

    fn int(v: i64) -> HalfIntValue {
        HalfIntValue::rational(ratio(v, 1))
    }

    #[test]
    fn order_window() {
        assert!(FracOrder::new(0.5, 1).is_ok());
        assert!(FracOrder::new(1.0, 1).is_ok());
        assert!(FracOrder::new(1.5, 1).is_err());
        assert!(FracOrder::new(0.5, 2).is_err());
        assert!(FracOrder::new(0.0, 0).is_err());
        assert_eq!(FracOrder::canonical(2.5).unwrap().m(), 3);
        assert_eq!(FracOrder::half_integer(2), FracOrder::canonical(2.5).unwrap());
    }

    #[test]
    fn power_rule_examples() {
        let first = FracOrder::canonical(1.0).unwrap();
        assert_eq!(frac_derivative_power(2.0, first, 3.0).unwrap(), 6.0);
        assert_eq!(frac_derivative_power(1.0, first, 7.3).unwrap(), 1.0);
        let half = FracOrder::canonical(0.5).unwrap();
        let v = frac_derivative_power(0.5, half, 2.0).unwrap();
        assert!((v - 0.5 * SQRT_PI).abs() < 1e-15);
        assert_eq!(
            power_rule_coefficient(0.5, half).unwrap().exact(),
            Some(&half_factorial(0))
        );
    }

    #[test]
    fn power_rule_rejects_poles() {
        let first = FracOrder::canonical(1.0).unwrap();
        assert!(matches!(
            frac_derivative_power(0.0, first, 1.0),
            Err(Error::GammaPole { .. })
        ));
        assert!(frac_derivative_power(-1.5, first, 1.0).is_err());
    }

    #[test]
    fn power_rule_numeric_path() {
        // D^0.3 t^0.7 = Γ(1.7)/Γ(1.4)·t^0.4; Γ(1.7) = 0.908638732853290, Γ(1.4) = 0.887263817503075
        let order = FracOrder::canonical(0.3).unwrap();
        let c = power_rule_coefficient(0.7, order).unwrap();
        assert!(c.exact().is_none());
        assert!((c.to_f64() - 0.908_638_732_853_290 / 0.887_263_817_503_075).abs() < 1e-10);
    }

    #[test]
    fn integer_power_rule_is_exact() {
        for k in 1..=10u32 {
            let order = FracOrder::canonical(k as f64).unwrap();
            for theta in k..=10u32 {
                let c = power_rule_coefficient(theta as f64, order).unwrap();
                let expected = BigRational::from_integer(
                    factorial(theta as u64) / factorial((theta - k) as u64),
                );
                assert_eq!(c.exact(), Some(&HalfIntValue::rational(expected)));
            }
        }
    }

    #[test]
    fn self_derivative_examples() {
        assert_eq!(alpha_self_derivative(0.0).unwrap().exact(), Some(&int(1)));
        assert_eq!(alpha_self_derivative(3.0).unwrap().exact(), Some(&int(6)));
        assert_eq!(
            alpha_self_derivative(2.5).unwrap().exact(),
            Some(&HalfIntValue::times_sqrt_pi(ratio(15, 8)))
        );
        assert_eq!(
            alpha_self_derivative(-0.5).unwrap().exact(),
            Some(&HalfIntValue::times_sqrt_pi(ratio(1, 1)))
        );
        let v = alpha_self_derivative(0.3).unwrap();
        // 0.3! = Γ(1.3) = 0.897470696306277
        assert!((v.to_f64() - 0.897_470_696_306_277).abs() < 1e-10);
        assert!(alpha_self_derivative(-1.0).is_err());
    }

    #[test]
    fn reciprocal_derivatives() {
        assert_eq!(kth_derivative_reciprocal(0), BigInt::from(1));
        assert_eq!(kth_derivative_reciprocal(3), BigInt::from(6));
        assert_eq!(kth_derivative_reciprocal(7), BigInt::from(5040));
    }

    #[test]
    fn rl_examples() {
        let v = rl_half_derivative(0, 1, 1e-6).unwrap();
        assert!((v - 1e3 / SQRT_PI).abs() < 1e-2, "{v}");
        let ratio = rl_half_derivative(0, 1, 1e-4).unwrap() / rl_half_derivative(0, 1, 1e-6).unwrap();
        assert!((ratio - 0.1).abs() < 1e-4);
        assert!(rl_half_derivative(0, 1, 0.0).is_err());
        assert!(rl_half_derivative(0, 1, 1.0).is_err());
        assert!(rl_half_derivative(0, 0, 0.5).is_err());
    }

    #[test]
    fn caputo_examples() {
        let v = caputo_half_derivative(0, 1, 1e-6).unwrap();
        let lead = 2.0 / SQRT_PI * 1e-3;
        assert!(((v - lead) / lead).abs() < 1e-5, "{v}");
        let ratio =
            caputo_half_derivative(0, 1, 1e-4).unwrap() / caputo_half_derivative(0, 1, 1e-6).unwrap();
        assert!((ratio - 10.0).abs() < 1e-2);
        assert!(caputo_half_derivative(1, 2, -0.1).is_err());
    }

    #[test]
    fn regularized_values() {
        assert_eq!(regularized_half_derivative_at_zero(0), HalfIntValue::times_sqrt_pi(ratio(1, 2)));
        assert_eq!(regularized_half_derivative_at_zero(1), HalfIntValue::times_sqrt_pi(ratio(3, 4)));
        assert_eq!(regularized_half_derivative_at_zero(2), HalfIntValue::times_sqrt_pi(ratio(15, 8)));
        for n in 0..=30 {
            assert_eq!(regularized_half_derivative_at_zero(n), half_factorial(n));
        }
    }
}
