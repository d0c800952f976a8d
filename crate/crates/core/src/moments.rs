//! Gaussian moments `I₂ₙ(α) = ∫ x^(2n) e^(−αx²) dx` over the real line.
//!
//! Three routes: the closed form `γ₂ₙ·√π/α^((2n+1)/2)`, the gamma form
//! `Γ((2n+1)/2)/α^((2n+1)/2)`, and adaptive quadrature as an independent
//! oracle.

use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::error::invalid;
use crate::exact::{gamma_coeff_product, rational_ln, rational_to_f64, RationalRepr};
use crate::quad::{integrate, Tolerance, DEFAULT_PANEL_BUDGET};
use crate::special::gamma_half_plus;
use crate::{Error, Result};

/// Smallest tolerance the quadrature route accepts.
pub const MOMENT_TOL_FLOOR: f64 = 1e-14;

const SQRT_PI: f64 = 1.772_453_850_905_516;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentQuery {
    n: u32,
    alpha: f64,
}

impl MomentQuery {
    pub fn new(n: u32, alpha: f64) -> Result<Self> {
        check_alpha(alpha)?;
        Ok(MomentQuery { n, alpha })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// `−(2n+1)/2`.
    pub fn alpha_exponent(&self) -> HalfExponent {
        HalfExponent::from_twice(-(2 * self.n as i64 + 1))
    }
}

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha > 0.0 && alpha.is_finite() {
        Ok(())
    } else {
        Err(invalid("alpha", alpha, "alpha must be a positive finite number"))
    }
}

/// An integer or half-integer, stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HalfExponent {
    twice: i64,
}

impl HalfExponent {
    pub fn from_twice(twice: i64) -> Self {
        HalfExponent { twice }
    }

    pub fn twice(&self) -> i64 {
        self.twice
    }

    pub fn to_f64(&self) -> f64 {
        self.twice as f64 / 2.0
    }
}

impl fmt::Display for HalfExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice % 2 == 0 {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl Serialize for HalfExponent {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MomentMethod {
    Closed,
    GammaForm,
    Quadrature,
}

impl fmt::Display for MomentMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MomentMethod::Closed => "closed",
            MomentMethod::GammaForm => "gamma-form",
            MomentMethod::Quadrature => "quadrature",
        })
    }
}

/// One evaluated moment. The quadrature route carries no exact coefficient,
/// so that it stays independent of the exact arithmetic it is checked against.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MomentResult {
    #[serde(serialize_with = "serialize_opt_rational")]
    pub exact_coef: Option<BigRational>,
    pub alpha_exponent: HalfExponent,
    pub float_value: f64,
    pub method: MomentMethod,
    pub error_estimate: f64,
}

fn serialize_opt_rational<S: Serializer>(
    r: &Option<BigRational>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    r.as_ref().map(RationalRepr::from).serialize(s)
}

/// `coef·√π·α^exponent`, rounded once per factor when everything stays in
/// range, otherwise assembled in log space.
fn render(coef: &BigRational, alpha: f64, exponent: HalfExponent) -> f64 {
    if coef.is_zero() {
        return 0.0;
    }
    let c = rational_to_f64(coef);
    let scale = alpha.powf(exponent.to_f64());
    let direct = c * SQRT_PI * scale;
    let in_range = |x: f64| x.is_finite() && x.abs() >= f64::MIN_POSITIVE;
    if in_range(c) && in_range(scale) && in_range(direct) {
        return direct;
    }
    let ln = rational_ln(coef) + 0.5 * std::f64::consts::PI.ln() + exponent.to_f64() * alpha.ln();
    ln.exp()
}

pub fn moment_closed(query: MomentQuery) -> MomentResult {
    let coef = gamma_coeff_product(query.n);
    let exponent = query.alpha_exponent();
    MomentResult {
        float_value: render(&coef, query.alpha, exponent),
        exact_coef: Some(coef),
        alpha_exponent: exponent,
        method: MomentMethod::Closed,
        error_estimate: 0.0,
    }
}

/// Evaluates `Γ((2n+1)/2)/α^((2n+1)/2)` using the exact half-integer gamma.
pub fn moment_gamma_form(query: MomentQuery) -> MomentResult {
    let gamma = gamma_half_plus(query.n);
    debug_assert_eq!(gamma.sqrt_pi_power(), 1);
    let coef = gamma.coef().clone();
    let exponent = query.alpha_exponent();
    MomentResult {
        float_value: render(&coef, query.alpha, exponent),
        exact_coef: Some(coef),
        alpha_exponent: exponent,
        method: MomentMethod::GammaForm,
        error_estimate: 0.0,
    }
}

/// Bound on `2∫_T^∞ t^(2n) e^(−t²) dt`, valid once `T² ≥ max(2n, 1)`.
fn doubled_tail_bound(n: u32, t_cut: f64) -> f64 {
    2.0 * t_cut.powf(2.0 * n as f64 - 1.0) * (-t_cut * t_cut).exp()
}

fn scaled_integrand(n: u32) -> impl Fn(f64) -> f64 {
    move |t: f64| {
        if n <= 50 {
            t.powi(2 * n as i32) * (-t * t).exp()
        } else {
            (2.0 * n as f64 * t.ln() - t * t).exp()
        }
    }
}

/// Adaptive quadrature of the moment.
///
/// With `t = √α·x` the moment is `α^(−(2n+1)/2)·J` where
/// `J = 2∫₀^∞ t^(2n) e^(−t²) dt`. The upper limit `T` is raised until the
/// analytic tail bound drops below `tol/2`, then `[0, T]` is refined until
/// the estimated error is below `tol/2·max(1, J)`. The reported error is the
/// sum of both contributions, scaled back to the original variable.
pub fn moment_quadrature(query: MomentQuery, tol: f64) -> Result<MomentResult> {
    if !(tol >= MOMENT_TOL_FLOOR) {
        return Err(Error::ToleranceTooSmall {
            tol,
            floor: MOMENT_TOL_FLOOR,
        });
    }
    let n = query.n;
    let mut t_cut = (2.0 * n as f64).max(1.0).sqrt();
    while doubled_tail_bound(n, t_cut) >= tol / 2.0 {
        t_cut += 0.25;
    }
    let tail = doubled_tail_bound(n, t_cut);
    let half_line = integrate(
        scaled_integrand(n),
        0.0,
        t_cut,
        Tolerance::mixed(tol / 4.0),
        DEFAULT_PANEL_BUDGET,
    )?;
    let exponent = query.alpha_exponent();
    let scale = query.alpha.powf(exponent.to_f64());
    Ok(MomentResult {
        exact_coef: None,
        alpha_exponent: exponent,
        float_value: 2.0 * half_line.value * scale,
        method: MomentMethod::Quadrature,
        error_estimate: (2.0 * half_line.error_estimate + tail) * scale,
    })
}

/// The full-line moment of `x^(2k+1)`, zero by antisymmetry.
pub fn moment_odd(k: u32, alpha: f64) -> Result<MomentResult> {
    check_alpha(alpha)?;
    Ok(MomentResult {
        exact_coef: Some(BigRational::zero()),
        alpha_exponent: HalfExponent::from_twice(-(2 * k as i64 + 2)),
        float_value: 0.0,
        method: MomentMethod::Closed,
        error_estimate: 0.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    fn q(n: u32, alpha: f64) -> MomentQuery {
        MomentQuery::new(n, alpha).unwrap()
    }

    #[test]
    fn rejects_nonpositive_alpha() {
        assert!(MomentQuery::new(1, 0.0).is_err());
        assert!(MomentQuery::new(1, -2.0).is_err());
        assert!(MomentQuery::new(1, f64::NAN).is_err());
        assert!(moment_odd(1, 0.0).is_err());
    }

    #[test]
    fn closed_form_examples() {
        let r = moment_closed(q(0, 1.0));
        assert_eq!(r.exact_coef, Some(ratio(1, 1)));
        assert!((r.float_value - 1.772_453_850_9).abs() < 1e-10);
        let r = moment_closed(q(1, 1.0));
        assert_eq!(r.exact_coef, Some(ratio(1, 2)));
        assert_eq!(r.alpha_exponent.to_string(), "-3/2");
        let r = moment_closed(q(3, 2.0));
        assert_eq!(r.exact_coef, Some(ratio(15, 8)));
        let oracle = moment_quadrature(q(3, 2.0), 1e-12).unwrap();
        assert!((r.float_value - oracle.float_value).abs() < 1e-11);
    }

    #[test]
    fn gamma_form_examples() {
        let r = moment_gamma_form(q(0, 1.0));
        assert_eq!(r.exact_coef, Some(ratio(1, 1)));
        let r = moment_gamma_form(q(2, 1.0));
        assert_eq!(r.exact_coef, Some(ratio(3, 4)));
        let g = crate::special::gamma_numeric(2.5, 1e-12).unwrap();
        assert!((r.float_value - g.value).abs() < 1e-11);
        let r = moment_gamma_form(q(1, 4.0));
        assert!((r.float_value - SQRT_PI / 16.0).abs() < 1e-15);
        let oracle = moment_quadrature(q(1, 4.0), 1e-12).unwrap();
        assert!((r.float_value - oracle.float_value).abs() < 1e-12);
    }

    #[test]
    fn quadrature_examples() {
        let r = moment_quadrature(q(0, 1.0), 1e-10).unwrap();
        assert!((r.float_value - SQRT_PI).abs() < 1e-10);
        assert!(r.error_estimate <= 1e-10 * r.float_value.max(1.0));
        assert_eq!(r.exact_coef, None);
        let r = moment_quadrature(q(5, 1.0), 1e-10).unwrap();
        let expected = 945.0 / 32.0 * SQRT_PI;
        assert!((r.float_value - expected).abs() < 1e-10 * expected);
        let r = moment_quadrature(q(2, 0.5), 1e-10).unwrap();
        let expected = 0.75 * SQRT_PI * 0.5f64.powf(-2.5);
        assert!((r.float_value - expected).abs() < 1e-10 * expected);
    }

    #[test]
    fn quadrature_tolerance_floor() {
        assert!(matches!(
            moment_quadrature(q(1, 1.0), 1e-15),
            Err(Error::ToleranceTooSmall { .. })
        ));
    }

    #[test]
    fn odd_moments_vanish() {
        for (k, alpha) in [(1, 1.0), (3, 2.0), (0, 5.0)] {
            let r = moment_odd(k, alpha).unwrap();
            assert_eq!(r.float_value, 0.0);
            assert_eq!(r.error_estimate, 0.0);
            assert_eq!(r.exact_coef, Some(BigRational::zero()));
        }
    }

    #[test]
    fn large_n_uses_log_rendering() {
        // γ₆₀₀ alone overflows f64; the moment at α = 1000 does not
        let r = moment_closed(q(300, 1000.0));
        assert!(r.float_value.is_finite() && r.float_value > 0.0);
        let ln_expected = rational_ln(r.exact_coef.as_ref().unwrap())
            + 0.5 * std::f64::consts::PI.ln()
            - 300.5 * 1000f64.ln();
        assert!((r.float_value.ln() - ln_expected).abs() < 1e-12);
    }

    #[test]
    fn scaling_law() {
        for n in 0..=10 {
            let base = moment_closed(q(n, 1.0)).float_value;
            for alpha in [0.5f64, 1.0, 2.0, 10.0] {
                let scaled = base * alpha.powf(-(2.0 * n as f64 + 1.0) / 2.0);
                let direct = moment_closed(q(n, alpha)).float_value;
                assert!(((direct - scaled) / scaled).abs() < 1e-14, "n={n} alpha={alpha}");
            }
        }
    }

    #[test]
    fn json_shape() {
        let r = moment_closed(q(2, 1.0));
        let s = serde_json::to_string(&r).unwrap();
        assert!(s.starts_with(r#"{"exact_coef":{"num":"3","den":"4"},"alpha_exponent":"-5/2","#), "{s}");
        assert!(s.contains(r#""method":"closed""#));
    }
}
