use serde::{Deserialize, Serialize};

use super::gamma::gamma_value;
use super::Estimate;
use crate::error::invalid;
use crate::quad::{integrate, Tolerance, DEFAULT_PANEL_BUDGET};
use crate::{Error, Result};

pub const SERIES_TERM_BUDGET: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Hyp2F1Params {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub z: f64,
}

impl Hyp2F1Params {
    pub fn new(a: f64, b: f64, c: f64, z: f64) -> Self {
        Hyp2F1Params { a, b, c, z }
    }
}

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x.fract() == 0.0
}

/// `₂F₁(a, b; c; z) = Σ (a)ₖ(b)ₖ/(c)ₖ · zᵏ/k!` for `|z| < 1`.
///
/// Terms come from the ratio recurrence. Summation stops once a term is both
/// smaller than `tol·|sum|` and smaller than its predecessor; that first
/// omitted term is the reported error.
pub fn hyp2f1_series(params: Hyp2F1Params, tol: f64) -> Result<Estimate> {
    let Hyp2F1Params { a, b, c, z } = params;
    if !(z.abs() < 1.0) {
        return Err(invalid("z", z, "the series requires |z| < 1"));
    }
    if is_nonpositive_integer(c) {
        return Err(invalid("c", c, "c must not be zero or a negative integer"));
    }
    if !(tol > 0.0) {
        return Err(invalid("tol", tol, "tolerance must be positive"));
    }
    let mut sum = 1.0;
    let mut term = 1.0f64;
    for k in 0..SERIES_TERM_BUDGET {
        let kf = k as f64;
        let next = term * (a + kf) * (b + kf) / ((c + kf) * (kf + 1.0)) * z;
        if next == 0.0 {
            return Ok(Estimate::exact(sum));
        }
        if next.abs() < tol * sum.abs() && next.abs() < term.abs() {
            return Ok(Estimate {
                value: sum,
                error_estimate: next.abs(),
            });
        }
        sum += next;
        term = next;
    }
    Err(Error::SeriesDiverged {
        terms: SERIES_TERM_BUDGET,
        z,
    })
}

/// Euler's integral representation
/// `Γ(c)/(Γ(b)Γ(c−b)) ∫₀¹ τ^(b−1)(1−τ)^(c−b−1)(1−zτ)^(−a) dτ`, valid for
/// `c > b > 0` and `z < 1`.
///
/// The interval is split at 1/2. An endpoint whose exponent is negative
/// (`b < 1` at 0, `c − b < 1` at 1) is handled by substituting
/// `τ = u^(1/b)` or `1 − τ = v^(1/(c−b))`, after which the integrand is
/// bounded.
pub fn hyp2f1_integral(params: Hyp2F1Params, tol: f64) -> Result<Estimate> {
    let Hyp2F1Params { a, b, c, z } = params;
    if !(b > 0.0 && c > b) {
        return Err(invalid("b", b, "the Euler integral requires c > b > 0"));
    }
    if !(z < 1.0) {
        return Err(invalid("z", z, "the Euler integral requires z < 1"));
    }
    if !(tol > 0.0) {
        return Err(invalid("tol", tol, "tolerance must be positive"));
    }
    let d = c - b;
    let gamma_tol = (tol / 10.0).max(super::GAMMA_TOL_FLOOR);
    let gc = gamma_value(c, gamma_tol)?;
    let gb = gamma_value(b, gamma_tol)?;
    let gd = gamma_value(d, gamma_tol)?;
    let prefactor = gc.value / (gb.value * gd.value);
    let prefactor_rel = gc.error_estimate / gc.value.abs()
        + gb.error_estimate / gb.value.abs()
        + gd.error_estimate / gd.value.abs();

    let kernel = move |tau: f64| (1.0 - z * tau).powf(-a);
    let piece_tol = Tolerance::mixed(tol / 4.0);

    let left = if b < 1.0 {
        let inv = 1.0 / b;
        integrate(
            |u: f64| {
                let tau = u.powf(inv);
                inv * (1.0 - tau).powf(d - 1.0) * kernel(tau)
            },
            0.0,
            0.5f64.powf(b),
            piece_tol,
            DEFAULT_PANEL_BUDGET,
        )?
    } else {
        integrate(
            |tau: f64| tau.powf(b - 1.0) * (1.0 - tau).powf(d - 1.0) * kernel(tau),
            0.0,
            0.5,
            piece_tol,
            DEFAULT_PANEL_BUDGET,
        )?
    };
    let right = if d < 1.0 {
        let inv = 1.0 / d;
        integrate(
            |v: f64| {
                let tau = 1.0 - v.powf(inv);
                inv * tau.powf(b - 1.0) * kernel(tau)
            },
            0.0,
            0.5f64.powf(d),
            piece_tol,
            DEFAULT_PANEL_BUDGET,
        )?
    } else {
        integrate(
            |tau: f64| tau.powf(b - 1.0) * (1.0 - tau).powf(d - 1.0) * kernel(tau),
            0.5,
            1.0,
            piece_tol,
            DEFAULT_PANEL_BUDGET,
        )?
    };

    let integral = left.value + right.value;
    let value = prefactor * integral;
    Ok(Estimate {
        value,
        error_estimate: prefactor.abs() * (left.error_estimate + right.error_estimate)
            + value.abs() * prefactor_rel,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn series_at_zero_is_one() {
        let r = hyp2f1_series(Hyp2F1Params::new(0.3, -1.7, 2.2, 0.0), 1e-15).unwrap();
        assert_eq!(r, Estimate::exact(1.0));
    }

    #[test]
    fn series_closed_forms() {
        // ₂F₁(1,1;1;z) = 1/(1−z)
        let r = hyp2f1_series(Hyp2F1Params::new(1.0, 1.0, 1.0, 0.5), 1e-15).unwrap();
        assert!((r.value - 2.0).abs() < 1e-13);
        // ₂F₁(1,1;2;z) = −ln(1−z)/z
        let r = hyp2f1_series(Hyp2F1Params::new(1.0, 1.0, 2.0, 0.5), 1e-15).unwrap();
        assert!((r.value - 2.0 * std::f64::consts::LN_2).abs() < 1e-13);
    }

    #[test]
    fn terminating_series() {
        // ₂F₁(−2, b; c; z) is a quadratic polynomial
        let (b, c, z) = (1.5, 2.5, 0.4);
        let r = hyp2f1_series(Hyp2F1Params::new(-2.0, b, c, z), 1e-15).unwrap();
        let poly = 1.0 - 2.0 * b / c * z + b * (b + 1.0) / (c * (c + 1.0)) * z * z;
        assert!((r.value - poly).abs() < 1e-15);
        assert_eq!(r.error_estimate, 0.0);
    }

    #[test]
    fn series_domain_errors() {
        assert!(hyp2f1_series(Hyp2F1Params::new(1.0, 1.0, 1.0, 1.0), 1e-10).is_err());
        assert!(hyp2f1_series(Hyp2F1Params::new(1.0, 1.0, -2.0, 0.5), 1e-10).is_err());
        assert!(matches!(
            hyp2f1_series(Hyp2F1Params::new(1.0, 1.0, 1.0, 0.999_999_9), 1e-16),
            Err(Error::SeriesDiverged { .. })
        ));
    }

    #[test]
    fn integral_matches_series() {
        let r = hyp2f1_integral(Hyp2F1Params::new(1.0, 1.0, 2.0, 0.0), 1e-12).unwrap();
        assert!((r.value - 1.0).abs() < 1e-12);
        for p in [
            Hyp2F1Params::new(1.0, 1.0, 2.0, 0.5),
            Hyp2F1Params::new(2.0, 1.0, 2.5, 0.3),
        ] {
            let s = hyp2f1_series(p, 1e-15).unwrap();
            let i = hyp2f1_integral(p, 1e-12).unwrap();
            assert!((s.value - i.value).abs() < 1e-8, "{p:?}: {} vs {}", s.value, i.value);
        }
    }

    #[test]
    fn integral_with_singular_endpoints() {
        // b = 1/2 and c − b = 1/2 both need the substitution
        let p = Hyp2F1Params::new(1.5, 0.5, 1.0, -0.4);
        let s = hyp2f1_series(p, 1e-15).unwrap();
        let i = hyp2f1_integral(p, 1e-11).unwrap();
        assert!((s.value - i.value).abs() < 1e-8, "{} vs {}", s.value, i.value);
    }

    #[test]
    fn integral_domain_errors() {
        assert!(hyp2f1_integral(Hyp2F1Params::new(1.0, 2.0, 2.0, 0.1), 1e-10).is_err());
        assert!(hyp2f1_integral(Hyp2F1Params::new(1.0, 0.0, 2.0, 0.1), 1e-10).is_err());
        assert!(hyp2f1_integral(Hyp2F1Params::new(1.0, 1.0, 2.0, 1.0), 1e-10).is_err());
    }
}
