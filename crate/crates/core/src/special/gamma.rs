use num_rational::BigRational;

use super::half::{gamma_half_minus, gamma_half_plus};
use super::Estimate;
use crate::error::invalid;
use crate::exact::{factorial, HalfIntValue};
use crate::quad::{integrate, Tolerance, DEFAULT_PANEL_BUDGET};
use crate::{Error, Result};

/// Smallest tolerance the Euler-integral evaluator accepts.
pub const GAMMA_TOL_FLOOR: f64 = 1e-12;

/// A gamma-function argument sorted by which evaluation path applies.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GammaArg {
    /// Positive integer `k`: `Γ(k) = (k−1)!`.
    Integer(u64),
    /// `n + 1/2` for natural `n`.
    HalfPlus(u32),
    /// `1/2 − n` for `n ≥ 1`.
    HalfMinus(u32),
    /// Zero or a negative integer.
    Pole(i64),
    Real(f64),
}

impl GammaArg {
    pub fn classify(t: f64) -> Self {
        if t.fract() == 0.0 && t.abs() < 2f64.powi(53) {
            return if t >= 1.0 {
                GammaArg::Integer(t as u64)
            } else {
                GammaArg::Pole(t as i64)
            };
        }
        let shifted = t - 0.5;
        if shifted.fract() == 0.0 && shifted.abs() < u32::MAX as f64 {
            return if shifted >= 0.0 {
                GammaArg::HalfPlus(shifted as u32)
            } else {
                GammaArg::HalfMinus((-shifted) as u32)
            };
        }
        GammaArg::Real(t)
    }
}

/// `Γ(t)` in exact form when `t` is an integer or a half-integer.
///
/// Returns `Ok(None)` for other arguments and an error at poles.
pub fn gamma_exact(t: f64) -> Result<Option<HalfIntValue>> {
    match GammaArg::classify(t) {
        GammaArg::Integer(k) => Ok(Some(HalfIntValue::rational(BigRational::from_integer(
            factorial(k - 1),
        )))),
        GammaArg::HalfPlus(n) => Ok(Some(gamma_half_plus(n))),
        GammaArg::HalfMinus(n) => Ok(Some(gamma_half_minus(n))),
        GammaArg::Pole(_) => Err(Error::GammaPole { arg: t }),
        GammaArg::Real(_) => Ok(None),
    }
}

/// Upper bound on `∫_T^∞ x^s e^(−x) dx`, valid for `T > max(s, 0)`.
fn upper_tail_bound(s: f64, t_cut: f64) -> f64 {
    let head = t_cut.powf(s) * (-t_cut).exp();
    if s <= 0.0 {
        head
    } else {
        head * t_cut / (t_cut - s)
    }
}

/// `Γ(t) = ∫₀^∞ x^(t−1) e^(−x) dx` by quadrature.
///
/// `tol` bounds the error relative to `max(1, Γ(t))`. The piece over (0, 1]
/// is evaluated after `x = u^(1/t)` when `t < 1`, which removes the endpoint
/// singularity; the piece over [1, ∞) is cut at a point where the analytic
/// tail bound is below `tol/2`.
pub fn gamma_numeric(t: f64, tol: f64) -> Result<Estimate> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(invalid("t", t, "the Euler integral requires t > 0"));
    }
    if !(tol >= GAMMA_TOL_FLOOR) {
        return Err(Error::ToleranceTooSmall {
            tol,
            floor: GAMMA_TOL_FLOOR,
        });
    }
    let s = t - 1.0;
    let piece_tol = Tolerance::mixed(tol / 4.0);

    let near = if t < 1.0 {
        let inv = 1.0 / t;
        integrate(|u: f64| inv * (-u.powf(inv)).exp(), 0.0, 1.0, piece_tol, DEFAULT_PANEL_BUDGET)?
    } else {
        integrate(|x: f64| x.powf(s) * (-x).exp(), 0.0, 1.0, piece_tol, DEFAULT_PANEL_BUDGET)?
    };

    let mut cut = (2.0 * s).max(0.0) + 2.0;
    while upper_tail_bound(s, cut) >= tol / 2.0 {
        cut *= 1.25;
    }
    let tail = upper_tail_bound(s, cut);
    let far = integrate(
        |x: f64| (s * x.ln() - x).exp(),
        1.0,
        cut,
        piece_tol,
        DEFAULT_PANEL_BUDGET,
    )?;

    Ok(Estimate {
        value: near.value + far.value,
        error_estimate: near.error_estimate + far.error_estimate + tail,
    })
}

/// `m! = ∫₀^∞ x^m e^(−x) dx`, i.e. `Γ(m+1)`, for `m > −1`.
pub fn factorial_numeric(m: f64, tol: f64) -> Result<Estimate> {
    if !(m > -1.0) {
        return Err(invalid("m", m, "the factorial integral requires m > -1"));
    }
    gamma_numeric(m + 1.0, tol)
}

/// `Γ(t)` for any real non-pole `t`: exact when `t` is an integer or
/// half-integer, otherwise by quadrature, shifting negative arguments up with
/// `Γ(t) = Γ(t+k)/(t(t+1)…(t+k−1))`.
pub fn gamma_value(t: f64, tol: f64) -> Result<Estimate> {
    if let Some(exact) = gamma_exact(t)? {
        return Ok(Estimate::exact(exact.to_f64()));
    }
    if t > 0.0 {
        return gamma_numeric(t, tol);
    }
    let shift = (-t).floor() + 1.0;
    let divisor: f64 = (0..shift as u32).map(|j| t + j as f64).product();
    let up = gamma_numeric(t + shift, tol)?;
    Ok(Estimate {
        value: up.value / divisor,
        error_estimate: up.error_estimate / divisor.abs(),
    })
}
