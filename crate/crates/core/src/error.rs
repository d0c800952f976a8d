use thiserror::Error;

/// Errors raised by the exact and numeric routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid argument `{name}` = {value}: {reason}")]
    InvalidArgument {
        name: &'static str,
        value: String,
        reason: &'static str,
    },

    #[error("tolerance {tol:e} is below the floor {floor:e}")]
    ToleranceTooSmall { tol: f64, floor: f64 },

    #[error("derivative order {k} exceeds series truncation order {order}")]
    InsufficientOrder { k: usize, order: usize },

    #[error("Tsallis cutoff violated: bracket 1 + (q-1)x = {bracket} is not positive")]
    CutoffViolation { bracket: f64 },

    #[error("gamma function pole at argument {arg}")]
    GammaPole { arg: f64 },

    #[error(
        "quadrature did not converge within {panels} panels: estimated error {error:e}, target {target:e}"
    )]
    QuadratureBudget {
        panels: usize,
        error: f64,
        target: f64,
    },

    #[error("hypergeometric series did not converge within {terms} terms (z = {z})")]
    SeriesDiverged { terms: usize, z: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(name: &'static str, value: impl ToString, reason: &'static str) -> Error {
    Error::InvalidArgument {
        name,
        value: value.to_string(),
        reason,
    }
}
