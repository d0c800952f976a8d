//! Gaussian moment integrals through the coefficients γ₂ₙ of the Taylor
//! series of `(1−x)^(−1/2)`, and what follows from them: exact half-integer
//! gamma and factorial values, the Tsallis particle number density, and
//! closed-form fractional derivatives of `(1−x)^(−1)`.
//!
//! Every closed form is exact (rational multiples of powers of √π) and is
//! paired with an independent numerical route so the two can be checked
//! against each other.
//!
//! ```
//! use gaussint::exact::{gamma_coeff_product, ratio};
//! use gaussint::moments::{moment_closed, MomentQuery};
//!
//! assert_eq!(gamma_coeff_product(3), ratio(15, 8));
//! let i4 = moment_closed(MomentQuery::new(2, 1.0).unwrap());
//! assert_eq!(i4.exact_coef, Some(ratio(3, 4)));
//! ```

// `!(x > 0.0)` style guards are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod exact;
pub mod fractional;
pub mod moments;
pub mod quad;
pub mod special;
pub mod sweep;
pub mod tsallis;

pub use error::{Error, Result};
