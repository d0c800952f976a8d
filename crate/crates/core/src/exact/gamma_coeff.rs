//! γ₂ₙ, the n-th derivative of `(1−x)^(−1/2)` at 0, computed along four
//! independent routes.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::Serialize;

use super::rational::ratio;
use super::series::{jet_nth_derivative_at_zero, series_rsqrt_one_minus_x};
use crate::error::invalid;
use crate::Result;

/// `∏_{k=0}^{n−1} (1/2 + k)`; the empty product at `n = 0` is 1.
pub fn gamma_coeff_product(n: u32) -> BigRational {
    (0..n as i64).fold(BigRational::one(), |acc, k| acc * ratio(2 * k + 1, 2))
}

/// Builds γ₂ₙ upward from γ₀ = 1 with `γ₂₍ₖ₊₁₎ = (2k+1)/2 · γ₂ₖ`.
pub fn gamma_coeff_recurrence(n: u32) -> BigRational {
    let mut g = BigRational::one();
    for k in 0..n as i64 {
        g = ratio(2 * k + 1, 2) * g;
    }
    g
}

/// `m!!` for `m ≥ −1`, with `(−1)!! = 0!! = 1`.
pub fn double_factorial(m: i64) -> Result<BigInt> {
    if m < -1 {
        return Err(invalid("m", m, "double factorial is defined for m >= -1"));
    }
    let mut acc = BigInt::one();
    let mut k = m;
    while k > 1 {
        acc *= k;
        k -= 2;
    }
    Ok(acc)
}

/// `(2n−1)!!/2ⁿ`.
pub fn gamma_coeff_double_factorial(n: u32) -> BigRational {
    let df = double_factorial(2 * n as i64 - 1).expect("2n-1 >= -1");
    BigRational::new(df, BigInt::one() << n as usize)
}

/// γ₂ₙ by differentiating the truncated series of `(1−x)^(−1/2)` n times at 0.
///
/// Costs O(n²) rational multiplications; the other routes are linear.
pub fn gamma_coeff_via_jet(n: u32) -> BigRational {
    let series = series_rsqrt_one_minus_x(n as usize);
    jet_nth_derivative_at_zero(&series, n as usize).expect("series has order n")
}

/// The coefficient γ₂ₙ together with its index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaCoefficient {
    pub n: u32,
    #[serde(serialize_with = "serialize_rational")]
    pub value: BigRational,
}

fn serialize_rational<S: serde::Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    super::rational::RationalRepr::from(r).serialize(s)
}

impl GammaCoefficient {
    pub fn new(n: u32) -> Self {
        GammaCoefficient {
            n,
            value: gamma_coeff_product(n),
        }
    }

    /// `2ⁿ·γ₂ₙ`, which is always the integer `(2n−1)!!`.
    pub fn scaled_to_integer(&self) -> BigInt {
        let scaled = &self.value * BigRational::from_integer(BigInt::one() << self.n as usize);
        debug_assert!(scaled.is_integer());
        scaled.to_integer()
    }

    /// Checks the structural invariants: positive, denominator divides 2ⁿ.
    pub fn is_well_formed(&self) -> bool {
        let pow2 = BigInt::one() << self.n as usize;
        self.value.is_positive() && pow2.is_multiple_of(self.value.denom())
    }
}
