use std::fmt;
use std::ops::{Div, Mul, Neg};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{rational_ln, rational_to_f64};

const SQRT_PI: f64 = 1.772_453_850_905_516;

/// The exact value `coef·(√π)^sqrt_pi_power`.
///
/// Half-integer gamma and factorial values use powers 0 and 1 only; products
/// and quotients of such values may carry other powers (e.g. the reflection
/// product `Γ(1/2+n)·Γ(1/2−n) = (−1)ⁿ·(√π)²`). Since π is transcendental the
/// representation is unique once zero is normalized to power 0, so derived
/// equality is exact equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HalfIntValue {
    coef: BigRational,
    sqrt_pi_power: i32,
}

impl HalfIntValue {
    pub fn new(coef: BigRational, sqrt_pi_power: i32) -> Self {
        let sqrt_pi_power = if coef.is_zero() { 0 } else { sqrt_pi_power };
        HalfIntValue {
            coef,
            sqrt_pi_power,
        }
    }

    pub fn rational(coef: BigRational) -> Self {
        Self::new(coef, 0)
    }

    /// `coef·√π`.
    pub fn times_sqrt_pi(coef: BigRational) -> Self {
        Self::new(coef, 1)
    }

    pub fn pi() -> Self {
        Self::new(BigRational::one(), 2)
    }

    pub fn coef(&self) -> &BigRational {
        &self.coef
    }

    pub fn sqrt_pi_power(&self) -> i32 {
        self.sqrt_pi_power
    }

    pub fn is_zero(&self) -> bool {
        self.coef.is_zero()
    }

    /// Sum, defined only when both terms share the same power of √π.
    pub fn checked_add(&self, other: &Self) -> Option<Self> {
        if self.is_zero() {
            return Some(other.clone());
        }
        if other.is_zero() {
            return Some(self.clone());
        }
        (self.sqrt_pi_power == other.sqrt_pi_power)
            .then(|| Self::new(&self.coef + &other.coef, self.sqrt_pi_power))
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        Self::new(&self.coef * factor, self.sqrt_pi_power)
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        (!self.is_zero()).then(|| Self::new(self.coef.recip(), -self.sqrt_pi_power))
    }

    /// Nearest double. The rational part is rounded once; values whose
    /// rational part alone leaves the `f64` range go through logarithms.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let c = rational_to_f64(&self.coef);
        if c.is_finite() && c != 0.0 && c.abs() >= f64::MIN_POSITIVE {
            return c * SQRT_PI.powi(self.sqrt_pi_power);
        }
        let ln = rational_ln(&self.coef.abs())
            + 0.5 * self.sqrt_pi_power as f64 * std::f64::consts::PI.ln();
        let magnitude = ln.exp();
        if self.coef.is_negative() {
            -magnitude
        } else {
            magnitude
        }
    }
}

impl Mul for &HalfIntValue {
    type Output = HalfIntValue;

    fn mul(self, rhs: &HalfIntValue) -> HalfIntValue {
        HalfIntValue::new(
            &self.coef * &rhs.coef,
            self.sqrt_pi_power + rhs.sqrt_pi_power,
        )
    }
}

impl Mul for HalfIntValue {
    type Output = HalfIntValue;

    fn mul(self, rhs: HalfIntValue) -> HalfIntValue {
        &self * &rhs
    }
}

impl Div for &HalfIntValue {
    type Output = HalfIntValue;

    /// Panics on division by zero, like rational division.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &HalfIntValue) -> HalfIntValue {
        let inv = rhs.recip().expect("division by a zero HalfIntValue");
        self * &inv
    }
}

impl Neg for HalfIntValue {
    type Output = HalfIntValue;

    fn neg(self) -> HalfIntValue {
        HalfIntValue::new(-self.coef, self.sqrt_pi_power)
    }
}

impl fmt::Display for HalfIntValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sqrt_pi_power {
            0 => write!(f, "{}", self.coef),
            1 => write!(f, "{}·√π", self.coef),
            p => write!(f, "{}·(√π)^{}", self.coef, p),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct Repr {
    coef_num: String,
    coef_den: String,
    sqrt_pi_power: i32,
}

impl Serialize for HalfIntValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        Repr {
            coef_num: self.coef.numer().to_string(),
            coef_den: self.coef.denom().to_string(),
            sqrt_pi_power: self.sqrt_pi_power,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for HalfIntValue {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = Repr::deserialize(d)?;
        let num = repr.coef_num.parse().map_err(D::Error::custom)?;
        let den: num_bigint::BigInt = repr.coef_den.parse().map_err(D::Error::custom)?;
        if den.is_zero() {
            return Err(D::Error::custom("zero denominator"));
        }
        Ok(HalfIntValue::new(
            BigRational::new(num, den),
            repr.sqrt_pi_power,
        ))
    }
}
