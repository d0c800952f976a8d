use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// Shorthand for the exact rational `num/den`.
///
/// Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// `k!` as an arbitrary-precision integer.
pub fn factorial(k: u64) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * i)
}

/// Scaled integer quotient `floor(|r|·2^shift)` with at least 64 significant
/// bits, the shift, and whether the division left a remainder.
fn scaled_quotient(r: &BigRational) -> (u128, i64, bool) {
    let num = r.numer().magnitude();
    let den = r.denom().magnitude();
    let e = num.bits() as i64 - den.bits() as i64;
    let shift = 65 - e;
    let (n, d): (BigUint, BigUint) = if shift >= 0 {
        (num << shift as usize, den.clone())
    } else {
        (num.clone(), den << (-shift) as usize)
    };
    let q = &n / &d;
    let sticky = !(&n % &d).is_zero();
    (q.to_u128().expect("quotient has at most 66 bits"), shift, sticky)
}

/// Converts an exact rational to the nearest `f64` (ties to even), with
/// gradual underflow and overflow to infinity.
pub fn rational_to_f64(r: &BigRational) -> f64 {
    if r.is_zero() {
        return 0.0;
    }
    let negative = r.numer().sign() == Sign::Minus;
    let (q, shift, sticky) = scaled_quotient(r);
    let len = 128 - q.leading_zeros() as i64;
    // value lies in [2^exp, 2^(exp+1))
    let mut exp = len - 1 - shift;
    let precision = if exp >= -1022 { 53 } else { exp + 1075 };
    let magnitude = if exp > 1023 {
        f64::INFINITY
    } else if precision < 0 {
        0.0
    } else {
        let drop = (len - precision) as u32;
        let mut kept = q >> drop;
        let rest = q & ((1u128 << drop) - 1);
        let half = 1u128 << (drop - 1);
        if rest > half || (rest == half && (sticky || kept & 1 == 1)) {
            kept += 1;
        }
        if precision == 53 {
            if kept == 1u128 << 53 {
                kept >>= 1;
                exp += 1;
            }
            if exp > 1023 {
                f64::INFINITY
            } else {
                let bits = (((exp + 1023) as u64) << 52) | (kept as u64 & ((1u64 << 52) - 1));
                f64::from_bits(bits)
            }
        } else {
            // subnormal; kept == 2^52 lands exactly on the smallest normal
            f64::from_bits(kept as u64)
        }
    };
    if negative {
        -magnitude
    } else {
        magnitude
    }
}

/// Natural logarithm of a positive rational, accurate for magnitudes far
/// outside the `f64` range.
pub fn rational_ln(r: &BigRational) -> f64 {
    assert!(r.is_positive(), "logarithm of a non-positive rational");
    let (q, shift, _) = scaled_quotient(r);
    let top = 127 - q.leading_zeros() as i64;
    // mantissa in [1, 2) keeps the two terms from cancelling
    let mantissa = q as f64 / 2f64.powi(top as i32);
    mantissa.ln() + (top - shift) as f64 * std::f64::consts::LN_2
}

/// JSON shape of an exact rational: decimal strings for numerator and
/// denominator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalRepr {
    pub num: String,
    pub den: String,
}

impl From<&BigRational> for RationalRepr {
    fn from(r: &BigRational) -> Self {
        RationalRepr {
            num: r.numer().to_string(),
            den: r.denom().to_string(),
        }
    }
}

impl TryFrom<&RationalRepr> for BigRational {
    type Error = crate::Error;

    fn try_from(repr: &RationalRepr) -> crate::Result<Self> {
        let num: BigInt = repr
            .num
            .parse()
            .map_err(|_| crate::error::invalid("num", &repr.num, "not a decimal integer"))?;
        let den: BigInt = repr
            .den
            .parse()
            .map_err(|_| crate::error::invalid("den", &repr.den, "not a decimal integer"))?;
        if den.is_zero() {
            return Err(crate::error::invalid("den", &repr.den, "zero denominator"));
        }
        Ok(BigRational::new(num, den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn simple_values_round_exactly() {
        assert_eq!(rational_to_f64(&ratio(3, 4)), 0.75);
        assert_eq!(rational_to_f64(&ratio(-15, 8)), -1.875);
        assert_eq!(rational_to_f64(&ratio(1, 3)), 1.0 / 3.0);
        assert_eq!(rational_to_f64(&ratio(2, 3)), 2.0 / 3.0);
        assert_eq!(rational_to_f64(&ratio(0, 7)), 0.0);
    }

    #[test]
    fn ties_go_to_even() {
        // 2^53 + 1 sits exactly between two doubles
        let r = BigRational::from_integer(BigInt::from((1u64 << 53) + 1));
        assert_eq!(rational_to_f64(&r), (1u64 << 53) as f64);
        let r = BigRational::from_integer(BigInt::from((1u64 << 53) + 3));
        assert_eq!(rational_to_f64(&r), ((1u64 << 53) + 4) as f64);
    }

    #[test]
    fn extremes() {
        let huge = BigRational::from_integer(BigInt::one() << 1100usize);
        assert_eq!(rational_to_f64(&huge), f64::INFINITY);
        let tiny = BigRational::new(BigInt::one(), BigInt::one() << 1074usize);
        assert_eq!(rational_to_f64(&tiny), f64::from_bits(1));
        let below = BigRational::new(BigInt::one(), BigInt::one() << 1076usize);
        assert_eq!(rational_to_f64(&below), 0.0);
        let min_normal = BigRational::new(BigInt::one(), BigInt::one() << 1022usize);
        assert_eq!(rational_to_f64(&min_normal), f64::MIN_POSITIVE);
    }

    #[test]
    fn log_of_huge_rational() {
        let r = BigRational::from_integer(BigInt::one() << 5000usize);
        let expected = 5000.0 * std::f64::consts::LN_2;
        assert!((rational_ln(&r) - expected).abs() < 1e-12 * expected);
        assert!((rational_ln(&ratio(3, 4)) - 0.75f64.ln()).abs() < 1e-15);
    }

    proptest! {
        #[test]
        fn matches_float_division_for_small_integers(n in -1_000_000i64..1_000_000, d in 1i64..1_000_000) {
            // both operands are exact doubles, so IEEE division is correctly rounded
            prop_assert_eq!(rational_to_f64(&ratio(n, d)), n as f64 / d as f64);
        }

        #[test]
        fn repr_round_trips(n in any::<i64>(), d in 1i64..i64::MAX) {
            let r = ratio(n, d);
            let back = BigRational::try_from(&RationalRepr::from(&r)).unwrap();
            prop_assert_eq!(back, r);
        }
    }
}
