use std::ops::{Add, Mul, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::rational::factorial;
use crate::{Error, Result};

/// A power series truncated at a fixed order: `coeffs[k]` multiplies `x^k`.
///
/// Arithmetic between series of different orders truncates to the smaller
/// one; nothing ever extends a series past the information it carries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<BigRational>,
}

impl PowerSeries {
    /// Panics on an empty coefficient list.
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "a power series needs at least one coefficient");
        PowerSeries { coeffs }
    }

    pub fn constant(c: BigRational, order: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); order + 1];
        coeffs[0] = c;
        PowerSeries { coeffs }
    }

    /// `1 − x`, truncated to `order`.
    pub fn one_minus_x(order: usize) -> Self {
        let mut s = Self::constant(BigRational::one(), order);
        if order >= 1 {
            s.coeffs[1] = -BigRational::one();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Option<&BigRational> {
        self.coeffs.get(k)
    }

    pub fn truncate(&self, order: usize) -> Self {
        let keep = order.min(self.order()) + 1;
        PowerSeries {
            coeffs: self.coeffs[..keep].to_vec(),
        }
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;

    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        PowerSeries { coeffs }
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;

    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        PowerSeries { coeffs }
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;

    /// Cauchy product truncated to the smaller order.
    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|k| {
                (0..=k).fold(BigRational::zero(), |acc, i| {
                    acc + &self.coeffs[i] * &rhs.coeffs[k - i]
                })
            })
            .collect();
        PowerSeries { coeffs }
    }
}

/// Taylor series of `(1−x)^(−1/2)` at 0, truncated to `order`.
///
/// The coefficients are obtained by solving `S·S·(1−x) = 1` one order at a
/// time (equivalently `S² = Σ xᵏ`), taking the branch with `S(0) = 1`. No
/// closed form for the coefficients is used.
pub fn series_rsqrt_one_minus_x(order: usize) -> PowerSeries {
    let mut s: Vec<BigRational> = Vec::with_capacity(order + 1);
    s.push(BigRational::one());
    for k in 1..=order {
        // coefficient k of S² is 2·s₀·s_k + Σ_{i=1}^{k-1} s_i s_{k-i} and must equal 1
        let cross = (1..k).fold(BigRational::zero(), |acc, i| acc + &s[i] * &s[k - i]);
        let two_s0 = &s[0] + &s[0];
        s.push((BigRational::one() - cross) / two_s0);
    }
    PowerSeries { coeffs: s }
}

/// Taylor series of `(1−x)^(−1)` at 0, solved from `S·(1−x) = 1`.
pub fn series_reciprocal_one_minus_x(order: usize) -> PowerSeries {
    let mut s: Vec<BigRational> = Vec::with_capacity(order + 1);
    s.push(BigRational::one());
    for k in 1..=order {
        // coefficient k of S·(1−x) is s_k − s_{k−1} = 0
        let prev = s[k - 1].clone();
        s.push(prev);
    }
    PowerSeries { coeffs: s }
}

/// `dᵏf/dxᵏ` at 0 for the series of `f`: `k!·c_k`.
pub fn jet_nth_derivative_at_zero(series: &PowerSeries, k: usize) -> Result<BigRational> {
    let c = series.coeff(k).ok_or(Error::InsufficientOrder {
        k,
        order: series.order(),
    })?;
    Ok(c * BigRational::from_integer(factorial(k as u64)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn integer(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    #[test]
    fn rsqrt_low_orders() {
        assert_eq!(series_rsqrt_one_minus_x(0).coeffs(), &[integer(1)]);
        assert_eq!(series_rsqrt_one_minus_x(1).coeffs(), &[integer(1), ratio(1, 2)]);
        assert_eq!(
            series_rsqrt_one_minus_x(2).coeffs(),
            &[integer(1), ratio(1, 2), ratio(3, 8)]
        );
    }

    #[test]
    fn rsqrt_derivatives() {
        let s = series_rsqrt_one_minus_x(6);
        assert_eq!(jet_nth_derivative_at_zero(&s, 0).unwrap(), integer(1));
        assert_eq!(jet_nth_derivative_at_zero(&s, 1).unwrap(), ratio(1, 2));
        assert_eq!(jet_nth_derivative_at_zero(&s, 2).unwrap(), ratio(3, 4));
        assert_eq!(jet_nth_derivative_at_zero(&s, 3).unwrap(), ratio(15, 8));
        assert_eq!(jet_nth_derivative_at_zero(&s, 4).unwrap(), ratio(105, 16));
        // 11!!/2^6
        assert_eq!(jet_nth_derivative_at_zero(&s, 6).unwrap(), ratio(10395, 64));
    }

    #[test]
    fn derivative_beyond_truncation_is_rejected() {
        let s = series_rsqrt_one_minus_x(3);
        assert_eq!(
            jet_nth_derivative_at_zero(&s, 4),
            Err(Error::InsufficientOrder { k: 4, order: 3 })
        );
    }

    #[test]
    fn reciprocal_series() {
        let s = series_reciprocal_one_minus_x(2);
        assert_eq!(s.coeffs(), &[integer(1), integer(1), integer(1)]);
        let s = series_reciprocal_one_minus_x(5);
        assert_eq!(jet_nth_derivative_at_zero(&s, 3).unwrap(), integer(2 * 3));
        assert_eq!(jet_nth_derivative_at_zero(&s, 5).unwrap(), integer(2 * 3 * 4 * 5));
    }

    #[test]
    fn mixed_orders_truncate() {
        let a = series_reciprocal_one_minus_x(5);
        let b = PowerSeries::one_minus_x(2);
        let p = &a * &b;
        assert_eq!(p.order(), 2);
        assert_eq!(p.coeffs(), &[integer(1), integer(0), integer(0)]);
        assert_eq!((&a + &b).order(), 2);
        assert_eq!(a.truncate(1).order(), 1);
    }

    #[test]
    fn rsqrt_coefficient_recurrence() {
        let s = series_rsqrt_one_minus_x(50);
        for n in 0..50 {
            let step = ratio(2 * n as i64 + 1, 2 * n as i64 + 2);
            assert_eq!(s.coeffs()[n + 1], &s.coeffs()[n] * step);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn rsqrt_satisfies_defining_identity(order in 0usize..40) {
            let s = series_rsqrt_one_minus_x(order);
            let product = &(&s * &s) * &PowerSeries::one_minus_x(order);
            prop_assert_eq!(product.order(), order);
            prop_assert_eq!(&product.coeffs()[0], &integer(1));
            for c in &product.coeffs()[1..] {
                prop_assert!(c.is_zero());
            }
        }

        #[test]
        fn reciprocal_satisfies_defining_identity(order in 0usize..60) {
            let s = series_reciprocal_one_minus_x(order);
            let product = &s * &PowerSeries::one_minus_x(order);
            prop_assert_eq!(product, PowerSeries::constant(integer(1), order));
        }
    }
}
