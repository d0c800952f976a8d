//! Frozen values and independent oracles for the public API.

use gaussint::exact::{rational_to_f64, ratio, BigRational};
use gaussint::fractional::{caputo_half_derivative, caputo_prefactor, rl_half_derivative};
use gaussint::moments::{moment_closed, moment_gamma_form, moment_quadrature, MomentQuery};
use gaussint::special::{hyp2f1_series, Hyp2F1Params};
use gaussint::tsallis::{
    occupation_exact, occupation_first_order, tsallis_entropy, ProbabilityVector, SpeciesThermo,
};
use num_traits::{One, Zero};
use proptest::prelude::*;
use proptest::strategy::ValueTree;

// Exact partial sum of 2F1(a, b; c; z) over rationals; terms decay like z^k.
fn hyp2f1_rational(a: &BigRational, b: &BigRational, c: &BigRational, z: &BigRational, terms: u32) -> BigRational {
    let mut term = BigRational::one();
    let mut sum = BigRational::zero();
    for k in 0..terms {
        sum += &term;
        let kk = BigRational::from_integer(k.into());
        term = term * (a + &kk) * (b + &kk) / ((c + &kk) * (&kk + BigRational::one())) * z;
    }
    sum
}

#[test]
fn hyp2f1_series_matches_exact_rational_sum() {
    let z = ratio(1, 100);
    for (a, b, c) in [(1, 1, 3), (3, 1, 3), (2, 2, 5)] {
        // c is stored doubled: c/2 is a half-integer
        let exact = hyp2f1_rational(&ratio(a, 1), &ratio(b, 1), &ratio(c, 2), &z, 40);
        let est = hyp2f1_series(Hyp2F1Params::new(a as f64, b as f64, c as f64 / 2.0, 0.01), 1e-15).unwrap();
        let want = rational_to_f64(&exact);
        assert!((est.value - want).abs() <= 4.0 * f64::EPSILON * want, "{a},{b},{c}: {} vs {want}", est.value);
    }
}

#[test]
fn rl_frozen_value() {
    // n = 1, m = 2, x = 0.01, cross-checked with 50-digit arithmetic
    let v = rl_half_derivative(1, 2, 0.01).unwrap();
    let want = -283.99059888902556;
    assert!((v - want).abs() <= 1e-12 * want.abs(), "{v}");

    // x^{-3/2} / Γ(-1/2) · 2F1(1,1;3/2;x) with Γ(-1/2) = -2√π
    let f = rational_to_f64(&hyp2f1_rational(&ratio(1, 1), &ratio(1, 1), &ratio(3, 2), &ratio(1, 100), 40));
    let independent = 0.01f64.powf(-1.5) / (-2.0 * std::f64::consts::PI.sqrt()) * f;
    assert!((v - independent).abs() <= 1e-12 * want.abs());
}

#[test]
fn caputo_frozen_value() {
    let v = caputo_half_derivative(1, 2, 0.01).unwrap();
    let want = 0.23026261194786143;
    assert!((v - want).abs() <= 1e-12 * want, "{v}");

    // Γ(3)/Γ(3/2) = 4/√π exactly
    let pre = caputo_prefactor(1, 2).unwrap();
    assert_eq!(pre.coef(), &ratio(4, 1));
    assert_eq!(pre.sqrt_pi_power(), -1);
    let f = rational_to_f64(&hyp2f1_rational(&ratio(3, 1), &ratio(1, 1), &ratio(3, 2), &ratio(1, 100), 40));
    let independent = pre.to_f64() * 0.1 * f;
    assert!((v - independent).abs() <= 1e-12 * want);
}

#[test]
fn moment_frozen_values() {
    // ∫ x^4 e^{-2x²} dx = (3/4)·√π·2^{-5/2}
    let r = moment_closed(MomentQuery::new(2, 2.0).unwrap());
    assert_eq!(r.exact_coef.as_ref().unwrap(), &ratio(3, 4));
    assert_eq!(r.alpha_exponent.to_string(), "-5/2");
    let want = 0.75 * std::f64::consts::PI.sqrt() * 2f64.powf(-2.5);
    assert!((r.float_value - want).abs() <= 2.0 * f64::EPSILON * want);
}

#[test]
fn entropy_approaches_shannon_for_random_states() {
    let mut runner = proptest::test_runner::TestRunner::deterministic();
    let strategy = proptest::collection::vec(0.01f64..1.0, 8);
    for _ in 0..32 {
        let raw = strategy.new_tree(&mut runner).unwrap().current();
        let total: f64 = raw.iter().sum();
        let p: Vec<f64> = raw.iter().map(|w| w / total).collect();
        let shannon: f64 = -p.iter().map(|x| x * x.ln()).sum::<f64>();
        let pv = ProbabilityVector::new(p).unwrap();
        let gaps: Vec<f64> = [1e-2, 1e-3, 1e-4]
            .iter()
            .map(|d| (tsallis_entropy(&pv, 1.0 + d) - shannon).abs())
            .collect();
        assert!(gaps[0] > gaps[1] && gaps[1] > gaps[2], "{gaps:?}");
        assert!(gaps[2] < 1e-3, "{gaps:?}");
        assert!((tsallis_entropy(&pv, 1.0) - shannon).abs() < 1e-12);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closed_and_gamma_form_agree(n in 0u32..25, alpha in 0.05f64..20.0) {
        let q = MomentQuery::new(n, alpha).unwrap();
        let a = moment_closed(q);
        let b = moment_gamma_form(q);
        prop_assert_eq!(&a.exact_coef, &b.exact_coef);
        prop_assert!((a.float_value - b.float_value).abs() <= 1e-12 * a.float_value.abs());
    }

    #[test]
    fn quadrature_tracks_closed_form(n in 0u32..8, alpha in 0.2f64..5.0) {
        let q = MomentQuery::new(n, alpha).unwrap();
        let exact = moment_closed(q).float_value;
        let num = moment_quadrature(q, 1e-10).unwrap().float_value;
        prop_assert!((num - exact).abs() <= 1e-9 * exact);
    }

    #[test]
    fn first_order_error_is_quadratic(e in 0.5f64..5.0, t in 0.5f64..2.0) {
        let diff = |d: f64| {
            let s = SpeciesThermo::new(1.0, 1.0, 0.0, t, 1.0 + d).unwrap();
            (occupation_exact(e, &s).unwrap() - occupation_first_order(e, &s)).abs()
        };
        let (a, b) = (diff(1e-2), diff(1e-3));
        // halving the exponent error scale by 10 should cut the gap ~100×
        prop_assert!(b < a / 30.0, "{a} {b}");
    }
}
