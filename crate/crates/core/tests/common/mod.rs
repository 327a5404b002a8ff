#![allow(dead_code)]

use dpb_core::families::{LPoly, LSeries, QSeries};
use dpb_core::{LambdaPoly, Polynomial, Rational, TruncatedSeries};
use proptest::collection::vec;
use proptest::prelude::*;

pub fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| Rational::new(n, d))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

pub fn lambda_poly() -> impl Strategy<Value = LambdaPoly> {
    vec(rational(), 0..4).prop_map(LambdaPoly::from_coeffs)
}

pub fn small_lambda_poly() -> impl Strategy<Value = LambdaPoly> {
    vec(
        (-3i64..=3, 1i64..=2).prop_map(|(n, d)| Rational::new(n, d)),
        0..3,
    )
    .prop_map(LambdaPoly::from_coeffs)
}

pub fn q_series(precision: usize) -> impl Strategy<Value = QSeries> {
    vec(rational(), precision).prop_map(TruncatedSeries::new)
}

pub fn l_series(precision: usize) -> impl Strategy<Value = LSeries> {
    vec(small_lambda_poly(), precision).prop_map(TruncatedSeries::new)
}

/// Constant term 1, so it is invertible and has a logarithm.
pub fn unit_l_series(precision: usize) -> impl Strategy<Value = LSeries> {
    l_series(precision).prop_map(|s| {
        let mut c = s.into_coeffs();
        c[0] = LambdaPoly::one();
        TruncatedSeries::new(c)
    })
}

/// Zero constant term.
pub fn inner_l_series(precision: usize) -> impl Strategy<Value = LSeries> {
    l_series(precision).prop_map(|s| {
        let mut c = s.into_coeffs();
        c[0] = LambdaPoly::zero();
        TruncatedSeries::new(c)
    })
}

/// Zero constant term and a nonzero rational linear term.
pub fn delta_l_series(precision: usize) -> impl Strategy<Value = LSeries> {
    (inner_l_series(precision), nonzero_rational()).prop_map(|(s, a)| {
        let mut c = s.into_coeffs();
        c[1] = LambdaPoly::constant(a);
        TruncatedSeries::new(c)
    })
}

pub fn l_poly(max_degree: usize) -> impl Strategy<Value = LPoly> {
    vec(small_lambda_poly(), 0..=max_degree + 1).prop_map(Polynomial::from_coeffs)
}
