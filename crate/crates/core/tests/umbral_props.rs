mod common;

use common::*;
use dpb_core::families::{LPoly, LSeries};
use dpb_core::umbral::{difference_property, op_apply, pair, Functional};
use dpb_core::{LambdaPoly, Polynomial, Rational, Ring};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn pairing_is_bilinear(
        f in l_series(12), g in l_series(12),
        p in l_poly(10), q in l_poly(10),
        a in small_lambda_poly(), b in small_lambda_poly(),
    ) {
        let combo = f.mul_scalar(&a).add(&g.mul_scalar(&b));
        prop_assert_eq!(
            pair(&combo, &p).unwrap(),
            Ring::mul(&a, &pair(&f, &p).unwrap()).add(&Ring::mul(&b, &pair(&g, &p).unwrap()))
        );
        let poly_combo = p.mul_scalar(&a).add(&q.mul_scalar(&b));
        prop_assert_eq!(
            pair(&f, &poly_combo).unwrap(),
            Ring::mul(&a, &pair(&f, &p).unwrap()).add(&Ring::mul(&b, &pair(&f, &q).unwrap()))
        );
    }

    #[test]
    fn pairing_is_adjoint_to_the_action(f in l_series(12), g in l_series(12), p in l_poly(11)) {
        let lhs = pair(&f.mul(&g), &p).unwrap();
        prop_assert_eq!(&lhs, &pair(&g, &op_apply(&f, &p).unwrap()).unwrap());
        prop_assert_eq!(&lhs, &pair(&f, &op_apply(&g, &p).unwrap()).unwrap());
    }

    #[test]
    fn taylor_reconstruction(p in l_poly(11)) {
        let coeffs = (0..12)
            .map(|k| {
                let tk = LSeries::monomial(LambdaPoly::one(), k, 12);
                pair(&tk, &p).unwrap().scale(&Rational::factorial(k).recip().unwrap())
            })
            .collect();
        prop_assert_eq!(Polynomial::from_coeffs(coeffs), p);
    }

    #[test]
    fn pairing_with_tk_is_the_kth_derivative_at_zero(p in l_poly(11), k in 0usize..12) {
        let tk = LSeries::monomial(LambdaPoly::one(), k, 12);
        prop_assert_eq!(pair(&tk, &p).unwrap(), p.nth_derivative(k).coeff(0));
    }

    #[test]
    fn action_is_multiplicative(f in l_series(12), g in l_series(12), p in l_poly(11)) {
        prop_assert_eq!(
            op_apply(&f, &op_apply(&g, &p).unwrap()).unwrap(),
            op_apply(&f.mul(&g), &p).unwrap()
        );
    }

    #[test]
    fn functional_from_moments_recovers_them(values in proptest::collection::vec(small_lambda_poly(), 1..10)) {
        let l = Functional::from_moments(&values);
        for (n, v) in values.iter().enumerate() {
            prop_assert_eq!(&l.apply(&LPoly::x_pow(n)).unwrap(), v);
        }
    }
}

#[test]
fn difference_property_on_monomials() {
    for n in 0..=16 {
        let (lhs, rhs) = difference_property(&Polynomial::<Rational>::x_pow(n)).unwrap();
        assert_eq!(lhs, rhs, "x^{n}");
    }
}
