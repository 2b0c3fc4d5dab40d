mod common;

use common::{poly, real_zero_mean};
use crsphere::frames::{covariant_t, levi_pairing, pairs, FrameVector};
use crsphere::oracle3::{hessian_constant, run_oracle, second_derivative_check_on};
use crsphere::ring::{normal_form, parse_sphere_poly, rat, ExactScalar, SpherePoly, TSeries2};
use crsphere::spectral::{harmonic_decompose, sublaplacian};
use crsphere::variation::{
    conformal_hessian, fourier_modes, j_hessian, j_hessian_via_t, yamabe_energy_series, DeformationTensor,
};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn normal_form_is_idempotent(p in poly(2, 4, 3)) {
        prop_assert_eq!(normal_form(p.as_poly()), p);
    }

    #[test]
    fn normal_form_respects_products(a in poly(1, 3, 3), b in poly(1, 3, 3)) {
        let raw = a.as_poly().clone() * b.as_poly().clone();
        prop_assert_eq!(normal_form(&raw), &a * &b);
    }

    #[test]
    fn integral_sees_only_weight_zero(p in poly(2, 5, 3)) {
        prop_assert_eq!(p.integrate(), p.fourier_project(0).integrate());
    }

    #[test]
    fn integral_commutes_with_conjugation(p in poly(1, 4, 4)) {
        prop_assert_eq!(p.conjugate().integrate(), p.integrate().conj());
    }

    #[test]
    fn integral_is_linear(a in poly(1, 3, 3), b in poly(1, 3, 3)) {
        let c = ExactScalar::complex(rat(2, 3), rat(-1, 1));
        let lhs = (&a.scale(&c) + &b).integrate();
        prop_assert_eq!(lhs, &(&a.integrate() * &c) + &b.integrate());
    }

    #[test]
    fn display_round_trips(p in poly(2, 4, 3)) {
        prop_assert_eq!(parse_sphere_poly(2, &p.to_string()).unwrap(), p);
    }

    #[test]
    fn series_multiplication_is_associative(
        a in prop::collection::vec(poly(1, 2, 2), 3),
        b in prop::collection::vec(poly(1, 2, 2), 3),
        c in prop::collection::vec(poly(1, 2, 2), 3),
    ) {
        let s = |v: &Vec<SpherePoly>| TSeries2::new(v[0].clone(), v[1].clone(), v[2].clone());
        let (x, y, z) = (s(&a), s(&b), s(&c));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
    }

    #[test]
    fn square_root_squares_back(a in -5i64..=5, b in -5i64..=5) {
        let x = TSeries2::new(ExactScalar::one(), ExactScalar::ratio(a, 2), ExactScalar::ratio(b, 3));
        let r = x.pow_rational(&rat(1, 2));
        prop_assert_eq!(&r * &r, x);
    }

    #[test]
    fn harmonic_reconstruction(p in poly(2, 4, 3)) {
        prop_assert_eq!(harmonic_decompose(&p).sum(), p);
    }

    #[test]
    fn sublaplacian_is_symmetric(f in poly(1, 3, 3), g in poly(1, 3, 3)) {
        let a = (&f * &sublaplacian(&g)).integrate();
        let b = (&g * &sublaplacian(&f)).integrate();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn sublaplacian_is_nonpositive(f in real_zero_mean(2, 3, 2)) {
        let q = (&f * &sublaplacian(&f)).integrate();
        prop_assert!(q.is_real() && q.re <= num::zero());
    }

    #[test]
    fn parseval_on_s5(fs in prop::collection::vec(poly(2, 2, 2), 3)) {
        let n = 2;
        let v = pairs(n).iter().zip(&fs).fold(FrameVector::zero(n), |acc, (&(j, k), f)| {
            acc.add(&FrameVector::z_field(n, j, k).mul_poly(f))
        });
        let sum = pairs(n).iter().fold(SpherePoly::zero(n), |acc, &(j, k)| {
            let c = v.theta_jk(j, k);
            &acc + &(&c * &c.conjugate())
        });
        prop_assert_eq!(levi_pairing(&v, &v).unwrap(), sum);
    }

    #[test]
    fn covariant_t_is_leibniz(f in poly(2, 2, 2), g in poly(2, 2, 2)) {
        let n = 2;
        let v = FrameVector::z_field(n, 1, 3).mul_poly(&g);
        let t = FrameVector::t_field(n);
        let lhs = covariant_t(&v.mul_poly(&f));
        let rhs = v.mul_poly(&t.apply(&f)).add(&covariant_t(&v).mul_poly(&f));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn two_routes_agree_on_s3(e in poly(1, 3, 3)) {
        let d = DeformationTensor::scalar(&e);
        prop_assert_eq!(j_hessian(&d).unwrap().total, j_hessian_via_t(&d).unwrap());
    }

    #[test]
    fn two_routes_agree_on_s5(f in poly(2, 2, 2), g in poly(2, 2, 2)) {
        let d = DeformationTensor::from_lowered(2, &[(1, 2, f.clone()), (2, 1, f), (3, 3, g)]);
        prop_assert_eq!(j_hessian(&d).unwrap().total, j_hessian_via_t(&d).unwrap());
    }

    #[test]
    fn modes_are_orthogonal(e in poly(1, 4, 3)) {
        let d = DeformationTensor::scalar(&e);
        let total = fourier_modes(&d).modes.values().fold(ExactScalar::zero(), |acc, p| &acc + &p.tensor().norm_sqr());
        prop_assert_eq!(total, d.tensor().norm_sqr());
    }

    #[test]
    fn conformal_hessian_is_nonnegative(v in real_zero_mean(1, 3, 2)) {
        let h = conformal_hessian(&v).unwrap();
        prop_assert!(h.is_real() && h.re >= num::zero());
    }

    #[test]
    fn yamabe_second_order_is_half_hessian(v in real_zero_mean(1, 2, 2)) {
        let s = yamabe_energy_series(&v).unwrap();
        prop_assert!(s.c[1].is_zero());
        prop_assert_eq!(s.c[2].clone(), conformal_hessian(&v).unwrap().scale(&rat(1, 2)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn oracle_matches_mode_formula(e in poly(1, 2, 2)) {
        let s = rat(1, 1);
        let c = hessian_constant(&s);
        let run = run_oracle(&e, &s);
        let sd = second_derivative_check_on(&run, &c);
        prop_assert!(sd.mode_formula.pass, "{:?}", sd.mode_formula);
        prop_assert!(run.webster.c[1].integrate().is_zero());
    }
}
