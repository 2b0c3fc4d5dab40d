//! Comparisons between the oracle series and the closed-form variation formulas.

use num::rational::BigRational;
use serde::Serialize;

use super::coframe::{deform_frame_with, DeformedCoframe, PathOptions, SeriesForm};
use super::structure::{reality_residual, solve_structure, structure_residual, webster_series, PseudohermitianSeries};
use crate::frames::{covariant_t, FrameVector, TensorField};
use crate::ring::{ExactScalar, SpherePoly, TSeries2};
use crate::variation::{j_hessian, j_hessian_via_t, DeformationTensor};

/// One exact comparison.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Verdict {
    pub name: String,
    pub input: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl Verdict {
    pub fn compare<T: PartialEq + std::fmt::Display>(name: &str, input: &str, expected: &T, actual: &T) -> Self {
        Verdict {
            name: name.into(),
            input: input.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            pass: expected == actual,
        }
    }
}

/// The full oracle run for one `E`.
#[derive(Clone, Debug)]
pub struct OracleRun {
    pub coframe: DeformedCoframe,
    pub series: PseudohermitianSeries,
    pub webster: TSeries2<SpherePoly>,
}

pub fn run_oracle(e: &SpherePoly, scale: &BigRational) -> OracleRun {
    run_oracle_with(e, scale, &PathOptions::default())
}

pub fn run_oracle_with(e: &SpherePoly, scale: &BigRational, opts: &PathOptions) -> OracleRun {
    let coframe = deform_frame_with(e, scale, opts);
    let series = solve_structure(&coframe);
    let webster = webster_series(&series, &coframe);
    OracleRun { coframe, series, webster }
}

fn z1() -> FrameVector {
    FrameVector::z_field(1, 1, 2).scale(&ExactScalar::from_int(-1))
}

fn mi() -> ExactScalar {
    ExactScalar::i().conj()
}

/// `Ebar_{,0}` along the Reeb field `(2/s) T`, via the tensor covariant derivative.
fn conj_t_derivative(e: &SpherePoly, scale: &BigRational) -> SpherePoly {
    let te = covariant_t(&TensorField::from_scalar(e)).coefficient((1, 2), (1, 2));
    te.conjugate().scale(&ExactScalar::real(BigRational::from_integer(2.into()) / scale))
}

/// Closed form of `Adot^1_{1bar} = -i Ebar_{,0}` at the round sphere.
pub fn torsion_closed_form(e: &SpherePoly, scale: &BigRational) -> SpherePoly {
    conj_t_derivative(e, scale).scale(&mi())
}

/// Closed form of `omega-dot = -i E_{,1bar} theta^1 - i Ebar_{,1} theta^1bar`, coefficients over `(theta, theta^1, theta^1bar)`.
pub fn connection_closed_form(e: &SpherePoly) -> [SpherePoly; 3] {
    let z = z1();
    let zb = z.conjugate();
    [SpherePoly::zero(1), zb.apply(e).scale(&mi()), z.apply(&e.conjugate()).scale(&mi())]
}

/// Closed form of `Wdot = (i E_{,1bar 1bar} - i Ebar_{,11}) / s`.
pub fn webster_closed_form(e: &SpherePoly, scale: &BigRational) -> SpherePoly {
    let z = z1();
    let zb = z.conjugate();
    let a = zb.apply(&zb.apply(e));
    let b = z.apply(&z.apply(&e.conjugate()));
    (&a - &b).scale(&ExactScalar::i()).scale(&ExactScalar::real(BigRational::from_integer(1.into()) / scale))
}

/// Solver soundness: duality, Levi normalization, structure equation and reality, all to order 2.
pub fn solver_residuals_vanish(run: &OracleRun) -> bool {
    run.coframe.duality_residuals().iter().all(|r| r.is_zero())
        && run.coframe.levi_residual().is_zero()
        && structure_residual(&run.series, &run.coframe).iter().all(|r| r.is_zero())
        && reality_residual(&run.series).is_zero()
}

/// Base sanity: `A(0) = 0` and `W(0)` constant.
pub fn base_sanity(run: &OracleRun) -> bool {
    run.series.torsion.c[0].is_zero() && run.webster.c[0].as_constant().is_some()
}

#[derive(Clone, Debug, Serialize)]
pub struct FirstVariationCheck {
    pub pointwise: Verdict,
    pub integral: Verdict,
}

pub fn check_first_variation(e: &SpherePoly, scale: &BigRational) -> FirstVariationCheck {
    let run = run_oracle(e, scale);
    check_first_variation_on(&run, scale)
}

pub fn check_first_variation_on(run: &OracleRun, scale: &BigRational) -> FirstVariationCheck {
    let e = &run.coframe.e;
    let input = e.to_string();
    let actual = run.webster.c[1].clone();
    FirstVariationCheck {
        pointwise: Verdict::compare("first_variation_pointwise", &input, &webster_closed_form(e, scale), &actual),
        integral: Verdict::compare("first_variation_integral", &input, &ExactScalar::zero(), &actual.integrate()),
    }
}

pub fn check_torsion_variation(e: &SpherePoly, scale: &BigRational) -> Verdict {
    check_torsion_variation_on(&run_oracle(e, scale), scale)
}

pub fn check_torsion_variation_on(run: &OracleRun, scale: &BigRational) -> Verdict {
    let e = &run.coframe.e;
    Verdict::compare("torsion_variation", &e.to_string(), &torsion_closed_form(e, scale), &run.series.torsion.c[1])
}

pub fn connection_order1(ps: &PseudohermitianSeries) -> [SpherePoly; 3] {
    let o: &SeriesForm = &ps.omega;
    [o.c[0].c[1].clone(), o.c[1].c[1].clone(), o.c[2].c[1].clone()]
}

pub fn check_connection_variation_on(run: &OracleRun) -> Verdict {
    let e = &run.coframe.e;
    let show = |c: &[SpherePoly; 3]| format!("[{}; {}; {}]", c[0], c[1], c[2]);
    let exp = connection_closed_form(e);
    let act = connection_order1(&run.series);
    Verdict {
        name: "connection_variation".into(),
        input: e.to_string(),
        expected: show(&exp),
        actual: show(&act),
        pass: exp == act,
    }
}

/// Order-`t^2` coefficient of `int W(t)`.
pub fn second_order_integral(run: &OracleRun) -> ExactScalar {
    run.webster.c[2].integrate()
}

#[derive(Clone, Debug, Serialize)]
pub struct SecondDerivativeCheck {
    pub oracle: ExactScalar,
    pub constant: ExactScalar,
    pub mode_sum: ExactScalar,
    pub via_t: ExactScalar,
    pub mode_formula: Verdict,
    pub two_route: Verdict,
}

/// `C` such that the `t^2` coefficient of `int W` equals `C * sum (m+4) ||E^(m)||^2`, read off at `E = 1`.
pub fn hessian_constant(scale: &BigRational) -> ExactScalar {
    let run = run_oracle(&SpherePoly::one(1), scale);
    &second_order_integral(&run) / &ExactScalar::from_int(4)
}

pub fn second_derivative_check(e: &SpherePoly, scale: &BigRational, constant: &ExactScalar) -> SecondDerivativeCheck {
    second_derivative_check_on(&run_oracle(e, scale), constant)
}

pub fn second_derivative_check_on(run: &OracleRun, constant: &ExactScalar) -> SecondDerivativeCheck {
    let e = &run.coframe.e;
    let d = DeformationTensor::scalar(e);
    let oracle = second_order_integral(run);
    let mode_sum = j_hessian(&d).expect("S^3 tensors are symmetric").total;
    let via_t = j_hessian_via_t(&d).expect("S^3 tensors are symmetric");
    let input = e.to_string();
    SecondDerivativeCheck {
        mode_formula: Verdict::compare("mode_formula", &input, &(constant * &mode_sum), &oracle),
        two_route: Verdict::compare("two_route_closed_form", &input, &(constant * &via_t), &oracle),
        oracle,
        constant: constant.clone(),
        mode_sum,
        via_t,
    }
}

/// Multiplying `Z_1(t)` by a constant unit phase leaves `W(t)` unchanged.
pub fn gauge_invariance(e: &SpherePoly, scale: &BigRational, phase: &ExactScalar) -> bool {
    let a = run_oracle(e, scale).webster;
    let b = run_oracle_with(e, scale, &PathOptions { phase: Some(phase.clone()), second_order: None }).webster;
    a == b
}

/// Adding `t^2 K Zbar_1` to the frame path leaves the `t^2` coefficient of `int W` unchanged.
pub fn path_independence(e: &SpherePoly, scale: &BigRational, k: &SpherePoly) -> bool {
    let a = second_order_integral(&run_oracle(e, scale));
    let b = second_order_integral(&run_oracle_with(
        e,
        scale,
        &PathOptions { phase: None, second_order: Some(k.clone()) },
    ));
    a == b
}
