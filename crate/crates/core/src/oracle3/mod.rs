//! Independent check on `S^3`: deform the CR frame by a polynomial `E`, solve Cartan's
//! structure equations as exact series in `t`, and read off torsion, connection and
//! Webster curvature.

pub mod checks;
pub mod coframe;
pub mod structure;

pub use checks::{
    base_sanity, check_connection_variation_on, check_first_variation, check_first_variation_on,
    check_torsion_variation, check_torsion_variation_on, connection_closed_form, gauge_invariance, hessian_constant,
    path_independence, run_oracle, run_oracle_with, second_derivative_check, second_derivative_check_on,
    second_order_integral, solver_residuals_vanish, torsion_closed_form, webster_closed_form, FirstVariationCheck,
    OracleRun, SecondDerivativeCheck, Verdict,
};
pub use coframe::{deform_frame, deform_frame_with, BaseFrame, DeformedCoframe, PathOptions, Series, SeriesForm, SeriesVector};
pub use structure::{reality_residual, round_webster, solve_structure, structure_residual, webster_series, PseudohermitianSeries};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{rat, ExactScalar, SpherePoly};
    use num::rational::BigRational;

    fn one() -> BigRational {
        rat(1, 1)
    }

    fn mono(z: [u16; 2], w: [u16; 2]) -> SpherePoly {
        SpherePoly::monomial(1, &z, &w, ExactScalar::one())
    }

    #[test]
    fn base_structure_constants() {
        for s in [rat(1, 1), rat(2, 1)] {
            let b = BaseFrame::new(&s);
            let si = ExactScalar::real(s.clone());
            // d theta = s i theta^1 ^ theta^1bar
            assert_eq!(b.structure[0][1][2], SpherePoly::constant(1, &si * &ExactScalar::i()));
            // d theta^1 = (2i/s) theta ^ theta^1
            let c = &ExactScalar::complex(rat(0, 1), rat(2, 1)) / &si;
            assert_eq!(b.structure[1][0][1], SpherePoly::constant(1, c));
            assert!(b.structure[1][1][2].is_zero());
        }
    }

    #[test]
    fn round_sphere_curvature() {
        assert_eq!(round_webster(&rat(1, 1)), SpherePoly::constant(1, ExactScalar::from_int(2)));
        assert_eq!(round_webster(&rat(2, 1)), SpherePoly::one(1));
    }

    #[test]
    fn zero_deformation_is_trivial() {
        let run = run_oracle(&SpherePoly::zero(1), &one());
        assert!(run.coframe.gamma.is_zero());
        assert!(run.series.torsion.is_zero());
        assert!(run.webster.c[1].is_zero() && run.webster.c[2].is_zero());
    }

    #[test]
    fn constant_deformation() {
        let c = ExactScalar::complex(rat(1, 3), rat(1, 2));
        let e = SpherePoly::constant(1, c.clone());
        let run = run_oracle(&e, &one());
        // order-1 slice of Z_1(t) is -i c Zbar_1
        assert_eq!(run.coframe.z1.c[2].c[1], e.scale(&ExactScalar::i().conj()));
        assert!(solver_residuals_vanish(&run));
        // Adot = -4 conj(c) for the Reeb field 2T
        assert_eq!(run.series.torsion.c[1], SpherePoly::constant(1, c.conj().scale(&rat(-4, 1))));
        assert!(run.webster.c[1].is_zero());
    }

    #[test]
    fn checks_on_a_few_monomials() {
        let c = hessian_constant(&one());
        for e in [mono([0, 0], [1, 3]), mono([1, 0], [0, 2]), mono([0, 1], [4, 0]), mono([2, 0], [0, 0])] {
            let run = run_oracle(&e, &one());
            assert!(solver_residuals_vanish(&run), "{e:?}");
            assert!(base_sanity(&run));
            let fv = check_first_variation_on(&run, &one());
            assert!(fv.pointwise.pass && fv.integral.pass, "{fv:?}");
            assert!(check_torsion_variation_on(&run, &one()).pass);
            assert!(check_connection_variation_on(&run).pass, "{:?}", check_connection_variation_on(&run));
            let sd = second_derivative_check_on(&run, &c);
            assert!(sd.mode_formula.pass, "{sd:?}");
        }
    }
}
