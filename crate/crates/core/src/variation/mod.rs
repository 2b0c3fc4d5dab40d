//! Deformations of the CR structure and the Hessians of the normalized Webster functional.

pub mod conformal;
pub mod deformation;
pub mod hessian;

pub use conformal::{
    b_n, conformal_first_variation, conformal_hessian, conformal_hessian_scaled, first_variation_for_curvature,
    webster_constant, webster_constant_scaled, yamabe_energy_series,
};
pub use deformation::{
    check_symmetry, embeddability, fourier_modes, is_embeddable, validate_symmetry, DeformationTensor, Embeddability,
    FourierModes,
};
pub use hessian::{j_hessian, j_hessian_via_t, volume_prefactor, HessianReport, ModeRow};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{rat, ExactScalar, SpherePoly};

    fn mono(z: [u16; 2], w: [u16; 2]) -> SpherePoly {
        SpherePoly::monomial(1, &z, &w, ExactScalar::one())
    }

    #[test]
    fn symmetry_examples() {
        assert!(validate_symmetry(&DeformationTensor::scalar(&mono([1, 0], [0, 3]))));
        let one = SpherePoly::one(2);
        let sym = DeformationTensor::from_lowered(2, &[(1, 2, one.clone()), (2, 1, one.clone())]);
        assert!(validate_symmetry(&sym));
        let anti = DeformationTensor::from_lowered(2, &[(1, 2, one.clone()), (2, 1, -one)]);
        assert!(!validate_symmetry(&anti));
        assert!(j_hessian(&anti).is_err());
    }

    #[test]
    fn mode_examples() {
        let e = &mono([1, 0], [0, 1]) + &mono([0, 0], [5, 0]);
        let fm = fourier_modes(&DeformationTensor::scalar(&e));
        let keys: Vec<i64> = fm.modes.keys().copied().collect();
        assert_eq!(keys, vec![-5, 0]);
        assert_eq!(fm.modes[&-5].scalar_coefficient().unwrap(), mono([0, 0], [5, 0]));
    }

    #[test]
    fn embeddability_examples() {
        assert!(!is_embeddable(&DeformationTensor::scalar(&mono([0, 0], [1, 3]))).unwrap());
        assert!(is_embeddable(&DeformationTensor::scalar(&SpherePoly::one(1))).unwrap());
        assert!(is_embeddable(&DeformationTensor::scalar(&mono([0, 1], [4, 0]))).unwrap());
        assert!(is_embeddable(&DeformationTensor::scalar(&SpherePoly::one(2))).is_err());
    }

    #[test]
    fn j_hessian_examples() {
        let c = ExactScalar::complex(rat(1, 2), rat(-1, 3));
        let e = DeformationTensor::scalar(&SpherePoly::constant(1, c.clone()));
        let expect = ExactScalar::real(c.norm_sqr()) * ExactScalar::from_int(4);
        assert_eq!(j_hessian(&e).unwrap().total, expect);
        assert_eq!(j_hessian_via_t(&e).unwrap(), expect);
        let m4 = DeformationTensor::scalar(&mono([0, 0], [1, 3]));
        assert!(j_hessian(&m4).unwrap().total.is_zero());
        assert!(j_hessian_via_t(&m4).unwrap().is_zero());
        let m5 = DeformationTensor::scalar(&mono([0, 0], [5, 0]));
        assert_eq!(j_hessian(&m5).unwrap().total, ExactScalar::ratio(-1, 6));
        assert_eq!(j_hessian_via_t(&m5).unwrap(), ExactScalar::ratio(-1, 6));
        assert!(j_hessian_via_t(&DeformationTensor::scalar(&SpherePoly::zero(1))).unwrap().is_zero());
    }

    #[test]
    fn conformal_examples() {
        let re = (&SpherePoly::z(1, 1) + &SpherePoly::w(1, 1)).scale(&ExactScalar::ratio(1, 2));
        assert!(conformal_hessian(&re).unwrap().is_zero());
        assert!(conformal_first_variation(&re).unwrap().is_zero());
        assert!(conformal_first_variation(&SpherePoly::one(1)).unwrap().is_zero());
        // H_{1,1}: 2 * b_1 * (2 lambda - n) ||v||^2 = 2 * 4 * 3 * (1/3) = 8
        let v = &mono([1, 0], [1, 0]) - &mono([0, 1], [0, 1]);
        assert_eq!(conformal_hessian(&v).unwrap(), ExactScalar::from_int(8));
        let s = yamabe_energy_series(&v).unwrap();
        assert_eq!(s.c[2], conformal_hessian(&v).unwrap().scale(&rat(1, 2)));
        // Re z1^2 in H_{2,0} + H_{0,2}: factor 2n - n = 1, ||v||^2 = 1/6
        let r2 = (&mono([2, 0], [0, 0]) + &mono([0, 0], [2, 0])).scale(&ExactScalar::ratio(1, 2));
        assert_eq!(conformal_hessian(&r2).unwrap(), ExactScalar::ratio(4, 3));
        assert!(matches!(conformal_hessian(&SpherePoly::one(1)), Err(crate::Error::NonZeroAverage(_))));
    }
}
