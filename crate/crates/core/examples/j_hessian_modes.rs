//! Hessian in the CR-deformation direction, mode by mode, on S^3 and S^5.

use crsphere::ring::{ExactScalar, SpherePoly};
use crsphere::variation::{j_hessian, j_hessian_via_t, DeformationTensor};

fn main() -> crsphere::Result<()> {
    let mono = |z: [u16; 2], w: [u16; 2]| SpherePoly::monomial(1, &z, &w, ExactScalar::one());
    for e in [mono([0, 0], [0, 0]), mono([2, 0], [0, 0]), mono([0, 0], [0, 4]), mono([0, 0], [3, 3]), mono([0, 0], [0, 6])] {
        let d = DeformationTensor::scalar(&e);
        let rep = j_hessian(&d)?;
        let modes: Vec<String> = rep.modes.iter().map(|r| format!("m={} ||.||^2={}", r.m, r.norm_sqr)).collect();
        println!("E = {e}: {} | total {} | via T {} | {:?}", modes.join(", "), rep.total, j_hessian_via_t(&d)?, rep.embeddability);
    }
    let f = SpherePoly::z(2, 1);
    let d = DeformationTensor::from_lowered(2, &[(1, 2, f.clone()), (2, 1, f)]);
    let rep = j_hessian(&d)?;
    println!("S^5, B_12 = B_21 = z1: total {} = {}", rep.total, rep.total_with_volume);
    Ok(())
}
