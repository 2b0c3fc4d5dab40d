//! Embeddability of pure-mode deformations of S^3 against the sign of the Hessian.

use crsphere::ring::monomial_pool;
use crsphere::variation::{embeddability, fourier_modes, j_hessian, DeformationTensor};

fn main() {
    for m in monomial_pool(1, 6) {
        let e = DeformationTensor::scalar(&m.to_sphere());
        let modes = fourier_modes(&e);
        let weight = *modes.modes.keys().next().expect("monomial has one mode");
        if weight > -3 {
            continue;
        }
        let rep = j_hessian(&e).expect("symmetric");
        println!("{:<20} m = {weight:>2}  hessian = {:<16} {:?}", m.to_sphere().to_string(), rep.total.to_string(), embeddability(&e));
    }
}
