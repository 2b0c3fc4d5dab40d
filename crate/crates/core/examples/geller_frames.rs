//! Geller frame fields on S^5: Levi pairings, brackets and the covariant derivative.

use crsphere::frames::{covariant_t, covariant_z, levi_pairing, pairs, FrameVector};

fn main() -> crsphere::Result<()> {
    let n = 2;
    let t = FrameVector::t_field(n);
    for (j, k) in pairs(n) {
        let z = FrameVector::z_field(n, j, k);
        println!("Z{j}{k}: tangential = {}, [T, Z] = -iZ: {}", z.is_tangential(), t.bracket(&z) == covariant_t(&z));
    }
    let z12 = FrameVector::z_field(n, 1, 2);
    let z13 = FrameVector::z_field(n, 1, 3);
    println!("L(Z12, Z13) = {}", levi_pairing(&z12, &z13)?);
    println!("L(Z12, Z12) = {}", levi_pairing(&z12, &z12)?);
    println!("nabla_Z12 Z13 = 0: {}", covariant_z(&z12, &z13)?.is_zero());
    println!("nabla_Z12 Zbar13 = {:?}", covariant_z(&z12, &z13.conjugate())?);
    Ok(())
}
