//! Normal forms, exact integrals and Fourier weights in the sphere ring.

use crsphere::ring::{parse_sphere_poly, ExactScalar, SpherePoly};

fn main() -> crsphere::Result<()> {
    let n = 1;
    let z1 = SpherePoly::z(n, 1);
    let w1 = SpherePoly::w(n, 1);
    // |z1|^2 + |z2|^2 = 1, so z1 w1 reduces against z2 w2
    let r = &(&z1 * &w1) + &(&SpherePoly::z(n, 2) * &SpherePoly::w(n, 2));
    println!("z1w1 + z2w2 = {r}");

    let f = parse_sphere_poly(n, "(1/1,0/1)z1^2 w1^2 + (0/1,1/1)z2 w1")?;
    println!("f = {f}");
    println!("int f = {}", f.integrate());
    println!("conj f = {}", f.conjugate());
    for (m, part) in f.fourier_modes() {
        println!("weight {m:>2}: {part}");
    }
    let g = f.scale(&ExactScalar::ratio(1, 3));
    println!("||f/3||^2 = {}", g.norm_sqr());
    Ok(())
}
