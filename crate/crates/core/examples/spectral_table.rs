//! Sub-Laplacian eigenvalues and the harmonic decomposition of a sample function.

use crsphere::ring::SpherePoly;
use crsphere::spectral::{dirichlet_energy, eigen_table, harmonic_decompose, sublaplacian};

fn main() {
    for n in 1..=3 {
        let row: Vec<String> = eigen_table(n, 2).iter().map(|r| format!("({},{}):{}", r.p, r.q, r.lambda)).collect();
        println!("n = {n}: {}", row.join("  "));
    }
    let n = 1;
    let f = &(&SpherePoly::z(n, 1) * &SpherePoly::w(n, 1)) - &(&SpherePoly::z(n, 2) * &SpherePoly::w(n, 2));
    let dec = harmonic_decompose(&f);
    for ((p, q), c) in &dec.components {
        println!("H_({p},{q}) part: {c}");
    }
    println!("Delta_b f = {}", sublaplacian(&f));
    println!("energy = {}", dirichlet_energy(&f).expect("real"));
}
