//! Second variation of the Webster functional in the conformal direction.

use crsphere::spectral::real_harmonic_spanning_set;
use crsphere::variation::{conformal_hessian, conformal_hessian_scaled, webster_constant, yamabe_energy_series};

fn main() -> crsphere::Result<()> {
    for n in 1..=2 {
        println!("n = {n}, W0 = {}", webster_constant(n));
        for (p, q) in [(1, 0), (2, 0), (1, 1), (2, 1)] {
            let v = &real_harmonic_spanning_set(n, p, q)[0];
            let series = yamabe_energy_series(v)?;
            println!(
                "  H_({p},{q}) v = {v}: hessian = {}, with volume {}, yamabe t^2 = {}",
                conformal_hessian(v)?,
                conformal_hessian_scaled(v)?,
                series.c[2]
            );
        }
    }
    Ok(())
}
