//! Floating-point sanity check of exact monomial integrals.

use crsphere::montecarlo::{monte_carlo_check, DEFAULT_SEED};

fn main() {
    let rep = monte_carlo_check(1, 4, 200_000, DEFAULT_SEED);
    for r in rep.records.iter().filter(|r| !r.exact.is_zero()) {
        println!("{:<16} exact {:<10} mc {:+.5}  se {:.5}", r.monomial, r.exact.to_string(), r.estimate_re, r.std_error);
    }
    println!("{} monomials, all within 3 SE: {}", rep.records.len(), rep.pass);
}
