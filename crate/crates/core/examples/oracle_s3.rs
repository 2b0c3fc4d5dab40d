//! Runs the S^3 structure-equation oracle over every monomial deformation of degree <= 4.

use crsphere::oracle3::{hessian_constant, run_oracle, second_derivative_check_on, solver_residuals_vanish};
use crsphere::ring::{monomial_pool, rat};

fn main() {
    for s in [rat(1, 1), rat(2, 1)] {
        println!("contact scale {s}: C = {}", hessian_constant(&s));
    }
    let s = rat(1, 1);
    let c = hessian_constant(&s);
    let start = std::time::Instant::now();
    let mut failures = 0;
    for m in monomial_pool(1, 4) {
        let e = m.to_sphere();
        let run = run_oracle(&e, &s);
        let sd = second_derivative_check_on(&run, &c);
        let ok = solver_residuals_vanish(&run) && sd.mode_formula.pass && run.webster.c[1].integrate().is_zero();
        if !ok {
            failures += 1;
        }
        println!("{:<28} d2 = {:<12} {}", e.to_string(), sd.oracle.to_string(), if ok { "ok" } else { "FAIL" });
    }
    println!("{failures} failures in {:.2?}", start.elapsed());
}
