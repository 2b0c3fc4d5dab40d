//! Runs the verification suites for S^5 and prints a summary.

use crsphere::suite::{run_suite, SuiteConfig};

fn main() -> crsphere::Result<()> {
    let cfg = SuiteConfig::from_toml("n = 2\ndegree = 3\nsuites = [\"ring\", \"spectral\", \"frames\", \"variation\"]\n")?;
    let report = run_suite(&cfg)?;
    for s in &report.suites {
        println!("{:<10} {} / {} passed", s.name, s.cases - s.failures, s.cases);
    }
    println!("W0 = {}, C = {}", report.conventions.webster_w0, report.conventions.hessian_constant_c);
    Ok(())
}
