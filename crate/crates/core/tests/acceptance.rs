//! Acceptance criteria 1-9. Prints one PASS/FAIL line per criterion and exits nonzero on failure.

use std::time::Instant;

use crsphere::frames::{covariant_t, covariant_z, levi_pairing, pairs, FrameForm, FrameVector};
use crsphere::montecarlo::{monte_carlo_check, DEFAULT_SEED};
use crsphere::oracle3::{
    check_connection_variation_on, check_first_variation_on, check_torsion_variation_on, hessian_constant,
    round_webster, run_oracle, second_derivative_check_on, solver_residuals_vanish, OracleRun,
};
use crsphere::ring::{monomial_pool, normal_form, rat, ExactScalar, Poly, SpherePoly};
use crsphere::spectral::{harmonic_representative, lambda, real_harmonic_spanning_set, sublaplacian};
use crsphere::suite::structured_tensors;
use crsphere::variation::{
    conformal_hessian, is_embeddable, j_hessian, j_hessian_via_t, webster_constant, webster_constant_scaled,
    yamabe_energy_series, DeformationTensor,
};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn pool_runs() -> Vec<OracleRun> {
    let s = rat(1, 1);
    monomial_pool(1, 4).into_iter().map(|m| run_oracle(&m.to_sphere(), &s)).collect()
}

fn criticality(runs: &[OracleRun]) -> Outcome {
    let bad = runs.iter().filter(|r| !r.webster.c[1].integrate().is_zero()).count();
    let unsound = runs.iter().filter(|r| !solver_residuals_vanish(r)).count();
    outcome(bad == 0 && unsound == 0, format!("{} monomials, {bad} nonzero order-t integrals, {unsound} solver residuals", runs.len()))
}

fn mode_formula(runs: &[OracleRun]) -> Outcome {
    let c = hessian_constant(&rat(1, 1));
    let bad = runs.iter().filter(|r| !second_derivative_check_on(r, &c).mode_formula.pass).count();
    let positive = c.is_real() && c.re > num::zero();
    outcome(bad == 0 && positive, format!("C = {c} (contact form theta_0, probability measure), {bad} mismatches"))
}

fn two_route() -> Outcome {
    let mut bad = 0;
    let mut count = 0;
    for (n, k) in [(1, 50), (2, 20)] {
        for e in structured_tensors(n, 3, k) {
            count += 1;
            if j_hessian(&e).unwrap().total != j_hessian_via_t(&e).unwrap() {
                bad += 1;
            }
        }
    }
    outcome(bad == 0, format!("{count} tensors (50 on S^3, 20 on S^5), {bad} mismatches"))
}

fn first_variation(runs: &[OracleRun]) -> Outcome {
    let s = rat(1, 1);
    let (mut tor, mut conn, mut w) = (0, 0, 0);
    for r in runs {
        tor += usize::from(!check_torsion_variation_on(r, &s).pass);
        conn += usize::from(!check_connection_variation_on(r).pass);
        w += usize::from(!check_first_variation_on(r, &s).pointwise.pass);
    }
    outcome(tor + conn + w == 0, format!("torsion {tor}, connection {conn}, curvature {w} mismatches over {}", runs.len()))
}

fn conformal() -> Outcome {
    let (mut cases, mut bad) = (0, 0);
    for n in 1..=3 {
        let re_z1 = &real_harmonic_spanning_set(n, 1, 0)[0];
        for d in 1..=4u32 {
            for p in 0..=d {
                let q = d - p;
                let kernel = d == 1;
                for v in real_harmonic_spanning_set(n, p, q) {
                    cases += 1;
                    let h = conformal_hessian(&v).unwrap();
                    let ok = if kernel { h.is_zero() } else { h.is_real() && h.re > num::zero() };
                    // adding a kernel direction does not change the value
                    let shifted = conformal_hessian(&(&v + re_z1)).unwrap();
                    let y = yamabe_energy_series(&v).unwrap();
                    let yam = y.c[2] == h.scale(&rat(1, 2)) && y.c[1].is_zero();
                    if !(ok && yam && shifted == h) {
                        bad += 1;
                    }
                }
            }
        }
    }
    outcome(bad == 0, format!("{cases} real harmonic v, n = 1..3, p+q <= 4, {bad} failures"))
}

fn sign_embeddability() -> Outcome {
    let (mut neg, mut zero, mut pos, mut bad) = (0, 0, 0, 0);
    let pool: Vec<SpherePoly> = monomial_pool(1, 6).into_iter().map(|m| m.to_sphere()).collect();
    for (i, e) in pool.iter().enumerate() {
        let d = DeformationTensor::scalar(e);
        let total = j_hessian(&d).unwrap().total;
        let m = e.fourier_modes().keys().next().copied().unwrap();
        let ok = match m {
            m if m <= -5 => {
                neg += 1;
                total.re < num::zero()
            }
            -4 => {
                zero += 1;
                total.is_zero()
            }
            _ => {
                pos += 1;
                total.re > num::zero()
            }
        };
        bad += usize::from(!ok || (m > -4) != is_embeddable(&d).unwrap());
        // mixtures of embeddable modes stay positive
        let other = &pool[(7 * i + 3) % pool.len()];
        let mix = e + &other.scale(&ExactScalar::complex(rat(1, 2), rat(-1, 3)));
        let dm = DeformationTensor::scalar(&mix);
        if is_embeddable(&dm).unwrap() && !mix.is_zero() {
            pos += 1;
            let t = j_hessian(&dm).unwrap().total;
            bad += usize::from(!(t.is_real() && t.re > num::zero()));
        }
    }
    outcome(bad == 0, format!("{neg} with m <= -5, {zero} with m = -4, {pos} embeddable, {bad} violations"))
}

/// `Delta_b` computed without frames: the round sphere Laplacian minus the square of the
/// unit Reeb field, quartered. On a monomial of degree `d` and weight `m` this is
/// `sum d^2/dz dw - (d(d + 2n) - m^2)/4`.
fn frame_free_sublaplacian(f: &SpherePoly) -> SpherePoly {
    let n = f.n();
    let p = f.as_poly();
    let mut out = Poly::zero(n + 1);
    for (m, c) in p.terms() {
        let mono = Poly::monomial(m.clone(), c.clone());
        let d = m.degree() as i64;
        let w = m.weight();
        let k = ExactScalar::real(rat(d * (d + 2 * n as i64) - w * w, 4));
        out = out + mono.ambient_laplacian() - mono.scale(&k);
    }
    normal_form(&out)
}

fn spectral_table() -> Outcome {
    let mut bad = 0;
    let mut rows = 0;
    for n in 1..=3 {
        for d in 0..=4u32 {
            for p in 0..=d {
                let q = d - p;
                rows += 1;
                let h = harmonic_representative(n, p, q);
                let expect = h.scale(&-ExactScalar::real(lambda(p, q, n)));
                if frame_free_sublaplacian(&h) != expect || sublaplacian(&h) != expect {
                    bad += 1;
                }
            }
        }
        for m in monomial_pool(n, 3) {
            let f = m.to_sphere();
            bad += usize::from(frame_free_sublaplacian(&f) != sublaplacian(&f));
        }
    }
    let w_theta0 = round_webster(&rat(1, 1)).as_constant().unwrap();
    let w_reeb_t = round_webster(&rat(2, 1)).as_constant().unwrap();
    let w_ok = w_theta0 == ExactScalar::real(webster_constant(1))
        && w_reeb_t == ExactScalar::real(webster_constant_scaled(1, &rat(2, 1)))
        && w_reeb_t == ExactScalar::real(rat(1, 1));
    outcome(
        bad == 0 && w_ok,
        format!(
            "{rows} eigenvalue rows, {bad} mismatches; oracle W0 = {w_reeb_t} = n(n+1)/2 for the form with Reeb field T, {w_theta0} = n(n+1) for theta_0"
        ),
    )
}

fn frame_identities() -> Outcome {
    let mut bad = 0;
    let mut checks = 0;
    let mi = ExactScalar::complex(rat(0, 1), rat(-1, 1));
    for n in 1..=3 {
        let t = FrameVector::t_field(n);
        let dth = FrameForm::contact(n, &ExactScalar::one()).d();
        for (j, k) in pairs(n) {
            let z = FrameVector::z_field(n, j, k);
            checks += 2;
            bad += usize::from(t.bracket(&z) != z.scale(&mi));
            bad += usize::from(covariant_t(&z) != z.scale(&mi));
            for (l, m) in pairs(n) {
                let y = FrameVector::z_field(n, l, m);
                checks += 2;
                bad += usize::from(!covariant_z(&z, &y).unwrap().is_zero());
                // Levi sign: -i d theta is positive definite
                let lhs = dth.eval2(&y, &z.conjugate()).scale(&mi);
                bad += usize::from(lhs != y.theta_jk(j, k));
            }
        }
        for i in 0..10 {
            let coeffs: Vec<SpherePoly> = monomial_pool(n, 2).into_iter().map(|m| m.to_sphere()).collect();
            let v = pairs(n).iter().enumerate().fold(FrameVector::zero(n), |acc, (r, &(j, k))| {
                acc.add(&FrameVector::z_field(n, j, k).mul_poly(&coeffs[(i + 3 * r) % coeffs.len()]))
            });
            let sum = pairs(n).iter().fold(SpherePoly::zero(n), |acc, &(j, k)| {
                let c = v.theta_jk(j, k);
                &acc + &(&c * &c.conjugate())
            });
            checks += 2;
            bad += usize::from(levi_pairing(&v, &v).unwrap() != sum);
            bad += usize::from(FrameVector::from_geller(n, &v.geller_components()) != v);
        }
    }
    outcome(bad == 0, format!("{checks} identities for n = 1..3 (sharp map with -i d theta), {bad} failures"))
}

fn monte_carlo() -> Outcome {
    let start = Instant::now();
    let rep = monte_carlo_check(1, 6, 1_000_000, DEFAULT_SEED);
    let bad = rep.records.iter().filter(|r| !r.within_3se).count();
    let secs = start.elapsed().as_secs_f64();
    outcome(rep.pass && secs < 60.0, format!("{} monomials, 10^6 samples, seed {:#x}, {bad} outside 3 SE, {secs:.1}s", rep.records.len(), rep.seed))
}

fn main() {
    let start = Instant::now();
    let runs = pool_runs();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("criticality", Box::new(|| criticality(&runs))),
        ("mode formula", Box::new(|| mode_formula(&runs))),
        ("two-route Hessian", Box::new(two_route)),
        ("first-variation formulas", Box::new(|| first_variation(&runs))),
        ("conformal Hessian", Box::new(conformal)),
        ("sign/embeddability", Box::new(sign_embeddability)),
        ("spectral table", Box::new(spectral_table)),
        ("frame identities", Box::new(frame_identities)),
        ("exact vs Monte-Carlo", Box::new(monte_carlo)),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let o = f();
        failed += usize::from(!o.pass);
        println!(
            "criterion {}: {} {name}: {} [{:.2?}]",
            i + 1,
            if o.pass { "PASS" } else { "FAIL" },
            o.detail,
            t.elapsed()
        );
    }
    println!("acceptance: {} of 9 passed in {:.2?}", 9 - failed, start.elapsed());
    if failed > 0 {
        std::process::exit(1);
    }
}
