//! Verification suites, deformation analysis and the JSON report.

use std::fmt::Display;
use std::path::{Path, PathBuf};

use num::rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::frames::{
    covariant_t, covariant_z, covariant_z_closed_form, d_theta0_closed_form, frame_sublaplacian, pairs,
    theta_on_z_closed_form, FrameForm, FrameVector,
};
use crate::montecarlo::{monte_carlo_check, McReport, DEFAULT_SEED};
use crate::oracle3::{self, Verdict};
use crate::ring::quadrature::simplex_moment;
use crate::ring::{monomial_pool, normal_form, parse_deformation_file, rat, ExactScalar, Monomial, SpherePoly};
use crate::spectral::{self, harmonic_decompose, lambda, sublaplacian};
use crate::variation::{
    self, conformal_hessian, fourier_modes, is_embeddable, j_hessian, j_hessian_via_t, validate_symmetry,
    yamabe_energy_series, DeformationTensor, HessianReport,
};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Ring,
    Spectral,
    Frames,
    Variation,
    Oracle3,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Ring, Suite::Spectral, Suite::Frames, Suite::Variation, Suite::Oracle3];

    pub fn parse_list(names: &[String]) -> Result<Vec<Suite>, Error> {
        let mut out = Vec::new();
        for name in names {
            match name.trim().to_ascii_lowercase().as_str() {
                "all" => out.extend(Suite::ALL),
                "ring" => out.push(Suite::Ring),
                "spectral" => out.push(Suite::Spectral),
                "frames" => out.push(Suite::Frames),
                "variation" => out.push(Suite::Variation),
                "oracle3" => out.push(Suite::Oracle3),
                other => return Err(Error::Config(format!("unknown suite `{other}`"))),
            }
        }
        out.sort();
        out.dedup();
        if out.is_empty() {
            return Err(Error::Config("no suites selected".into()));
        }
        Ok(out)
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Ring => "ring",
            Suite::Spectral => "spectral",
            Suite::Frames => "frames",
            Suite::Variation => "variation",
            Suite::Oracle3 => "oracle3",
        }
    }
}

/// Suite configuration, read from a TOML key-value file and overridable from the command line.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteConfig {
    #[serde(default = "one")]
    pub n: usize,
    #[serde(default = "four")]
    pub degree: u32,
    #[serde(default = "all")]
    pub suites: Vec<String>,
    #[serde(default)]
    pub samples: usize,
    #[serde(default)]
    pub seed: Option<u64>,
    #[serde(default)]
    pub output: Option<PathBuf>,
}

fn one() -> usize {
    1
}
fn four() -> u32 {
    4
}
fn all() -> Vec<String> {
    vec!["all".into()]
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { n: 1, degree: 4, suites: all(), samples: 0, seed: None, output: None }
    }
}

impl SuiteConfig {
    pub fn from_toml(text: &str) -> Result<Self, Error> {
        toml::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self, Error> {
        Self::from_toml(&std::fs::read_to_string(path)?)
    }

    pub fn validate(&self) -> Result<Vec<Suite>, Error> {
        if self.degree < 1 {
            return Err(Error::Config("degree bound must be at least 1".into()));
        }
        if self.n < 1 {
            return Err(Error::Config("dimension n must be at least 1".into()));
        }
        if self.n > 3 {
            return Err(Error::UnsupportedDimension {
                n: self.n,
                reason: "pool suites support n <= 3".into(),
            });
        }
        Suite::parse_list(&self.suites)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub pass: bool,
    pub cases: usize,
    pub failures: usize,
    pub records: Vec<Verdict>,
}

impl SuiteReport {
    fn new(name: &str, records: Vec<Verdict>) -> Self {
        let failures = records.iter().filter(|v| !v.pass).count();
        SuiteReport { name: name.into(), pass: failures == 0, cases: records.len(), failures, records }
    }
}

/// Normalizations used throughout, with the values that pin them.
#[derive(Clone, Debug, Serialize)]
pub struct Conventions {
    pub n: usize,
    pub contact_form: String,
    pub t_field: String,
    pub reeb_field: String,
    pub levi_form: String,
    pub sharp_map: String,
    pub kappa: i64,
    pub b_n: ExactScalar,
    pub webster_w0: ExactScalar,
    pub webster_w0_contact_2theta0: ExactScalar,
    pub oracle_w0_s3_theta0: ExactScalar,
    pub oracle_w0_s3_2theta0: ExactScalar,
    pub hessian_constant_c: ExactScalar,
    pub hessian_constant_c_2theta0: ExactScalar,
    pub volume: String,
    pub torsion: String,
    pub embeddability: String,
}

pub fn conventions(n: usize) -> Conventions {
    let s1 = rat(1, 1);
    let s2 = rat(2, 1);
    let w = |s: &BigRational| oracle3::round_webster(s).as_constant().expect("round curvature is constant");
    Conventions {
        n,
        contact_form: "theta_0 = (i/2) sum_a (z_a dw_a - w_a dz_a), w_a = conj(z_a)".into(),
        t_field: "T = (i/2) sum_a (z_a d/dz_a - w_a d/dw_a); T acts on Gamma_m as i m/2".into(),
        reeb_field: "theta_0(T) = 1/2, so the Reeb field of theta_0 is 2T".into(),
        levi_form: "L(V, W) = -i d theta_0(V, conj W) = sum_a v_a conj(w_a), linear in V; d theta_0 = i sum dz ^ dw".into(),
        sharp_map: "sharp^{-1}(Zbar_jk) = theta_jk with respect to -i d theta_0 (positive definite)".into(),
        kappa: spectral::KAPPA,
        b_n: ExactScalar::real(variation::b_n(n)),
        webster_w0: ExactScalar::real(variation::webster_constant(n)),
        webster_w0_contact_2theta0: ExactScalar::real(variation::webster_constant_scaled(n, &s2)),
        oracle_w0_s3_theta0: w(&s1),
        oracle_w0_s3_2theta0: w(&s2),
        hessian_constant_c: oracle3::hessian_constant(&s1),
        hessian_constant_c_2theta0: oracle3::hessian_constant(&s2),
        volume: format!(
            "integrals use the probability measure; Vol = (2pi)^{}; normalized-functional Hessians carry Vol^(1/{})",
            n + 1,
            n + 1
        ),
        torsion: "A = A^1_{1bar} = -i Ebar_{,0} along the Reeb field; E = c constant gives Adot = -4 conj(c) for theta_0".into(),
        embeddability: "S^3: no Fourier mode m <= -4 in E_1^{1bar}; n > 1: always embeddable".into(),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub version: String,
    pub config: SuiteConfig,
    pub pass: bool,
    pub suites: Vec<SuiteReport>,
    pub conventions: Conventions,
    /// Floating-point cross-check; never affects `pass`.
    pub monte_carlo: Option<McReport>,
}

fn eq<T: PartialEq + Display>(name: &str, input: impl Display, expected: &T, actual: &T) -> Verdict {
    Verdict::compare(name, &input.to_string(), expected, actual)
}

fn holds(name: &str, input: impl Display, expected: &str, actual: impl Display, pass: bool) -> Verdict {
    Verdict { name: name.into(), input: input.to_string(), expected: expected.into(), actual: actual.to_string(), pass }
}

fn real_parts(p: &SpherePoly) -> [SpherePoly; 2] {
    let pb = p.conjugate();
    let re = (p + &pb).scale(&ExactScalar::ratio(1, 2));
    let im = (p - &pb).scale(&ExactScalar::complex(rat(0, 1), rat(-1, 2)));
    [re, im]
}

fn ring_suite(n: usize, degree: u32) -> Vec<Verdict> {
    let pool = monomial_pool(n, degree);
    let per: Vec<Vec<Verdict>> = pool
        .par_iter()
        .enumerate()
        .map(|(i, m)| {
            let p = m.to_sphere();
            let label = p.to_string();
            let mut out = vec![eq("normal_form_idempotent", &label, &p, &normal_form(p.as_poly()))];
            let q = pool[(i * 7 + 3) % pool.len()].to_sphere();
            let raw = m_times(m, &pool[(i * 7 + 3) % pool.len()]);
            out.push(eq("normal_form_product", format!("{label} * {q}"), &normal_form(&raw), &(&p * &q)));
            if m.z() == m.w() {
                let oracle = ExactScalar::real(simplex_moment(m.z()));
                out.push(eq("integral_vs_simplex_quadrature", &label, &oracle, &p.integrate()));
            }
            if p.fourier_project(0).is_zero() {
                out.push(eq("circle_invariance", &label, &ExactScalar::zero(), &p.integrate()));
            }
            let c = p.scale(&ExactScalar::complex(rat(1, 2), rat(3, 1)));
            out.push(eq("conjugate_commutes_with_integral", &label, &c.integrate().conj(), &c.conjugate().integrate()));
            out
        })
        .collect();
    per.into_iter().flatten().collect()
}

fn m_times(a: &Monomial, b: &Monomial) -> crate::ring::Poly {
    crate::ring::Poly::monomial(a.mul(b), ExactScalar::one())
}

fn spectral_suite(n: usize, degree: u32) -> Vec<Verdict> {
    let mut out = Vec::new();
    for d in 0..=degree.min(4) {
        for p in 0..=d {
            let q = d - p;
            let h = spectral::harmonic_representative(n, p, q);
            let lh = sublaplacian(&h);
            out.push(eq("eigenvalue", format!("H_{{{p},{q}}}"), &h.scale(&-ExactScalar::real(lambda(p, q, n))), &lh));
            out.push(eq("frame_sublaplacian_eigenvalue", format!("H_{{{p},{q}}}"), &lh, &frame_sublaplacian(&h)));
        }
    }
    let pool = monomial_pool(n, degree);
    let per: Vec<Vec<Verdict>> = pool
        .par_iter()
        .map(|m| {
            let f = m.to_sphere();
            let label = f.to_string();
            let dec = harmonic_decompose(&f);
            let mut v = vec![eq("reconstruction", &label, &f, &dec.sum())];
            for (&(p, q), c) in &dec.components {
                let expect = c.scale(&-ExactScalar::real(lambda(p, q, n)));
                v.push(eq("component_eigenvalue", format!("{label} [{p},{q}]"), &expect, &sublaplacian(c)));
                let w = p as i64 - q as i64;
                v.push(eq("component_weight", format!("{label} [{p},{q}]"), c, &c.fourier_project(w)));
            }
            v.push(eq("frame_vs_spectral_sublaplacian", &label, &sublaplacian(&f), &frame_sublaplacian(&f)));
            for r in real_parts(&f) {
                if r.is_zero() {
                    continue;
                }
                let energy = spectral::dirichlet_energy(&r).expect("real input");
                let quad = (&r * &sublaplacian(&r)).integrate();
                v.push(holds("negativity", &r, "<= 0", &quad, quad.is_real() && quad.re <= num::zero()));
                let avg = r.integrate();
                let gap = &energy - &ExactScalar::real(rat(n as i64, 1) * (r.norm_sqr() - avg.norm_sqr()));
                let linear = dec_is_linear(&harmonic_decompose(&r));
                let ok = gap.is_real() && if linear { gap.is_zero() } else { gap.re > num::zero() };
                v.push(holds("energy_gap", &r, if linear { "= 0" } else { "> 0" }, &gap, ok));
            }
            v
        })
        .collect();
    out.extend(per.into_iter().flatten());
    // self-adjointness on consecutive pairs of real parts
    let reals: Vec<SpherePoly> = pool
        .iter()
        .filter(|m| m.degree() <= 4)
        .flat_map(|m| real_parts(&m.to_sphere()))
        .filter(|r| !r.is_zero())
        .collect();
    let pairs_sa: Vec<Verdict> = reals
        .par_windows(2)
        .map(|w| {
            let a = (&w[0] * &sublaplacian(&w[1])).integrate();
            let b = (&w[1] * &sublaplacian(&w[0])).integrate();
            eq("self_adjoint", format!("{} | {}", w[0], w[1]), &a, &b)
        })
        .collect();
    out.extend(pairs_sa);
    out
}

fn dec_is_linear(d: &spectral::HarmonicDecomposition) -> bool {
    d.components.keys().all(|k| matches!(k, (0, 0) | (1, 0) | (0, 1)))
}

fn frames_suite(n: usize, degree: u32) -> Vec<Verdict> {
    let mut out = Vec::new();
    let t = FrameVector::t_field(n);
    let mi = ExactScalar::complex(rat(0, 1), rat(-1, 1));
    let dth = FrameForm::contact(n, &ExactScalar::one()).d();
    out.push(eq_form(n, &dth));
    for (j, k) in pairs(n) {
        let z = FrameVector::z_field(n, j, k);
        let lab = format!("Z{j}{k}");
        out.push(holds("tangency", &lab, "true", z.is_tangential(), z.is_tangential()));
        out.push(eq_vec("bracket_T_Z", &lab, &z.scale(&mi), &t.bracket(&z)));
        out.push(eq_vec("covariant_T_Z", &lab, &z.scale(&mi), &covariant_t(&z)));
        for (l, m) in pairs(n) {
            let y = FrameVector::z_field(n, l, m);
            let lab2 = format!("Z{j}{k}, Z{l}{m}");
            out.push(eq_vec("nabla_Z_Z_vanishes", &lab2, &FrameVector::zero(n), &covariant_z(&z, &y).unwrap()));
            out.push(eq_vec(
                "nabla_Z_Zbar_closed_form",
                &lab2,
                &covariant_z_closed_form(n, (j, k), (l, m)),
                &covariant_z(&z, &y.conjugate()).unwrap(),
            ));
            // -i d theta(Z_lm, Zbar_jk) = theta_jk(Z_lm)
            let lhs = dth.eval2(&y, &z.conjugate()).scale(&mi);
            out.push(eq("sharp_consistency", format!("Z{l}{m}, Zbar{j}{k}"), &y.theta_jk(j, k), &lhs));
            out.push(eq("theta_on_z_closed_form", format!("theta{j}{k}(Z{l}{m})"), &theta_on_z_closed_form(n, (j, k), (l, m)), &y.theta_jk(j, k)));
        }
    }
    // Parseval and reconstruction for V = sum f_jk Z_jk with monomial coefficients
    let coeffs: Vec<SpherePoly> = monomial_pool(n, degree.min(3)).into_iter().map(|m| m.to_sphere()).collect();
    let ps = pairs(n);
    let per: Vec<Vec<Verdict>> = (0..coeffs.len())
        .into_par_iter()
        .map(|i| {
            let v = ps.iter().enumerate().fold(FrameVector::zero(n), |acc, (r, &(j, k))| {
                let f = &coeffs[(i + 5 * r) % coeffs.len()];
                acc.add(&FrameVector::z_field(n, j, k).mul_poly(f))
            });
            let lab = format!("{v:?}");
            let norm = crate::frames::levi_pairing(&v, &v).unwrap();
            let sum = ps.iter().fold(SpherePoly::zero(n), |acc, &(j, k)| {
                let c = v.theta_jk(j, k);
                &acc + &(&c * &c.conjugate())
            });
            let back = FrameVector::from_geller(n, &v.geller_components());
            let f = &coeffs[i];
            let leib = covariant_t(&v.mul_poly(f));
            let leib_expect = v.mul_poly(&t.apply(f)).add(&covariant_t(&v).mul_poly(f));
            vec![
                eq("parseval", &lab, &norm, &sum),
                eq_vec("tight_reconstruction", &lab, &v, &back),
                eq_vec("leibniz_T", &lab, &leib_expect, &leib),
            ]
        })
        .collect();
    out.extend(per.into_iter().flatten());
    out
}

fn eq_form(n: usize, d: &FrameForm) -> Verdict {
    let expect = d_theta0_closed_form(n);
    Verdict {
        name: "d_theta0".into(),
        input: "theta_0".into(),
        expected: format!("{expect:?}"),
        actual: format!("{d:?}"),
        pass: *d == expect,
    }
}

fn eq_vec(name: &str, input: impl Display, e: &FrameVector, a: &FrameVector) -> Verdict {
    Verdict { name: name.into(), input: input.to_string(), expected: format!("{e:?}"), actual: format!("{a:?}"), pass: e == a }
}

/// Symmetric lowered tensors on `S^{2n+1}` built from the monomial pool.
pub fn structured_tensors(n: usize, degree: u32, count: usize) -> Vec<DeformationTensor> {
    let pool: Vec<SpherePoly> = monomial_pool(n, degree).into_iter().map(|m| m.to_sphere()).collect();
    let amb = n + 1;
    (0..count)
        .map(|i| {
            let a = 1 + i % amb;
            let b = 1 + (i / amb + i) % amb;
            let f = &pool[(3 * i + 1) % pool.len()];
            let g = &pool[(5 * i + 2) % pool.len()];
            let mut entries = vec![(a, b, f.clone())];
            if a != b {
                entries.push((b, a, f.clone()));
            }
            entries.push((1, 1, g.scale(&ExactScalar::complex(rat(1, 2), rat(1, 3)))));
            DeformationTensor::from_lowered(n, &entries)
        })
        .collect()
}

fn variation_suite(n: usize, degree: u32) -> Vec<Verdict> {
    let mut out = Vec::new();
    let tensors: Vec<DeformationTensor> = if n == 1 {
        monomial_pool(1, degree.max(5).min(6))
            .into_iter()
            .map(|m| DeformationTensor::scalar(&m.to_sphere()))
            .chain(structured_tensors(1, 3, 20))
            .collect()
    } else {
        structured_tensors(n, 3, 20)
    };
    let per: Vec<Vec<Verdict>> = tensors
        .par_iter()
        .map(|e| {
            let lab = tensor_label(e);
            let rep = j_hessian(e).expect("symmetric by construction");
            let via = j_hessian_via_t(e).expect("symmetric by construction");
            let mut v = vec![
                eq("two_route_hessian", &lab, &rep.total, &via),
                eq("mode_orthogonality", &lab, &e.tensor().norm_sqr(), &rep.norm_sqr),
                holds("hessian_real", &lab, "real", &rep.total, rep.total.is_real()),
            ];
            let ms: Vec<i64> = rep.modes.iter().map(|r| r.m).collect();
            if n == 1 && !e.is_zero() {
                let emb = is_embeddable(e).unwrap();
                if emb {
                    v.push(holds("sign_law_embeddable", &lab, "> 0", &rep.total, rep.total.re > num::zero()));
                }
                if ms.len() == 1 {
                    let m = ms[0];
                    let (exp, ok) = match m {
                        m if m <= -5 => ("< 0", rep.total.re < num::zero()),
                        -4 => ("= 0", rep.total.is_zero()),
                        _ => ("> 0", rep.total.re > num::zero()),
                    };
                    v.push(holds("sign_law_pure_mode", format!("{lab} (m = {m})"), exp, &rep.total, ok));
                }
            }
            if n > 1 && !fourier_modes(e).inadmissible && !e.is_zero() {
                let bound = rep.norm_sqr.scale(&rat(4 * n as i64, 1));
                v.push(holds("admissible_positivity", &lab, &format!(">= {bound}"), &rep.total, rep.total.re >= bound.re));
            }
            v
        })
        .collect();
    out.extend(per.into_iter().flatten());
    // conformal direction over H_{p,q}
    let cases: Vec<(u32, u32, SpherePoly)> = (1..=degree.min(4))
        .flat_map(|d| (0..=d).map(move |p| (p, d - p)))
        .flat_map(|(p, q)| spectral::real_harmonic_spanning_set(n, p, q).into_iter().map(move |v| (p, q, v)))
        .collect();
    let conf: Vec<Vec<Verdict>> = cases
        .par_iter()
        .map(|(p, q, v)| {
            let lab = format!("{v} in H_{{{p},{q}}}");
            let h = conformal_hessian(v).expect("real, zero average");
            let kernel = matches!((p, q), (1, 0) | (0, 1));
            let ok = if kernel { h.is_zero() } else { h.is_real() && h.re > num::zero() };
            let mut r = vec![holds("conformal_hessian_kernel", &lab, if kernel { "= 0" } else { "> 0" }, &h, ok)];
            if p + q <= 3 && n <= 2 {
                let s = yamabe_energy_series(v).expect("real");
                r.push(eq("yamabe_route", &lab, &h.scale(&rat(1, 2)), &s.c[2]));
                r.push(eq("conformal_first_variation", &lab, &ExactScalar::zero(), &s.c[1]));
            }
            r
        })
        .collect();
    out.extend(conf.into_iter().flatten());
    out
}

pub fn tensor_label(e: &DeformationTensor) -> String {
    match e.scalar_coefficient() {
        Some(c) => format!("E = {c}"),
        None => format!("{} canonical coefficients on S^{}", e.tensor().coefficients().len(), 2 * e.n() + 1),
    }
}

fn oracle3_suite(degree: u32) -> Vec<Verdict> {
    let s = rat(1, 1);
    let c = oracle3::hessian_constant(&s);
    let mut out = vec![holds("hessian_constant_positive", "E = 1", "> 0", &c, c.is_real() && c.re > num::zero())];
    let pool = monomial_pool(1, degree);
    let phase = ExactScalar::complex(rat(3, 5), rat(4, 5));
    let k = SpherePoly::monomial(1, &[1, 0], &[0, 1], ExactScalar::complex(rat(2, 1), rat(-1, 1)));
    let per: Vec<Vec<Verdict>> = pool
        .par_iter()
        .enumerate()
        .map(|(i, m)| {
            let e = m.to_sphere();
            let lab = format!("E = {e}");
            let run = oracle3::run_oracle(&e, &s);
            let sound = oracle3::solver_residuals_vanish(&run);
            let fv = oracle3::check_first_variation_on(&run, &s);
            let sd = oracle3::second_derivative_check_on(&run, &c);
            let mut v = vec![
                holds("solver_residuals", &lab, "0", sound, sound),
                holds("base_sanity", &lab, "A(0) = 0, W(0) constant", oracle3::base_sanity(&run), oracle3::base_sanity(&run)),
                fv.integral,
                fv.pointwise,
                oracle3::check_torsion_variation_on(&run, &s),
                oracle3::check_connection_variation_on(&run),
                sd.mode_formula,
                sd.two_route,
            ];
            if i % 5 == 0 {
                let g = oracle3::gauge_invariance(&e, &s, &phase);
                v.push(holds("gauge_invariance", &lab, "true", g, g));
                let p = oracle3::path_independence(&e, &s, &k);
                v.push(holds("path_independence", &lab, "true", p, p));
            }
            v
        })
        .collect();
    out.extend(per.into_iter().flatten());
    out
}

pub fn run_suite(cfg: &SuiteConfig) -> Result<Report, Error> {
    let suites = cfg.validate()?;
    let (n, degree) = (cfg.n, cfg.degree);
    let reports: Vec<SuiteReport> = suites
        .iter()
        .map(|s| {
            let recs = match s {
                Suite::Ring => ring_suite(n, degree),
                Suite::Spectral => spectral_suite(n, degree),
                Suite::Frames => frames_suite(n, degree),
                Suite::Variation => variation_suite(n, degree),
                Suite::Oracle3 => oracle3_suite(degree),
            };
            SuiteReport::new(s.name(), recs)
        })
        .collect();
    let monte_carlo =
        (cfg.samples > 0).then(|| monte_carlo_check(n, degree.max(6), cfg.samples, cfg.seed.unwrap_or(DEFAULT_SEED)));
    Ok(Report {
        version: VERSION.into(),
        config: cfg.clone(),
        pass: reports.iter().all(|r| r.pass),
        suites: reports,
        conventions: conventions(n),
        monte_carlo,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ModeEntry {
    pub m: i64,
    pub norm_sqr: ExactScalar,
    pub weighted: ExactScalar,
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleSummary {
    pub contact_scale: String,
    pub hessian_constant: ExactScalar,
    pub first_variation_integral: Verdict,
    pub first_variation_pointwise: Verdict,
    pub torsion_variation: Verdict,
    pub connection_variation: Verdict,
    pub second_order_integral: ExactScalar,
    pub mode_formula: Verdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub version: String,
    pub n: usize,
    pub deformation: String,
    pub symmetric: bool,
    pub inadmissible_negative_modes: bool,
    pub embeddable: bool,
    pub hessian: HessianReport,
    pub hessian_via_t: ExactScalar,
    pub two_route_pass: bool,
    pub oracle: Option<OracleSummary>,
    pub pass: bool,
}

#[derive(Clone, Debug, Default)]
pub struct AnalyzeOptions {
    /// Run the `S^3` structure-equation oracle (only for `n = 1`).
    pub oracle: bool,
}

pub fn analyze_text(text: &str, opts: &AnalyzeOptions) -> Result<AnalysisReport, Error> {
    let file = parse_deformation_file(text)?;
    let e = DeformationTensor::from_file(&file);
    variation::check_symmetry(&e)?;
    let hessian = j_hessian(&e)?;
    let via = j_hessian_via_t(&e)?;
    let two_route = via == hessian.total;
    let oracle = match (opts.oracle, e.scalar_coefficient()) {
        (true, Some(c)) => {
            let s = rat(1, 1);
            let k = oracle3::hessian_constant(&s);
            let run = oracle3::run_oracle(&c, &s);
            let fv = oracle3::check_first_variation_on(&run, &s);
            let sd = oracle3::second_derivative_check_on(&run, &k);
            Some(OracleSummary {
                contact_scale: "1".into(),
                hessian_constant: k,
                first_variation_integral: fv.integral,
                first_variation_pointwise: fv.pointwise,
                torsion_variation: oracle3::check_torsion_variation_on(&run, &s),
                connection_variation: oracle3::check_connection_variation_on(&run),
                second_order_integral: sd.oracle.clone(),
                mode_formula: sd.mode_formula,
            })
        }
        _ => None,
    };
    let oracle_pass = oracle.as_ref().is_none_or(|o| {
        o.first_variation_integral.pass
            && o.first_variation_pointwise.pass
            && o.torsion_variation.pass
            && o.connection_variation.pass
            && o.mode_formula.pass
    });
    Ok(AnalysisReport {
        version: VERSION.into(),
        n: e.n(),
        deformation: tensor_label(&e),
        symmetric: validate_symmetry(&e),
        inadmissible_negative_modes: fourier_modes(&e).inadmissible,
        embeddable: hessian.embeddable,
        hessian,
        hessian_via_t: via,
        two_route_pass: two_route,
        oracle,
        pass: two_route && oracle_pass,
    })
}

pub fn analyze_deformation(path: &Path, opts: &AnalyzeOptions) -> Result<AnalysisReport, Error> {
    analyze_text(&std::fs::read_to_string(path)?, opts)
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectrumReport {
    pub n: usize,
    pub table: Vec<spectral::EigenRow>,
    /// `(p, q, factor)` with the conformal Hessian equal to `factor * ||v||^2` on `H_{p,q}`.
    pub conformal_factors: Vec<(u32, u32, ExactScalar)>,
    pub kernel: Vec<(u32, u32)>,
}

pub fn spectrum(n: usize, degree: u32) -> SpectrumReport {
    let table = spectral::eigen_table(n, degree);
    let mut factors = Vec::new();
    let mut kernel = Vec::new();
    for d in 1..=degree {
        for p in (0..=d).rev() {
            let q = d - p;
            let v = spectral::real_harmonic_spanning_set(n, p, q).into_iter().next().expect("nonzero");
            let h = conformal_hessian(&v).expect("real, zero average");
            let f = &h / &ExactScalar::real(v.norm_sqr());
            if f.is_zero() {
                kernel.push((p, q));
            }
            factors.push((p, q, f));
        }
    }
    SpectrumReport { n, table, conformal_factors: factors, kernel }
}
