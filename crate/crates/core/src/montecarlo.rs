//! Floating-point Monte-Carlo estimates of monomial integrals, for sanity checks only.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;
use serde::Serialize;

use crate::ring::{integrate_poly, monomial_pool, ExactScalar, Monomial, Poly};

pub const DEFAULT_SEED: u64 = 0x5EED_C0DE;
const CHUNK: usize = 1 << 14;

#[derive(Clone, Debug, Serialize)]
pub struct McRecord {
    pub monomial: String,
    pub exact: ExactScalar,
    pub estimate_re: f64,
    pub estimate_im: f64,
    pub std_error: f64,
    pub within_3se: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct McReport {
    pub n: usize,
    pub samples: usize,
    pub seed: u64,
    pub records: Vec<McRecord>,
    pub pass: bool,
}

/// Uniform point on `S^{2n+1}`: normalized standard Gaussian in `C^{n+1}`.
fn sample_point(rng: &mut ChaCha8Rng, ambient: usize, out: &mut [(f64, f64)]) {
    let mut norm = 0.0;
    for p in out.iter_mut().take(ambient) {
        let re: f64 = StandardNormal.sample(rng);
        let im: f64 = StandardNormal.sample(rng);
        *p = (re, im);
        norm += re * re + im * im;
    }
    let s = norm.sqrt().recip();
    for p in out.iter_mut().take(ambient) {
        p.0 *= s;
        p.1 *= s;
    }
}

fn cmul(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

/// Per-monomial sums of `Re`, `Im`, `Re^2`, `Im^2`.
type Sums = Vec<[f64; 4]>;

fn chunk_sums(seed: u64, chunk: usize, count: usize, ambient: usize, pool: &[Monomial], maxdeg: usize) -> Sums {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(chunk as u64);
    let mut sums = vec![[0.0; 4]; pool.len()];
    let mut pt = vec![(0.0, 0.0); ambient];
    // powers[v][k] for variables z_1..z_N, w_1..w_N
    let mut powers = vec![vec![(1.0, 0.0); maxdeg + 1]; 2 * ambient];
    for _ in 0..count {
        sample_point(&mut rng, ambient, &mut pt);
        for j in 0..ambient {
            let (z, w) = (pt[j], (pt[j].0, -pt[j].1));
            for k in 1..=maxdeg {
                powers[j][k] = cmul(powers[j][k - 1], z);
                powers[ambient + j][k] = cmul(powers[ambient + j][k - 1], w);
            }
        }
        for (s, m) in sums.iter_mut().zip(pool) {
            let v = m.z().iter().chain(m.w()).enumerate().fold((1.0, 0.0), |acc, (i, &e)| cmul(acc, powers[i][e as usize]));
            s[0] += v.0;
            s[1] += v.1;
            s[2] += v.0 * v.0;
            s[3] += v.1 * v.1;
        }
    }
    sums
}

/// Compares every monomial integral of degree `<= max_degree` with its Monte-Carlo estimate.
/// Chunks use independent ChaCha streams and are reduced in order, so the result is reproducible.
pub fn monte_carlo_check(n: usize, max_degree: u32, samples: usize, seed: u64) -> McReport {
    let ambient = n + 1;
    let pool = monomial_pool(n, max_degree);
    let chunks = samples.div_ceil(CHUNK);
    let parts: Vec<Sums> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let count = CHUNK.min(samples - c * CHUNK);
            chunk_sums(seed, c, count, ambient, &pool, max_degree as usize)
        })
        .collect();
    let mut total = vec![[0.0; 4]; pool.len()];
    for part in &parts {
        for (t, p) in total.iter_mut().zip(part) {
            for k in 0..4 {
                t[k] += p[k];
            }
        }
    }
    let nf = samples as f64;
    let records: Vec<McRecord> = pool
        .iter()
        .zip(&total)
        .map(|(m, s)| {
            let exact = integrate_poly(&Poly::monomial(m.clone(), ExactScalar::one()));
            let (mr, mi) = (s[0] / nf, s[1] / nf);
            let var = (s[2] / nf - mr * mr).max(0.0) + (s[3] / nf - mi * mi).max(0.0);
            let se = (var / nf).sqrt();
            let (er, ei) = exact.to_f64_pair();
            let err = ((mr - er).powi(2) + (mi - ei).powi(2)).sqrt();
            McRecord {
                monomial: m.to_sphere_label(),
                exact,
                estimate_re: mr,
                estimate_im: mi,
                std_error: se,
                // constant monomials have zero variance; allow rounding noise
                within_3se: err <= 3.0 * se + 1e-12,
            }
        })
        .collect();
    let pass = records.iter().all(|r| r.within_3se);
    McReport { n, samples, seed, records, pass }
}

trait Label {
    fn to_sphere_label(&self) -> String;
}

impl Label for Monomial {
    fn to_sphere_label(&self) -> String {
        let mut s = String::new();
        for (j, &e) in self.z().iter().enumerate() {
            if e > 0 {
                s.push_str(&format!("z{}^{} ", j + 1, e));
            }
        }
        for (j, &e) in self.w().iter().enumerate() {
            if e > 0 {
                s.push_str(&format!("w{}^{} ", j + 1, e));
            }
        }
        if s.is_empty() {
            "1".into()
        } else {
            s.trim_end().into()
        }
    }
}
