//! Sections of `T^{0,1} (x) Lambda^{1,0}`: `E = sum c_{(jk),(lm)} Zbar_jk (x) theta_lm`.

use std::collections::BTreeMap;

use crate::ring::{ExactScalar, SpherePoly};

use super::pairs;
use super::vector::FrameVector;

pub type Pair = (usize, usize);

/// Coefficients are canonical: `c_{(jk),(lm)} = conj(theta_jk)(E Z_lm)`.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorField {
    n: usize,
    coeffs: BTreeMap<(Pair, Pair), SpherePoly>,
}

impl TensorField {
    pub fn zero(n: usize) -> Self {
        TensorField { n, coeffs: BTreeMap::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coefficients(&self) -> &BTreeMap<(Pair, Pair), SpherePoly> {
        &self.coeffs
    }

    pub fn coefficient(&self, a: Pair, b: Pair) -> SpherePoly {
        self.coeffs.get(&(a, b)).cloned().unwrap_or_else(|| SpherePoly::zero(self.n))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn from_raw(n: usize, raw: BTreeMap<(Pair, Pair), SpherePoly>) -> Self {
        TensorField { n, coeffs: raw.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    /// On `S^3` the single coefficient `E_1^{1bar}`.
    pub fn from_scalar(e: &SpherePoly) -> Self {
        let mut m = BTreeMap::new();
        m.insert(((1, 2), (1, 2)), e.clone());
        Self::from_raw(e.n(), m)
    }

    /// From a lowered ambient bilinear form `B(X, Y) = sum_ab M_ab y_a x_b` on holomorphic vectors.
    /// Indices of `entries` count from 1; missing entries are zero.
    pub fn from_lowered_ambient(n: usize, entries: &[(usize, usize, SpherePoly)]) -> Self {
        let zs: Vec<(Pair, FrameVector)> = pairs(n).into_iter().map(|p| (p, FrameVector::z_field(n, p.0, p.1))).collect();
        let mut raw = BTreeMap::new();
        for (jk, y) in &zs {
            for (lm, x) in &zs {
                let mut c = SpherePoly::zero(n);
                for (a, b, m) in entries {
                    c = &c + &(&(m * &y.dz[a - 1]) * &x.dz[b - 1]);
                }
                raw.insert((*jk, *lm), c);
            }
        }
        Self::from_raw(n, raw)
    }

    /// Canonicalizes arbitrary coefficients by re-applying the tensor to the frame.
    pub fn tight_expand(n: usize, raw: &BTreeMap<(Pair, Pair), SpherePoly>) -> Self {
        let ps = pairs(n);
        // theta_rs(Z_lm) for all pairs
        let gram: BTreeMap<(Pair, Pair), SpherePoly> = ps
            .iter()
            .flat_map(|&rs| ps.iter().map(move |&lm| (rs, lm)))
            .map(|(rs, lm)| ((rs, lm), FrameVector::z_field(n, lm.0, lm.1).theta_jk(rs.0, rs.1)))
            .collect();
        let mut out = BTreeMap::new();
        for &jk in &ps {
            for &lm in &ps {
                let mut c = SpherePoly::zero(n);
                for (&(pq, rs), v) in raw {
                    // conj(theta_jk)(Zbar_pq) = conj(theta_jk(Z_pq))
                    let a = gram[&(rs, lm)].clone();
                    let b = gram[&(jk, pq)].conjugate();
                    c = &c + &(&(v * &a) * &b);
                }
                out.insert((jk, lm), c);
            }
        }
        Self::from_raw(n, out)
    }

    /// `E(V) = sum c theta_lm(V) Zbar_jk`.
    pub fn apply(&self, v: &FrameVector) -> FrameVector {
        self.coeffs.iter().fold(FrameVector::zero(self.n), |acc, (&(jk, lm), c)| {
            let f = c * &v.theta_jk(lm.0, lm.1);
            acc.add(&FrameVector::zbar_field(self.n, jk.0, jk.1).mul_poly(&f))
        })
    }

    pub fn map(&self, f: impl Fn(&SpherePoly) -> SpherePoly) -> Self {
        Self::from_raw(self.n, self.coeffs.iter().map(|(k, c)| (*k, f(c))).collect())
    }

    pub fn scale(&self, s: &ExactScalar) -> Self {
        self.map(|c| c.scale(s))
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut raw = self.coeffs.clone();
        for (k, c) in &o.coeffs {
            let v = raw.get(k).map(|x| x + c).unwrap_or_else(|| c.clone());
            raw.insert(*k, v);
        }
        Self::from_raw(self.n, raw)
    }

    /// Coefficient-wise `Gamma_m` projection.
    pub fn fourier_project(&self, m: i64) -> Self {
        self.map(|c| c.fourier_project(m))
    }

    /// Weights present in any coefficient.
    pub fn weights(&self) -> Vec<i64> {
        let mut ws: Vec<i64> = self.coeffs.values().flat_map(|c| c.fourier_modes().into_keys()).collect();
        ws.sort_unstable();
        ws.dedup();
        ws
    }

    /// True iff the lowered form is symmetric: `c_{(jk),(lm)} = c_{(lm),(jk)}`.
    /// Returns the first offending pair otherwise.
    pub fn symmetry_violation(&self) -> Option<(Pair, Pair)> {
        for (&(a, b), c) in &self.coeffs {
            if *c != self.coefficient(b, a) {
                return Some((a, b));
            }
        }
        None
    }

    /// Pointwise `sum c_A conj(d_A)`, the trace of `A o conj(B)`.
    pub fn contraction(&self, o: &Self) -> SpherePoly {
        self.coeffs.iter().fold(SpherePoly::zero(self.n), |acc, (k, c)| match o.coeffs.get(k) {
            Some(d) => &acc + &(c * &d.conjugate()),
            None => acc,
        })
    }

    /// `int |E|^2`.
    pub fn norm_sqr(&self) -> ExactScalar {
        self.contraction(self).integrate()
    }
}
