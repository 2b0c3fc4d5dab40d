//! Bidegree decomposition into spherical harmonics `H_{p,q}`, the sub-Laplacian
//! (diagonal with eigenvalues `pq + n(p+q)/2`) and the sub-gradient energy.

use std::collections::BTreeMap;

use num::rational::BigRational;
use serde::Serialize;

use crate::error::Error;
use crate::ring::{normal_form, ExactScalar, Monomial, Poly, SpherePoly};

/// Factor between the energy and the spectral sum: `int |grad_b f|^2 = KAPPA * sum lambda ||f_pq||^2`.
pub const KAPPA: i64 = 2;

/// `lambda_{p,q,n} = pq + n(p+q)/2`.
pub fn lambda(p: u32, q: u32, n: usize) -> BigRational {
    let (p, q, n) = (p as i64, q as i64, n as i64);
    BigRational::new((2 * p * q + n * (p + q)).into(), 2.into())
}

/// Components of a sphere polynomial in the spaces `H_{p,q}`.
#[derive(Clone, Debug, PartialEq)]
pub struct HarmonicDecomposition {
    pub n: usize,
    pub components: BTreeMap<(u32, u32), SpherePoly>,
}

#[derive(Clone, Debug, Serialize)]
pub struct EigenRow {
    pub p: u32,
    pub q: u32,
    pub n: usize,
    pub lambda: ExactScalar,
}

impl HarmonicDecomposition {
    pub fn component(&self, p: u32, q: u32) -> SpherePoly {
        self.components.get(&(p, q)).cloned().unwrap_or_else(|| SpherePoly::zero(self.n))
    }

    pub fn sum(&self) -> SpherePoly {
        self.components.values().fold(SpherePoly::zero(self.n), |acc, c| &acc + c)
    }
}

fn bidegree(m: &Monomial) -> (u32, u32) {
    (m.holo_degree(), m.anti_degree())
}

/// Writes a bihomogeneous ambient `h` of bidegree `(p, q)` as `sum_k r^{2k} h_k`
/// with each `h_k` harmonic of bidegree `(p-k, q-k)`.
pub fn ambient_harmonic_parts(h: &Poly, p: u32, q: u32) -> Vec<Poly> {
    let ambient = h.ambient();
    let kmax = p.min(q) as usize;
    let mut out = vec![Poly::zero(ambient); kmax + 1];
    if h.is_zero() {
        return out;
    }
    if kmax == 0 {
        out[0] = h.clone();
        return out;
    }
    let lap = h.ambient_laplacian();
    let lower = ambient_harmonic_parts(&lap, p - 1, q - 1);
    let r2 = Poly::radius_sqr(ambient);
    let mut rest = h.clone();
    for k in 1..=kmax {
        // Laplacian of r^{2k} g equals k (N - 1 + p + q - k) r^{2k-2} g for harmonic g
        let factor = (k as i64) * (ambient as i64 - 1 + p as i64 + q as i64 - k as i64);
        let hk = lower[k - 1].scale(&ExactScalar::ratio(1, factor));
        rest = rest - r2.pow(k as u32) * hk.clone();
        out[k] = hk;
    }
    out[0] = rest;
    out
}

/// Harmonic projection of a bihomogeneous ambient polynomial (its `k = 0` part).
pub fn harmonic_projection(h: &Poly, p: u32, q: u32) -> Poly {
    ambient_harmonic_parts(h, p, q).swap_remove(0)
}

pub fn harmonic_decompose(f: &SpherePoly) -> HarmonicDecomposition {
    let n = f.n();
    let ambient = n + 1;
    let r2 = Poly::radius_sqr(ambient);
    let mut components: BTreeMap<(u32, u32), SpherePoly> = BTreeMap::new();
    for (_, group) in f.fourier_modes() {
        let (pmax, qmax) = group.terms().map(|(m, _)| bidegree(m)).max().unwrap();
        let mut lifted = Poly::zero(ambient);
        for (m, c) in group.terms() {
            let k = pmax - m.holo_degree();
            lifted = lifted + r2.pow(k) * Poly::monomial(m.clone(), c.clone());
        }
        for (k, hk) in ambient_harmonic_parts(&lifted, pmax, qmax).into_iter().enumerate() {
            let restricted = normal_form(&hk);
            if !restricted.is_zero() {
                components.insert((pmax - k as u32, qmax - k as u32), restricted);
            }
        }
    }
    HarmonicDecomposition { n, components }
}

/// Spectral sub-Laplacian `-sum lambda_{p,q,n} f_{p,q}` (nonpositive operator).
pub fn sublaplacian(f: &SpherePoly) -> SpherePoly {
    let d = harmonic_decompose(f);
    d.components.iter().fold(SpherePoly::zero(f.n()), |acc, (&(p, q), c)| {
        &acc - &c.scale(&ExactScalar::real(lambda(p, q, f.n())))
    })
}

/// `int <grad_b f, grad_b g>` extended sesquilinearly: `-KAPPA * int conj(f) Delta_b g`.
pub fn dirichlet_pairing(f: &SpherePoly, g: &SpherePoly) -> ExactScalar {
    let lg = sublaplacian(g);
    (&f.conjugate() * &lg).integrate().scale(&BigRational::from_integer((-KAPPA).into()))
}

/// `int |grad_b f|^2` in the probability measure, for real `f`.
pub fn dirichlet_energy(f: &SpherePoly) -> Result<ExactScalar, Error> {
    if !f.is_real() {
        return Err(Error::NotReal);
    }
    let d = harmonic_decompose(f);
    let mut acc = ExactScalar::zero();
    for (&(p, q), c) in &d.components {
        acc += &ExactScalar::real(lambda(p, q, f.n()) * c.norm_sqr());
    }
    Ok(acc.scale(&BigRational::from_integer(KAPPA.into())))
}

/// The `lambda` table for `p + q <= max_degree`, each entry measured by applying
/// [`sublaplacian`] to a harmonic representative and reading off the eigenvalue.
pub fn eigen_table(n: usize, max_degree: u32) -> Vec<EigenRow> {
    let mut rows = Vec::new();
    for d in 0..=max_degree {
        for p in (0..=d).rev() {
            let q = d - p;
            let h = harmonic_representative(n, p, q);
            let lh = sublaplacian(&h);
            let (m, c) = h.terms().next().expect("nonzero representative");
            let lc = lh.terms().find(|(k, _)| *k == m).map(|(_, v)| v.clone()).unwrap_or_default();
            rows.push(EigenRow { p, q, n, lambda: -(&lc / c) });
        }
    }
    rows
}

/// A nonzero element of `H_{p,q}` on `S^{2n+1}`: `z1^p w2^q`, already harmonic.
pub fn harmonic_representative(n: usize, p: u32, q: u32) -> SpherePoly {
    let ambient = n + 1;
    let mut z = vec![0u16; ambient];
    let mut w = vec![0u16; ambient];
    z[0] = p as u16;
    w[1] = q as u16;
    normal_form(&Poly::monomial(Monomial::new(&z, &w), ExactScalar::one()))
}

/// Spanning set of `H_{p,q}`: harmonic projections of all monomials of bidegree `(p, q)`.
pub fn harmonic_spanning_set(n: usize, p: u32, q: u32) -> Vec<SpherePoly> {
    let ambient = n + 1;
    let mut out: Vec<SpherePoly> = Vec::new();
    for m in crate::ring::monomial_pool(n, p + q) {
        if m.holo_degree() != p || m.anti_degree() != q {
            continue;
        }
        let h = normal_form(&harmonic_projection(&Poly::monomial(m, ExactScalar::one()), p, q));
        if !h.is_zero() && !out.contains(&h) {
            out.push(h);
        }
    }
    debug_assert!(out.iter().all(|h| h.ambient() == ambient));
    out
}

/// Real and imaginary parts of the spanning set of `H_{p,q}`.
pub fn real_harmonic_spanning_set(n: usize, p: u32, q: u32) -> Vec<SpherePoly> {
    let half = ExactScalar::ratio(1, 2);
    let half_i = ExactScalar::complex(BigRational::from_integer(0.into()), crate::ring::rat(-1, 2));
    let mut out = Vec::new();
    for h in harmonic_spanning_set(n, p, q) {
        let hb = h.conjugate();
        let re = (&h + &hb).scale(&half);
        let im = (&h - &hb).scale(&half_i);
        for v in [re, im] {
            if !v.is_zero() && !out.contains(&v) {
                out.push(v);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;

    fn z(n: usize, j: usize) -> SpherePoly {
        SpherePoly::z(n, j)
    }
    fn w(n: usize, j: usize) -> SpherePoly {
        SpherePoly::w(n, j)
    }

    #[test]
    fn coordinate_is_harmonic() {
        let d = harmonic_decompose(&z(1, 1));
        assert_eq!(d.components.len(), 1);
        assert_eq!(d.component(1, 0), z(1, 1));
    }

    #[test]
    fn radial_square_splits() {
        let f = &z(1, 1) * &w(1, 1);
        let d = harmonic_decompose(&f);
        assert_eq!(d.component(0, 0), SpherePoly::constant(1, ExactScalar::ratio(1, 2)));
        let h = (&f - &(&z(1, 2) * &w(1, 2))).scale(&ExactScalar::ratio(1, 2));
        assert_eq!(d.component(1, 1), h);
        assert_eq!(d.sum(), f);
        // the (1,1) part is annihilated by the ambient Laplacian
        let amb = Poly::z(2, 1) * Poly::w(2, 1) - Poly::z(2, 2) * Poly::w(2, 2);
        assert!(amb.ambient_laplacian().is_zero());
    }

    #[test]
    fn mixed_monomial_is_harmonic() {
        let f = &z(1, 1) * &w(1, 2);
        let d = harmonic_decompose(&f);
        assert_eq!(d.components.len(), 1);
        assert_eq!(d.component(1, 1), f);
    }

    #[test]
    fn sublaplacian_examples() {
        assert!(sublaplacian(&SpherePoly::one(1)).is_zero());
        assert_eq!(sublaplacian(&z(1, 1)), z(1, 1).scale(&ExactScalar::ratio(-1, 2)));
        let f = &z(1, 1) * &w(1, 2);
        assert_eq!(sublaplacian(&f), f.scale(&ExactScalar::from_int(-2)));
    }

    #[test]
    fn energy_examples() {
        assert_eq!(dirichlet_energy(&SpherePoly::one(1)).unwrap(), ExactScalar::zero());
        let re = (&z(1, 1) + &w(1, 1)).scale(&ExactScalar::ratio(1, 2));
        assert_eq!(dirichlet_energy(&re).unwrap(), ExactScalar::ratio(1, 4));
        // f in H_{1,1}: energy = 2 * 2 * int f^2, with int f^2 = 1/3 - 2/6 + 1/3 = 1/3
        let f = &(&z(1, 1) * &w(1, 1)) - &(&z(1, 2) * &w(1, 2));
        assert_eq!(f.norm_sqr(), rat(1, 3));
        assert_eq!(dirichlet_energy(&f).unwrap(), ExactScalar::ratio(4, 3));
        assert!(matches!(dirichlet_energy(&z(1, 1)), Err(Error::NotReal)));
    }

    #[test]
    fn table_matches_formula() {
        for n in 1..=3 {
            for row in eigen_table(n, 4) {
                assert_eq!(row.lambda, ExactScalar::real(lambda(row.p, row.q, n)));
            }
        }
    }
}
