//! Ambient polynomials in `z_1..z_N, w_1..w_N` (`w_j` standing for the conjugate
//! coordinate) and their restrictions to the unit sphere `S^{2n+1}`, `N = n + 1`.
//!
//! Restrictions are kept in normal form modulo `sum_j z_j w_j - 1`: the leading
//! monomial of the relation is `z_1 w_1`, so a monomial is reduced iff it does not
//! contain both `z_1` and `w_1`. A single generator is its own Gröbner basis, hence
//! the remainder is unique and equality is decided term by term.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::rational::BigRational;

use super::scalar::{factorial, ExactScalar};
use crate::error::Error;

/// Exponent vector: the first `N` entries are powers of `z_j`, the next `N` of `w_j`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial(Vec<u16>);

impl Monomial {
    pub fn one(ambient: usize) -> Self {
        Monomial(vec![0; 2 * ambient])
    }

    pub fn new(z: &[u16], w: &[u16]) -> Self {
        assert_eq!(z.len(), w.len(), "z and w exponent vectors must have equal length");
        let mut v = z.to_vec();
        v.extend_from_slice(w);
        Monomial(v)
    }

    pub fn ambient(&self) -> usize {
        self.0.len() / 2
    }

    pub fn z(&self) -> &[u16] {
        &self.0[..self.ambient()]
    }

    pub fn w(&self) -> &[u16] {
        &self.0[self.ambient()..]
    }

    pub fn holo_degree(&self) -> u32 {
        self.z().iter().map(|&e| e as u32).sum()
    }

    pub fn anti_degree(&self) -> u32 {
        self.w().iter().map(|&e| e as u32).sum()
    }

    pub fn degree(&self) -> u32 {
        self.holo_degree() + self.anti_degree()
    }

    /// Circle-action weight `|a| - |b|`.
    pub fn weight(&self) -> i64 {
        self.holo_degree() as i64 - self.anti_degree() as i64
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn conj(&self) -> Monomial {
        let n = self.ambient();
        let mut v = self.0[n..].to_vec();
        v.extend_from_slice(&self.0[..n]);
        Monomial(v)
    }

    fn is_reduced(&self) -> bool {
        let n = self.ambient();
        self.0[0] == 0 || self.0[n] == 0
    }
}

/// A polynomial on the ambient space `C^N`, without any sphere reduction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    ambient: usize,
    terms: BTreeMap<Monomial, ExactScalar>,
}

impl Poly {
    pub fn zero(ambient: usize) -> Self {
        Poly { ambient, terms: BTreeMap::new() }
    }

    pub fn constant(ambient: usize, c: ExactScalar) -> Self {
        let mut p = Poly::zero(ambient);
        p.add_term(Monomial::one(ambient), c);
        p
    }

    pub fn monomial(m: Monomial, c: ExactScalar) -> Self {
        let mut p = Poly::zero(m.ambient());
        p.add_term(m, c);
        p
    }

    /// The coordinate `z_j`, `j` counted from 1.
    pub fn z(ambient: usize, j: usize) -> Self {
        let mut e = vec![0u16; 2 * ambient];
        e[j - 1] = 1;
        Poly::monomial(Monomial(e), ExactScalar::one())
    }

    /// The conjugate coordinate `w_j = conj(z_j)`, `j` counted from 1.
    pub fn w(ambient: usize, j: usize) -> Self {
        let mut e = vec![0u16; 2 * ambient];
        e[ambient + j - 1] = 1;
        Poly::monomial(Monomial(e), ExactScalar::one())
    }

    /// `sum_j z_j w_j`.
    pub fn radius_sqr(ambient: usize) -> Self {
        (1..=ambient).fold(Poly::zero(ambient), |acc, j| acc + Poly::z(ambient, j) * Poly::w(ambient, j))
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn add_term(&mut self, m: Monomial, c: ExactScalar) {
        debug_assert_eq!(m.ambient(), self.ambient);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += &c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &ExactScalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn scale(&self, c: &ExactScalar) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.ambient);
        }
        Poly { ambient: self.ambient, terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    pub fn conj(&self) -> Poly {
        Poly { ambient: self.ambient, terms: self.terms.iter().map(|(m, v)| (m.conj(), v.conj())).collect() }
    }

    fn check(&self, o: &Poly) -> Result<(), Error> {
        if self.ambient != o.ambient {
            return Err(Error::DimensionMismatch { left: self.ambient - 1, right: o.ambient - 1 });
        }
        Ok(())
    }

    pub fn try_add(&self, o: &Poly) -> Result<Poly, Error> {
        self.check(o)?;
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), c.clone());
        }
        Ok(r)
    }

    pub fn try_mul(&self, o: &Poly) -> Result<Poly, Error> {
        self.check(o)?;
        let mut r = Poly::zero(self.ambient);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                r.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(r)
    }

    pub fn pow(&self, k: u32) -> Poly {
        (0..k).fold(Poly::constant(self.ambient, ExactScalar::one()), |acc, _| acc * self.clone())
    }

    /// Partial derivative along coordinate `idx` of the exponent vector
    /// (`0..N` are `z_j`, `N..2N` are `w_j`).
    pub fn partial(&self, idx: usize) -> Poly {
        let mut r = Poly::zero(self.ambient);
        for (m, c) in &self.terms {
            let e = m.0[idx];
            if e == 0 {
                continue;
            }
            let mut v = m.0.clone();
            v[idx] -= 1;
            r.add_term(Monomial(v), c * &ExactScalar::from_int(e as i64));
        }
        r
    }

    /// `d/dz_j`, `j` counted from 1.
    pub fn dz(&self, j: usize) -> Poly {
        self.partial(j - 1)
    }

    /// `d/dw_j`, `j` counted from 1.
    pub fn dw(&self, j: usize) -> Poly {
        self.partial(self.ambient + j - 1)
    }

    /// `sum_j d^2/dz_j dw_j`, the complex ambient Laplacian (a quarter of the real one).
    pub fn ambient_laplacian(&self) -> Poly {
        (1..=self.ambient).fold(Poly::zero(self.ambient), |acc, j| acc + self.dz(j).dw(j))
    }

    /// Terms with `|a| - |b| = m`.
    pub fn weight_part(&self, m: i64) -> Poly {
        Poly {
            ambient: self.ambient,
            terms: self.terms.iter().filter(|(k, _)| k.weight() == m).map(|(k, v)| (k.clone(), v.clone())).collect(),
        }
    }

    /// Evaluate at a complex point given as `(re, im)` pairs.
    pub fn eval_f64(&self, point: &[(f64, f64)]) -> (f64, f64) {
        let mut acc = (0.0, 0.0);
        for (m, c) in &self.terms {
            let mut v = c.to_f64_pair();
            for j in 0..self.ambient {
                for _ in 0..m.0[j] {
                    v = cmul(v, point[j]);
                }
                for _ in 0..m.0[self.ambient + j] {
                    v = cmul(v, (point[j].0, -point[j].1));
                }
            }
            acc.0 += v.0;
            acc.1 += v.1;
        }
        acc
    }
}

fn cmul(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, o: Poly) -> Poly {
        self.try_add(&o).expect("ambient dimension mismatch")
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, o: Poly) -> Poly {
        self.try_add(&-o).expect("ambient dimension mismatch")
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, o: Poly) -> Poly {
        self.try_mul(&o).expect("ambient dimension mismatch")
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&ExactScalar::from_int(-1))
    }
}

thread_local! {
    static RELATION_POWERS: RefCell<HashMap<(usize, u16), Vec<(Monomial, ExactScalar)>>> = RefCell::new(HashMap::new());
}

/// Terms of `(1 - sum_{j>=2} z_j w_j)^k`, the replacement for `(z_1 w_1)^k`.
fn relation_power(ambient: usize, k: u16) -> Vec<(Monomial, ExactScalar)> {
    RELATION_POWERS.with(|cache| {
        if let Some(v) = cache.borrow().get(&(ambient, k)) {
            return v.clone();
        }
        let mut rest = Poly::constant(ambient, ExactScalar::one());
        for j in 2..=ambient {
            rest = rest - Poly::z(ambient, j) * Poly::w(ambient, j);
        }
        let p = rest.pow(k as u32);
        let v: Vec<_> = p.terms.into_iter().collect();
        cache.borrow_mut().insert((ambient, k), v.clone());
        v
    })
}

fn reduce_into(acc: &mut Poly, m: Monomial, c: ExactScalar) {
    if m.is_reduced() {
        acc.add_term(m, c);
        return;
    }
    let n = m.ambient();
    let k = m.0[0].min(m.0[n]);
    let mut base = m.0;
    base[0] -= k;
    base[n] -= k;
    let base = Monomial(base);
    for (r, rc) in relation_power(n, k) {
        acc.add_term(base.mul(&r), &c * &rc);
    }
}

/// A polynomial function on `S^{2n+1}`, stored in normal form.
#[derive(Clone, PartialEq, Eq)]
pub struct SpherePoly {
    n: usize,
    poly: Poly,
}

/// Reduces an ambient polynomial modulo the sphere relation.
pub fn normal_form(p: &Poly) -> SpherePoly {
    let mut acc = Poly::zero(p.ambient);
    for (m, c) in &p.terms {
        reduce_into(&mut acc, m.clone(), c.clone());
    }
    SpherePoly { n: p.ambient - 1, poly: acc }
}

impl SpherePoly {
    pub fn zero(n: usize) -> Self {
        SpherePoly { n, poly: Poly::zero(n + 1) }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, ExactScalar::one())
    }

    pub fn constant(n: usize, c: ExactScalar) -> Self {
        SpherePoly { n, poly: Poly::constant(n + 1, c) }
    }

    pub fn z(n: usize, j: usize) -> Self {
        SpherePoly { n, poly: Poly::z(n + 1, j) }
    }

    pub fn w(n: usize, j: usize) -> Self {
        SpherePoly { n, poly: Poly::w(n + 1, j) }
    }

    /// Normal form of `c z^a w^b`.
    pub fn monomial(n: usize, z: &[u16], w: &[u16], c: ExactScalar) -> Self {
        assert_eq!(z.len(), n + 1, "exponent vector length must be n + 1");
        normal_form(&Poly::monomial(Monomial::new(z, w), c))
    }

    pub fn from_poly(p: &Poly) -> Self {
        normal_form(p)
    }

    /// Sphere dimension parameter: this lives on `S^{2n+1}`.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ambient(&self) -> usize {
        self.n + 1
    }

    /// The normal-form representative as an ambient polynomial.
    pub fn as_poly(&self) -> &Poly {
        &self.poly
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &ExactScalar)> {
        self.poly.terms()
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn degree(&self) -> Option<u32> {
        self.poly.degree()
    }

    /// The value if this is a constant function.
    pub fn as_constant(&self) -> Option<ExactScalar> {
        match self.poly.len() {
            0 => Some(ExactScalar::zero()),
            1 => {
                let (m, c) = self.poly.terms().next().unwrap();
                (m.degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn scale(&self, c: &ExactScalar) -> SpherePoly {
        SpherePoly { n: self.n, poly: self.poly.scale(c) }
    }

    pub fn try_add(&self, o: &SpherePoly) -> Result<SpherePoly, Error> {
        Ok(SpherePoly { n: self.n, poly: self.poly.try_add(&o.poly)? })
    }

    pub fn try_sub(&self, o: &SpherePoly) -> Result<SpherePoly, Error> {
        Ok(SpherePoly { n: self.n, poly: self.poly.try_add(&o.poly.scale(&ExactScalar::from_int(-1)))? })
    }

    pub fn try_mul(&self, o: &SpherePoly) -> Result<SpherePoly, Error> {
        self.poly.check(&o.poly)?;
        let mut acc = Poly::zero(self.ambient());
        for (ma, ca) in self.poly.terms() {
            for (mb, cb) in o.poly.terms() {
                reduce_into(&mut acc, ma.mul(mb), ca * cb);
            }
        }
        Ok(SpherePoly { n: self.n, poly: acc })
    }

    pub fn pow(&self, k: u32) -> SpherePoly {
        (0..k).fold(SpherePoly::one(self.n), |acc, _| &acc * self)
    }

    /// Complex conjugation: swaps `z` and `w` exponents and conjugates coefficients.
    pub fn conjugate(&self) -> SpherePoly {
        normal_form(&self.poly.conj())
    }

    pub fn is_real(&self) -> bool {
        self.conjugate() == *self
    }

    pub fn real_part(&self) -> SpherePoly {
        (self + &self.conjugate()).scale(&ExactScalar::ratio(1, 2))
    }

    /// Integral against the rotation-invariant probability measure on `S^{2n+1}`:
    /// `int z^a w^b = 0` unless `a = b`, else `n! a! / (n + |a|)!`.
    pub fn integrate(&self) -> ExactScalar {
        integrate_poly(&self.poly)
    }

    /// Part of circle weight `m`, i.e. the `Gamma_m` component.
    pub fn fourier_project(&self, m: i64) -> SpherePoly {
        SpherePoly { n: self.n, poly: self.poly.weight_part(m) }
    }

    /// All nonzero circle-weight components.
    pub fn fourier_modes(&self) -> BTreeMap<i64, SpherePoly> {
        let mut out: BTreeMap<i64, SpherePoly> = BTreeMap::new();
        for (m, c) in self.poly.terms() {
            out.entry(m.weight()).or_insert_with(|| SpherePoly::zero(self.n)).poly.add_term(m.clone(), c.clone());
        }
        out
    }

    /// `int |f|^2`, real and nonnegative.
    pub fn norm_sqr(&self) -> BigRational {
        (self * &self.conjugate()).integrate().re
    }

    /// Hermitian `L^2` product `int f conj(g)`.
    pub fn inner(&self, g: &SpherePoly) -> ExactScalar {
        (self * &g.conjugate()).integrate()
    }

    pub fn eval_f64(&self, point: &[(f64, f64)]) -> (f64, f64) {
        self.poly.eval_f64(point)
    }
}

/// Probability-measure integral of an ambient polynomial restricted to the sphere.
pub fn integrate_poly(p: &Poly) -> ExactScalar {
    let n = (p.ambient - 1) as u64;
    let mut acc = ExactScalar::zero();
    for (m, c) in p.terms() {
        if m.z() != m.w() {
            continue;
        }
        let total: u64 = m.z().iter().map(|&e| e as u64).sum();
        let num = m.z().iter().fold(factorial(n), |acc, &e| acc * factorial(e as u64));
        let val = BigRational::new(num, factorial(n + total));
        acc += &c.scale(&val);
    }
    acc
}

/// Monomial integral as a plain rational (the `a = b` case).
pub fn monomial_moment(n: usize, a: &[u16]) -> BigRational {
    let total: u64 = a.iter().map(|&e| e as u64).sum();
    let num = a.iter().fold(factorial(n as u64), |acc, &e| acc * factorial(e as u64));
    BigRational::new(num, factorial(n as u64 + total))
}

impl fmt::Display for SpherePoly {
    /// Textual grammar: `(re_num/re_den,im_num/im_den) z1^a1 ... w1^b1 ...`, one term per group.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(0/1,0/1)");
        }
        let mut first = true;
        for (m, c) in self.poly.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({}/{},{}/{})", c.re.numer(), c.re.denom(), c.im.numer(), c.im.denom())?;
            for (j, &e) in m.z().iter().enumerate() {
                write_var(f, 'z', j + 1, e)?;
            }
            for (j, &e) in m.w().iter().enumerate() {
                write_var(f, 'w', j + 1, e)?;
            }
        }
        Ok(())
    }
}

fn write_var(f: &mut fmt::Formatter<'_>, v: char, j: usize, e: u16) -> fmt::Result {
    match e {
        0 => Ok(()),
        1 => write!(f, " {v}{j}"),
        _ => write!(f, " {v}{j}^{e}"),
    }
}

impl fmt::Debug for SpherePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SpherePoly[n={}]({})", self.n, self)
    }
}

impl<'a> Add<&'a SpherePoly> for &'a SpherePoly {
    type Output = SpherePoly;
    fn add(self, o: &SpherePoly) -> SpherePoly {
        self.try_add(o).expect("sphere dimension mismatch")
    }
}

impl<'a> Sub<&'a SpherePoly> for &'a SpherePoly {
    type Output = SpherePoly;
    fn sub(self, o: &SpherePoly) -> SpherePoly {
        self.try_sub(o).expect("sphere dimension mismatch")
    }
}

impl<'a> Mul<&'a SpherePoly> for &'a SpherePoly {
    type Output = SpherePoly;
    fn mul(self, o: &SpherePoly) -> SpherePoly {
        self.try_mul(o).expect("sphere dimension mismatch")
    }
}

impl Add for SpherePoly {
    type Output = SpherePoly;
    fn add(self, o: SpherePoly) -> SpherePoly {
        &self + &o
    }
}

impl Sub for SpherePoly {
    type Output = SpherePoly;
    fn sub(self, o: SpherePoly) -> SpherePoly {
        &self - &o
    }
}

impl Mul for SpherePoly {
    type Output = SpherePoly;
    fn mul(self, o: SpherePoly) -> SpherePoly {
        &self * &o
    }
}

impl Neg for SpherePoly {
    type Output = SpherePoly;
    fn neg(self) -> SpherePoly {
        self.scale(&ExactScalar::from_int(-1))
    }
}

impl Neg for &SpherePoly {
    type Output = SpherePoly;
    fn neg(self) -> SpherePoly {
        self.scale(&ExactScalar::from_int(-1))
    }
}

/// Every monomial `z^a w^b` in `n + 1` variables with `|a| + |b| <= max_degree`,
/// ordered by total degree, then lexicographically by exponent vector.
pub fn monomial_pool(n: usize, max_degree: u32) -> Vec<Monomial> {
    let vars = 2 * (n + 1);
    let mut out = Vec::new();
    for d in 0..=max_degree {
        let mut cur = vec![0u16; vars];
        compositions(d, 0, &mut cur, &mut out);
    }
    out
}

fn compositions(rem: u32, idx: usize, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
    if idx == cur.len() - 1 {
        cur[idx] = rem as u16;
        out.push(Monomial(cur.clone()));
        cur[idx] = 0;
        return;
    }
    for e in (0..=rem).rev() {
        cur[idx] = e as u16;
        compositions(rem - e, idx + 1, cur, out);
    }
    cur[idx] = 0;
}

impl Monomial {
    pub fn to_sphere(&self) -> SpherePoly {
        normal_form(&Poly::monomial(self.clone(), ExactScalar::one()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::scalar::rat;

    fn z(n: usize, j: usize) -> SpherePoly {
        SpherePoly::z(n, j)
    }
    fn w(n: usize, j: usize) -> SpherePoly {
        SpherePoly::w(n, j)
    }

    #[test]
    fn sphere_relation_reduces_to_one() {
        let p = &(&z(1, 1) * &w(1, 1)) + &(&z(1, 2) * &w(1, 2));
        assert_eq!(p, SpherePoly::one(1));
    }

    #[test]
    fn coordinate_is_already_reduced() {
        let p = z(1, 1);
        assert_eq!(normal_form(p.as_poly()), p);
    }

    #[test]
    fn single_division_step() {
        // z1 w1 -> 1 - z2 w2
        let p = &z(1, 1) * &w(1, 1);
        let expected = &SpherePoly::one(1) - &(&z(1, 2) * &w(1, 2));
        assert_eq!(p, expected);
    }

    #[test]
    fn integrals_of_small_monomials() {
        assert_eq!(SpherePoly::one(1).integrate(), ExactScalar::one());
        assert_eq!((&z(1, 1) * &w(1, 1)).integrate(), ExactScalar::ratio(1, 2));
        assert_eq!((&z(1, 1) * &w(1, 1)).pow(2).integrate(), ExactScalar::ratio(1, 3));
        assert_eq!(z(2, 3).integrate(), ExactScalar::zero());
        assert_eq!(monomial_moment(1, &[5, 0]), rat(1, 6));
    }

    #[test]
    fn square_of_relation_term() {
        // (z1 w1)^2 -> (1 - x)^2 with x = z2 w2
        let reduced = (&z(1, 1) * &w(1, 1)).pow(2);
        let expect = {
            let x = &z(1, 2) * &w(1, 2);
            &(&SpherePoly::one(1) - &x.scale(&ExactScalar::from_int(2))) + &(&x * &x)
        };
        assert_eq!(reduced, expect);
        // on S^3, |z1|^2 is uniform on [0,1], so int |z1|^4 = 1/3
        assert_eq!(reduced.integrate(), ExactScalar::ratio(1, 3));
    }

    #[test]
    fn conjugation_examples() {
        assert_eq!(z(1, 1).conjugate(), w(1, 1));
        let p = (&z(1, 1) * &w(1, 2)).scale(&ExactScalar::i());
        let q = (&z(1, 2) * &w(1, 1)).scale(&ExactScalar::i().conj());
        assert_eq!(p.conjugate(), q);
        let r = &z(1, 1) + &w(1, 1);
        assert_eq!(r.conjugate(), r);
        assert!(r.is_real());
    }

    #[test]
    fn fourier_projection_examples() {
        let p = &(&z(1, 1) * &z(1, 1)) * &w(1, 2);
        assert_eq!(p.fourier_project(1), p);
        let q = &z(1, 1) + &w(1, 1);
        assert_eq!(q.fourier_project(1), z(1, 1));
        assert_eq!(q.fourier_project(-1), w(1, 1));
        assert!(q.fourier_project(0).is_zero());
    }

    #[test]
    fn pool_is_ordered_and_counted() {
        let pool = monomial_pool(1, 4);
        assert_eq!(pool.len(), 70);
        assert_eq!(pool[0].degree(), 0);
        assert!(pool.windows(2).all(|w| w[0].degree() <= w[1].degree()));
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        assert!(matches!(z(1, 1).try_mul(&z(2, 1)), Err(Error::DimensionMismatch { .. })));
        assert!(z(1, 1).try_add(&z(2, 1)).is_err());
    }
}
