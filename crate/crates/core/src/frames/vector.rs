//! Complex vector fields on the sphere with polynomial coefficients.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Error;
use crate::ring::{normal_form, ExactScalar, Poly, SpherePoly};

use super::{pairs, FrameIndex};

/// `sum_a a_a d/dz_a + b_a d/dw_a`, with `w_a` the conjugate coordinate.
#[derive(Clone, PartialEq)]
pub struct FrameVector {
    n: usize,
    pub dz: Vec<SpherePoly>,
    pub dw: Vec<SpherePoly>,
}

impl FrameVector {
    pub fn zero(n: usize) -> Self {
        FrameVector { n, dz: vec![SpherePoly::zero(n); n + 1], dw: vec![SpherePoly::zero(n); n + 1] }
    }

    pub fn from_components(dz: Vec<SpherePoly>, dw: Vec<SpherePoly>) -> Self {
        let n = dz[0].n();
        assert!(dz.len() == n + 1 && dw.len() == n + 1, "component vectors must have length n + 1");
        FrameVector { n, dz, dw }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `Z_jk = w_j d/dz_k - w_k d/dz_j`.
    pub fn z_field(n: usize, j: usize, k: usize) -> Self {
        let mut v = Self::zero(n);
        v.dz[k - 1] = SpherePoly::w(n, j);
        v.dz[j - 1] = -SpherePoly::w(n, k);
        v
    }

    /// `Zbar_jk = z_j d/dw_k - z_k d/dw_j`.
    pub fn zbar_field(n: usize, j: usize, k: usize) -> Self {
        Self::z_field(n, j, k).conjugate()
    }

    /// `T = (i/2) sum (z_a d/dz_a - w_a d/dw_a)`; it acts on `Gamma_m` as `i m / 2`.
    pub fn t_field(n: usize) -> Self {
        let h = ExactScalar::complex(num::zero(), crate::ring::rat(1, 2));
        let mut v = Self::zero(n);
        for a in 0..=n {
            v.dz[a] = SpherePoly::z(n, a + 1).scale(&h);
            v.dw[a] = SpherePoly::w(n, a + 1).scale(&-h.clone());
        }
        v
    }

    /// Reeb field of the contact form `scale * theta_0`, equal to `(2 / scale) T`.
    pub fn reeb(n: usize, scale: &ExactScalar) -> Self {
        let f = &ExactScalar::from_int(2) / scale;
        Self::t_field(n).scale(&f)
    }

    /// `sigma^# = sum w_a d/dw_a` (not tangential; used in projections).
    pub fn sigma_sharp(n: usize) -> Self {
        let mut v = Self::zero(n);
        for a in 0..=n {
            v.dw[a] = SpherePoly::w(n, a + 1);
        }
        v
    }

    pub fn geller(n: usize, idx: FrameIndex) -> Self {
        match idx {
            FrameIndex::T => Self::t_field(n),
            FrameIndex::Z(j, k) => Self::z_field(n, j, k),
            FrameIndex::Zbar(j, k) => Self::zbar_field(n, j, k),
        }
    }

    pub fn conjugate(&self) -> Self {
        FrameVector {
            n: self.n,
            dz: self.dw.iter().map(|p| p.conjugate()).collect(),
            dw: self.dz.iter().map(|p| p.conjugate()).collect(),
        }
    }

    pub fn scale(&self, c: &ExactScalar) -> Self {
        self.map(|p| p.scale(c))
    }

    pub fn mul_poly(&self, f: &SpherePoly) -> Self {
        self.map(|p| p * f)
    }

    fn map(&self, f: impl Fn(&SpherePoly) -> SpherePoly) -> Self {
        FrameVector { n: self.n, dz: self.dz.iter().map(&f).collect(), dw: self.dw.iter().map(&f).collect() }
    }

    fn zip(&self, o: &Self, f: impl Fn(&SpherePoly, &SpherePoly) -> SpherePoly) -> Self {
        FrameVector {
            n: self.n,
            dz: self.dz.iter().zip(&o.dz).map(|(a, b)| f(a, b)).collect(),
            dw: self.dw.iter().zip(&o.dw).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.zip(o, |a, b| a + b)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.zip(o, |a, b| a - b)
    }

    pub fn is_zero(&self) -> bool {
        self.dz.iter().chain(&self.dw).all(|p| p.is_zero())
    }

    /// Component along ambient coordinate `idx` (`0..N` are `z`, `N..2N` are `w`).
    pub fn ambient_component(&self, idx: usize) -> &SpherePoly {
        let amb = self.n + 1;
        if idx < amb {
            &self.dz[idx]
        } else {
            &self.dw[idx - amb]
        }
    }

    /// `V(|z|^2)` restricted to the sphere; zero iff `V` is tangent.
    pub fn radial_defect(&self) -> SpherePoly {
        let mut acc = SpherePoly::zero(self.n);
        for a in 0..=self.n {
            acc = &acc + &(&self.dz[a] * &SpherePoly::w(self.n, a + 1));
            acc = &acc + &(&self.dw[a] * &SpherePoly::z(self.n, a + 1));
        }
        acc
    }

    pub fn is_tangential(&self) -> bool {
        self.radial_defect().is_zero()
    }

    /// Holomorphic type: no `d/dw` part and tangent.
    pub fn is_holomorphic_tangent(&self) -> bool {
        self.dw.iter().all(|p| p.is_zero()) && self.is_tangential()
    }

    pub fn is_antiholomorphic_tangent(&self) -> bool {
        self.dz.iter().all(|p| p.is_zero()) && self.is_tangential()
    }

    /// Derivation `V f` on the normal-form representative, reduced again.
    pub fn apply(&self, f: &SpherePoly) -> SpherePoly {
        let p = f.as_poly();
        let amb = self.n + 1;
        let mut acc = Poly::zero(amb);
        for a in 0..amb {
            if !self.dz[a].is_zero() {
                acc = acc + self.dz[a].as_poly().clone() * p.dz(a + 1);
            }
            if !self.dw[a].is_zero() {
                acc = acc + self.dw[a].as_poly().clone() * p.dw(a + 1);
            }
        }
        normal_form(&acc)
    }

    /// Lie bracket `[self, o]`, computed on ambient components.
    pub fn bracket(&self, o: &FrameVector) -> FrameVector {
        let comp = |x: &SpherePoly, y: &SpherePoly| &self.apply(y) - &o.apply(x);
        FrameVector {
            n: self.n,
            dz: self.dz.iter().zip(&o.dz).map(|(x, y)| comp(x, y)).collect(),
            dw: self.dw.iter().zip(&o.dw).map(|(x, y)| comp(x, y)).collect(),
        }
    }

    /// `theta_0(V)` for `theta_0 = (i/2) sum (z dw - w dz)`.
    pub fn theta0(&self) -> SpherePoly {
        let mut acc = SpherePoly::zero(self.n);
        for a in 0..=self.n {
            acc = &acc + &(&SpherePoly::z(self.n, a + 1) * &self.dw[a]);
            acc = &acc - &(&SpherePoly::w(self.n, a + 1) * &self.dz[a]);
        }
        acc.scale(&ExactScalar::complex(num::zero(), crate::ring::rat(1, 2)))
    }

    /// `theta_jk(V) = z_j V^{z_k} - z_k V^{z_j}`.
    pub fn theta_jk(&self, j: usize, k: usize) -> SpherePoly {
        &(&SpherePoly::z(self.n, j) * &self.dz[k - 1]) - &(&SpherePoly::z(self.n, k) * &self.dz[j - 1])
    }

    /// Coefficients over `{T, Z_jk, Zbar_jk}`: `2 theta_0(V)`, `theta_jk(V)`, `conj(theta_jk)(V)`.
    /// For tangent `V` these reconstruct it, see [`FrameVector::from_geller`].
    pub fn geller_components(&self) -> BTreeMap<FrameIndex, SpherePoly> {
        let mut out = BTreeMap::new();
        let t = self.theta0().scale(&ExactScalar::from_int(2));
        if !t.is_zero() {
            out.insert(FrameIndex::T, t);
        }
        let conj = self.conjugate();
        for (j, k) in pairs(self.n) {
            let a = self.theta_jk(j, k);
            if !a.is_zero() {
                out.insert(FrameIndex::Z(j, k), a);
            }
            let b = conj.theta_jk(j, k).conjugate();
            if !b.is_zero() {
                out.insert(FrameIndex::Zbar(j, k), b);
            }
        }
        out
    }

    pub fn from_geller(n: usize, comps: &BTreeMap<FrameIndex, SpherePoly>) -> Self {
        comps.iter().fold(Self::zero(n), |acc, (idx, c)| acc.add(&Self::geller(n, *idx).mul_poly(c)))
    }

    /// Component in `H^{0,1}`: drop the `d/dz` part and project the rest along `sigma^#`.
    pub fn project_antiholomorphic(&self) -> FrameVector {
        let mut s = SpherePoly::zero(self.n);
        for a in 0..=self.n {
            s = &s + &(&self.dw[a] * &SpherePoly::z(self.n, a + 1));
        }
        let mut v = FrameVector::zero(self.n);
        for a in 0..=self.n {
            v.dw[a] = &self.dw[a] - &(&s * &SpherePoly::w(self.n, a + 1));
        }
        v
    }

    pub fn project_holomorphic(&self) -> FrameVector {
        self.conjugate().project_antiholomorphic().conjugate()
    }

    pub fn eval_f64(&self, p: &[(f64, f64)]) -> Vec<(f64, f64)> {
        self.dz.iter().chain(&self.dw).map(|c| c.eval_f64(p)).collect()
    }
}

impl fmt::Debug for FrameVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FrameVector[n={}]{{", self.n)?;
        for (a, c) in self.dz.iter().enumerate() {
            if !c.is_zero() {
                write!(f, " d/dz{}: {};", a + 1, c)?;
            }
        }
        for (a, c) in self.dw.iter().enumerate() {
            if !c.is_zero() {
                write!(f, " d/dw{}: {};", a + 1, c)?;
            }
        }
        write!(f, " }}")
    }
}

/// `L(V, W) = sum_a v_a conj(w_a)` for holomorphic tangent `V`, `W`; equals `-i d theta_0(V, conj W)`.
pub fn levi_pairing(v: &FrameVector, w: &FrameVector) -> Result<SpherePoly, Error> {
    for x in [v, w] {
        if !x.is_holomorphic_tangent() {
            return Err(Error::NotTangential(format!("{x:?} is not a holomorphic tangent field")));
        }
    }
    if v.n != w.n {
        return Err(Error::DimensionMismatch { left: v.n, right: w.n });
    }
    let mut acc = SpherePoly::zero(v.n);
    for a in 0..=v.n {
        acc = &acc + &(&v.dz[a] * &w.dz[a].conjugate());
    }
    Ok(acc)
}

/// `theta_lm(Z_jk)` in closed form: `z_l w_j d_km - z_l w_k d_jm - z_m w_j d_kl + z_m w_k d_jl`.
pub fn theta_on_z_closed_form(n: usize, (l, m): (usize, usize), (j, k): (usize, usize)) -> SpherePoly {
    let d = |a: usize, b: usize| a == b;
    let term = |x: usize, y: usize| &SpherePoly::z(n, x) * &SpherePoly::w(n, y);
    let mut acc = SpherePoly::zero(n);
    if d(k, m) {
        acc = &acc + &term(l, j);
    }
    if d(j, m) {
        acc = &acc - &term(l, k);
    }
    if d(k, l) {
        acc = &acc - &term(m, j);
    }
    if d(j, l) {
        acc = &acc + &term(m, k);
    }
    acc
}
