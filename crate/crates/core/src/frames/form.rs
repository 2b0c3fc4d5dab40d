//! Differential 1- and 2-forms given by ambient coefficients, evaluated on tangent fields.
//!
//! Ambient coordinate `a` ranges over `0..2N`: `z_1..z_N` then `w_1..w_N`.

use std::collections::BTreeMap;

use crate::ring::{ExactScalar, SpherePoly};

use super::vector::FrameVector;

#[derive(Clone, Debug, PartialEq)]
pub enum FrameForm {
    /// `sum_a c_a dx_a`.
    One { n: usize, coeffs: Vec<SpherePoly> },
    /// `sum_{a<b} c_ab dx_a ^ dx_b`.
    Two { n: usize, coeffs: BTreeMap<(usize, usize), SpherePoly> },
}

impl FrameForm {
    pub fn zero_one(n: usize) -> Self {
        FrameForm::One { n, coeffs: vec![SpherePoly::zero(n); 2 * (n + 1)] }
    }

    pub fn n(&self) -> usize {
        match self {
            FrameForm::One { n, .. } | FrameForm::Two { n, .. } => *n,
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            FrameForm::One { .. } => 1,
            FrameForm::Two { .. } => 2,
        }
    }

    /// `scale * theta_0`, `theta_0 = (i/2) sum (z dw - w dz)`.
    pub fn contact(n: usize, scale: &ExactScalar) -> Self {
        let h = &ExactScalar::complex(num::zero(), crate::ring::rat(1, 2)) * scale;
        let amb = n + 1;
        let mut coeffs = vec![SpherePoly::zero(n); 2 * amb];
        for a in 0..amb {
            coeffs[a] = SpherePoly::w(n, a + 1).scale(&-h.clone());
            coeffs[amb + a] = SpherePoly::z(n, a + 1).scale(&h);
        }
        FrameForm::One { n, coeffs }
    }

    /// `theta_jk = z_j dz_k - z_k dz_j`.
    pub fn theta_jk(n: usize, j: usize, k: usize) -> Self {
        let mut coeffs = vec![SpherePoly::zero(n); 2 * (n + 1)];
        coeffs[k - 1] = SpherePoly::z(n, j);
        coeffs[j - 1] = -SpherePoly::z(n, k);
        FrameForm::One { n, coeffs }
    }

    pub fn theta_bar_jk(n: usize, j: usize, k: usize) -> Self {
        Self::theta_jk(n, j, k).conjugate()
    }

    pub fn conjugate(&self) -> Self {
        match self {
            FrameForm::One { n, coeffs } => {
                let amb = n + 1;
                let mut out = vec![SpherePoly::zero(*n); 2 * amb];
                for (a, c) in coeffs.iter().enumerate() {
                    out[(a + amb) % (2 * amb)] = c.conjugate();
                }
                FrameForm::One { n: *n, coeffs: out }
            }
            FrameForm::Two { n, coeffs } => {
                let amb = n + 1;
                let mut out = BTreeMap::new();
                for (&(a, b), c) in coeffs {
                    let (x, y) = ((a + amb) % (2 * amb), (b + amb) % (2 * amb));
                    let (key, c) = if x < y { ((x, y), c.conjugate()) } else { ((y, x), -c.conjugate()) };
                    add_entry(&mut out, key, c);
                }
                FrameForm::Two { n: *n, coeffs: out }
            }
        }
    }

    pub fn scale(&self, s: &ExactScalar) -> Self {
        match self {
            FrameForm::One { n, coeffs } => FrameForm::One { n: *n, coeffs: coeffs.iter().map(|c| c.scale(s)).collect() },
            FrameForm::Two { n, coeffs } => FrameForm::Two {
                n: *n,
                coeffs: coeffs.iter().map(|(k, c)| (*k, c.scale(s))).filter(|(_, c)| !c.is_zero()).collect(),
            },
        }
    }

    pub fn mul_poly(&self, f: &SpherePoly) -> Self {
        match self {
            FrameForm::One { n, coeffs } => FrameForm::One { n: *n, coeffs: coeffs.iter().map(|c| c * f).collect() },
            FrameForm::Two { n, coeffs } => FrameForm::Two {
                n: *n,
                coeffs: coeffs.iter().map(|(k, c)| (*k, c * f)).filter(|(_, c)| !c.is_zero()).collect(),
            },
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        match (self, o) {
            (FrameForm::One { n, coeffs: a }, FrameForm::One { coeffs: b, .. }) => {
                FrameForm::One { n: *n, coeffs: a.iter().zip(b).map(|(x, y)| x + y).collect() }
            }
            (FrameForm::Two { n, coeffs: a }, FrameForm::Two { coeffs: b, .. }) => {
                let mut out = a.clone();
                for (k, c) in b {
                    add_entry(&mut out, *k, c.clone());
                }
                FrameForm::Two { n: *n, coeffs: out }
            }
            _ => panic!("cannot add forms of different degree"),
        }
    }

    /// Value on one vector (1-form) or a pair (2-form, `omega(V, W)`).
    pub fn eval(&self, v: &FrameVector) -> SpherePoly {
        match self {
            FrameForm::One { n, coeffs } => coeffs
                .iter()
                .enumerate()
                .fold(SpherePoly::zero(*n), |acc, (a, c)| &acc + &(c * v.ambient_component(a))),
            FrameForm::Two { .. } => panic!("2-form needs two arguments"),
        }
    }

    pub fn eval2(&self, v: &FrameVector, w: &FrameVector) -> SpherePoly {
        match self {
            FrameForm::Two { n, coeffs } => coeffs.iter().fold(SpherePoly::zero(*n), |acc, (&(a, b), c)| {
                let det = &(v.ambient_component(a) * w.ambient_component(b))
                    - &(v.ambient_component(b) * w.ambient_component(a));
                &acc + &(c * &det)
            }),
            FrameForm::One { .. } => panic!("1-form takes one argument"),
        }
    }

    /// Exterior derivative of a 1-form.
    pub fn d(&self) -> FrameForm {
        match self {
            FrameForm::One { n, coeffs } => {
                let amb = n + 1;
                let mut out = BTreeMap::new();
                for (a, c) in coeffs.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for b in 0..2 * amb {
                        if a == b {
                            continue;
                        }
                        let dc = crate::ring::normal_form(&c.as_poly().partial(b));
                        if dc.is_zero() {
                            continue;
                        }
                        // d(c dx_a) contains dc/dx_b dx_b ^ dx_a
                        if b < a {
                            add_entry(&mut out, (b, a), dc);
                        } else {
                            add_entry(&mut out, (a, b), -dc);
                        }
                    }
                }
                FrameForm::Two { n: *n, coeffs: out }
            }
            FrameForm::Two { .. } => panic!("exterior derivative of 2-forms is not needed"),
        }
    }

    pub fn wedge(&self, o: &FrameForm) -> FrameForm {
        match (self, o) {
            (FrameForm::One { n, coeffs: a }, FrameForm::One { coeffs: b, .. }) => {
                let mut out = BTreeMap::new();
                for x in 0..a.len() {
                    for y in (x + 1)..a.len() {
                        let c = &(&a[x] * &b[y]) - &(&a[y] * &b[x]);
                        add_entry(&mut out, (x, y), c);
                    }
                }
                FrameForm::Two { n: *n, coeffs: out }
            }
            _ => panic!("wedge is implemented for 1-forms"),
        }
    }
}

fn add_entry(m: &mut BTreeMap<(usize, usize), SpherePoly>, k: (usize, usize), c: SpherePoly) {
    if c.is_zero() {
        return;
    }
    let v = match m.remove(&k) {
        Some(old) => &old + &c,
        None => c,
    };
    if !v.is_zero() {
        m.insert(k, v);
    }
}

/// Ambient `d theta_0 = i sum dz_a ^ dw_a`, written out directly.
pub fn d_theta0_closed_form(n: usize) -> FrameForm {
    let amb = n + 1;
    let mut coeffs = BTreeMap::new();
    for a in 0..amb {
        coeffs.insert((a, amb + a), SpherePoly::constant(n, ExactScalar::i()));
    }
    FrameForm::Two { n, coeffs }
}

/// Form dual to `Zbar_jk` under the Levi form: `theta_jk`.
pub fn sharp_inverse(v: &FrameVector) -> Option<FrameForm> {
    let n = v.n();
    super::pairs(n)
        .into_iter()
        .find(|&(j, k)| *v == FrameVector::zbar_field(n, j, k))
        .map(|(j, k)| FrameForm::theta_jk(n, j, k))
}
