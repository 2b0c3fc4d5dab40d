//! Global frame calculus on `S^{2n+1}`: the overcomplete families
//! `Z_jk = w_j d/dz_k - w_k d/dz_j`, `theta_jk = z_j dz_k - z_k dz_j` and the field `T`.

pub mod form;
pub mod tensor;
pub mod vector;

use std::fmt;

use serde::Serialize;

use crate::error::Error;
use crate::ring::{ExactScalar, SpherePoly};

pub use form::{d_theta0_closed_form, sharp_inverse, FrameForm};
pub use tensor::{Pair, TensorField};
pub use vector::{levi_pairing, theta_on_z_closed_form, FrameVector};

/// Index into the family `{T, Z_jk, Zbar_jk}` (`j < k`, counted from 1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum FrameIndex {
    T,
    Z(usize, usize),
    Zbar(usize, usize),
}

impl fmt::Display for FrameIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FrameIndex::T => write!(f, "T"),
            FrameIndex::Z(j, k) => write!(f, "Z{j}{k}"),
            FrameIndex::Zbar(j, k) => write!(f, "Zbar{j}{k}"),
        }
    }
}

/// All `(j, k)` with `1 <= j < k <= n + 1`, lexicographic.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (1..=n + 1).flat_map(|j| (j + 1..=n + 1).map(move |k| (j, k))).collect()
}

pub fn field_apply(x: &FrameVector, f: &SpherePoly) -> SpherePoly {
    x.apply(f)
}

pub fn form_eval(form: &FrameForm, x: &FrameVector) -> SpherePoly {
    form.eval(x)
}

/// `i/2` and friends.
fn ci(num: i64, den: i64) -> ExactScalar {
    ExactScalar::complex(num::zero(), crate::ring::rat(num, den))
}

/// Covariant derivative along `T`.
pub trait CovariantT: Sized {
    fn covariant_t(&self) -> Self;
}

impl CovariantT for FrameVector {
    /// `[T, X]`; the connection is torsion-free along `T` on the round sphere.
    fn covariant_t(&self) -> Self {
        FrameVector::t_field(self.n()).bracket(self)
    }
}

/// Weight of `Zbar_jk (x) theta_lm` under `T`: `+i` from `Zbar_jk` and `+i` from `theta_lm`.
pub fn tensor_frame_weight() -> ExactScalar {
    ci(2, 1)
}

impl CovariantT for TensorField {
    fn covariant_t(&self) -> Self {
        let t = FrameVector::t_field(self.n());
        let w = tensor_frame_weight();
        self.map(|c| &t.apply(c) + &c.scale(&w))
    }
}

pub fn covariant_t<X: CovariantT>(x: &X) -> X {
    x.covariant_t()
}

/// `nabla_X Y` for holomorphic tangent `X` and a tangent `Y` of pure type.
///
/// Antiholomorphic `Y`: the `H^{0,1}` part of `[X, Y]`. Holomorphic `Y`: from metric
/// compatibility, `theta_lm(nabla_X Y) = X L(Y, Z_lm) - L(Y, conj(nabla_X Zbar_lm))`,
/// reassembled over the tight frame.
pub fn covariant_z(x: &FrameVector, y: &FrameVector) -> Result<FrameVector, Error> {
    if !x.is_holomorphic_tangent() {
        return Err(Error::NotTangential(format!("{x:?} is not a holomorphic tangent field")));
    }
    let n = x.n();
    if y.is_antiholomorphic_tangent() {
        return Ok(x.bracket(y).project_antiholomorphic());
    }
    if y.is_holomorphic_tangent() {
        let mut out = FrameVector::zero(n);
        for (l, m) in pairs(n) {
            let zlm = FrameVector::z_field(n, l, m);
            let inner = x.apply(&levi_pairing(y, &zlm)?);
            let nb = x.bracket(&zlm.conjugate()).project_antiholomorphic().conjugate();
            let coeff = &inner - &levi_pairing(y, &nb)?;
            out = out.add(&zlm.mul_poly(&coeff));
        }
        return Ok(out);
    }
    Err(Error::NotTangential(format!("{y:?} is neither of type (1,0) nor (0,1)")))
}

/// Closed form of `nabla_{Z_jk} Zbar_lm`:
/// `(d_kl w_j - d_jl w_k)(dbar_m - z_m sigma#) + (d_jm w_k - d_km w_j)(dbar_l - z_l sigma#)`.
pub fn covariant_z_closed_form(n: usize, (j, k): (usize, usize), (l, m): (usize, usize)) -> FrameVector {
    let proj = |a: usize| {
        let mut v = FrameVector::sigma_sharp(n).mul_poly(&-SpherePoly::z(n, a));
        v.dw[a - 1] = &v.dw[a - 1] + &SpherePoly::one(n);
        v
    };
    let coef = |p: usize, q: usize, r: usize, s: usize, x: usize, y: usize| {
        // d_pq w_x - d_rs w_y
        let mut c = SpherePoly::zero(n);
        if p == q {
            c = &c + &SpherePoly::w(n, x);
        }
        if r == s {
            c = &c - &SpherePoly::w(n, y);
        }
        c
    };
    let first = proj(m).mul_poly(&coef(k, l, j, l, j, k));
    let second = proj(l).mul_poly(&coef(j, m, k, m, k, j));
    first.add(&second)
}

/// `(1/2) sum_{j<k} (Z_jk Zbar_jk + Zbar_jk Z_jk) f`, the sub-Laplacian built from frame fields.
pub fn frame_sublaplacian(f: &SpherePoly) -> SpherePoly {
    let n = f.n();
    let mut acc = SpherePoly::zero(n);
    for (j, k) in pairs(n) {
        let z = FrameVector::z_field(n, j, k);
        let zb = z.conjugate();
        acc = &acc + &z.apply(&zb.apply(f));
        acc = &acc + &zb.apply(&z.apply(f));
    }
    acc.scale(&ExactScalar::ratio(1, 2))
}

/// Expands a tangent vector over `{T, Z_jk, Zbar_jk}` and rebuilds it from the coefficients.
pub fn tight_expand_vector(v: &FrameVector) -> Result<std::collections::BTreeMap<FrameIndex, SpherePoly>, Error> {
    if !v.is_tangential() {
        return Err(Error::NotTangential(format!("{v:?}")));
    }
    Ok(v.geller_components())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: usize, j: usize) -> SpherePoly {
        SpherePoly::z(n, j)
    }
    fn w(n: usize, j: usize) -> SpherePoly {
        SpherePoly::w(n, j)
    }

    #[test]
    fn field_apply_examples() {
        let z12 = FrameVector::z_field(1, 1, 2);
        assert_eq!(z12.apply(&z(1, 2)), w(1, 1));
        assert_eq!(FrameVector::t_field(1).apply(&z(1, 1)), z(1, 1).scale(&ci(1, 2)));
        assert!(z12.is_tangential());
    }

    #[test]
    fn form_eval_examples() {
        let th = FrameForm::theta_jk(1, 1, 2);
        assert_eq!(th.eval(&FrameVector::z_field(1, 1, 2)), SpherePoly::one(1));
        let th2 = FrameForm::theta_jk(2, 1, 2);
        assert_eq!(th2.eval(&FrameVector::z_field(2, 1, 3)), &z(2, 2) * &w(2, 3));
        assert!(th.eval(&FrameVector::t_field(1)).is_zero());
        let one = ExactScalar::one();
        assert_eq!(FrameForm::contact(1, &one).eval(&FrameVector::reeb(1, &one)), SpherePoly::one(1));
    }

    #[test]
    fn levi_examples() {
        let a = FrameVector::z_field(1, 1, 2);
        assert_eq!(levi_pairing(&a, &a).unwrap(), SpherePoly::one(1));
        let b = FrameVector::z_field(2, 1, 2);
        let c = FrameVector::z_field(2, 1, 3);
        // conjugate of z2 w3: the pairing is linear in its first slot
        assert_eq!(levi_pairing(&b, &c).unwrap(), &z(2, 3) * &w(2, 2));
        assert_eq!(levi_pairing(&c, &b).unwrap(), &z(2, 2) * &w(2, 3));
        assert!(levi_pairing(&a, &FrameVector::t_field(1)).is_err());
    }

    #[test]
    fn t_weights() {
        let z12 = FrameVector::z_field(2, 1, 2);
        assert_eq!(covariant_t(&z12), z12.scale(&ci(-1, 1)));
        let zb = z12.conjugate();
        assert_eq!(covariant_t(&zb), zb.scale(&ci(1, 1)));
        let c = SpherePoly::constant(1, ExactScalar::ratio(3, 2));
        let e = TensorField::from_scalar(&c);
        assert_eq!(covariant_t(&e).coefficient((1, 2), (1, 2)), c.scale(&ci(2, 1)));
        let m4 = SpherePoly::monomial(1, &[0, 0], &[1, 3], ExactScalar::one());
        assert!(covariant_t(&TensorField::from_scalar(&m4)).is_zero());
    }

    #[test]
    fn covariant_z_matches_closed_form() {
        for n in 1..=2 {
            for jk in pairs(n) {
                let x = FrameVector::z_field(n, jk.0, jk.1);
                for lm in pairs(n) {
                    let y = FrameVector::zbar_field(n, lm.0, lm.1);
                    assert_eq!(covariant_z(&x, &y).unwrap(), covariant_z_closed_form(n, jk, lm));
                    let h = FrameVector::z_field(n, lm.0, lm.1);
                    assert!(covariant_z(&x, &h).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn frame_laplacian_on_coordinate() {
        assert_eq!(frame_sublaplacian(&z(1, 1)), z(1, 1).scale(&ExactScalar::ratio(-1, 2)));
    }
}
