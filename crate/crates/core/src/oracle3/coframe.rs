//! Base frame of `S^3` and its deformation `Z_1(t) = mu (Z_1 - i t E Zbar_1)`.
//!
//! Everything is expressed in the base frame `V = (T, Z_1, Zbar_1)` and its dual coframe
//! `phi = (theta, theta^1, theta^1bar)` with coefficients that are truncated series.

use num::rational::BigRational;

use crate::frames::{FrameForm, FrameVector};
use crate::ring::{ExactScalar, SpherePoly, TSeries2};

pub type Series = TSeries2<SpherePoly>;

pub(crate) fn zero_series() -> Series {
    TSeries2::constant(SpherePoly::zero(1))
}

pub(crate) fn const_series(c: ExactScalar) -> Series {
    TSeries2::constant(SpherePoly::constant(1, c))
}

/// `sum_a c[a] V_a`.
#[derive(Clone, Debug, PartialEq)]
pub struct SeriesVector {
    pub c: [Series; 3],
}

/// `sum_k c[k] phi_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct SeriesForm {
    pub c: [Series; 3],
}

impl SeriesVector {
    /// Conjugation swaps the `Z_1` and `Zbar_1` slots; `T` is real.
    pub fn conjugate(&self) -> Self {
        SeriesVector { c: [self.c[0].conjugate(), self.c[2].conjugate(), self.c[1].conjugate()] }
    }

    pub fn scale(&self, s: &ExactScalar) -> Self {
        SeriesVector { c: self.c.clone().map(|x| x.scale(s)) }
    }

    pub fn order(&self, k: usize) -> [SpherePoly; 3] {
        [self.c[0].c[k].clone(), self.c[1].c[k].clone(), self.c[2].c[k].clone()]
    }
}

impl SeriesForm {
    pub fn conjugate(&self) -> Self {
        SeriesForm { c: [self.c[0].conjugate(), self.c[2].conjugate(), self.c[1].conjugate()] }
    }

    pub fn add(&self, o: &Self) -> Self {
        SeriesForm { c: [&self.c[0] + &o.c[0], &self.c[1] + &o.c[1], &self.c[2] + &o.c[2]] }
    }

    pub fn times(&self, f: &Series) -> Self {
        SeriesForm { c: [&self.c[0] * f, &self.c[1] * f, &self.c[2] * f] }
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    /// `alpha(X)`.
    pub fn on(&self, x: &SeriesVector) -> Series {
        (0..3).fold(zero_series(), |acc, k| &acc + &(&self.c[k] * &x.c[k]))
    }
}

/// `(alpha ^ beta)(X, Y)`.
pub fn wedge_on(a: &SeriesForm, b: &SeriesForm, x: &SeriesVector, y: &SeriesVector) -> Series {
    &(&a.on(x) * &b.on(y)) - &(&a.on(y) * &b.on(x))
}

/// The round `S^3` with contact form `theta = s theta_0`.
#[derive(Clone, Debug)]
pub struct BaseFrame {
    pub scale: BigRational,
    /// `T_s = (2/s) T`, `Z_1 = w2 d/dz1 - w1 d/dz2`, `Zbar_1`.
    pub vectors: [FrameVector; 3],
    /// `theta`, `theta^1 = z2 dz1 - z1 dz2`, `theta^1bar`.
    pub forms: [FrameForm; 3],
    /// `structure[k][a][b] = d phi_k (V_a, V_b)`, from ambient exterior calculus.
    pub structure: [[[SpherePoly; 3]; 3]; 3],
}

impl BaseFrame {
    pub fn new(scale: &BigRational) -> Self {
        let s = ExactScalar::real(scale.clone());
        let z1 = FrameVector::z_field(1, 1, 2).scale(&ExactScalar::from_int(-1));
        let vectors = [FrameVector::reeb(1, &s), z1.clone(), z1.conjugate()];
        let th1 = FrameForm::theta_jk(1, 1, 2).scale(&ExactScalar::from_int(-1));
        let forms = [FrameForm::contact(1, &s), th1.clone(), th1.conjugate()];
        for (k, f) in forms.iter().enumerate() {
            for (a, v) in vectors.iter().enumerate() {
                let expect = if k == a { SpherePoly::one(1) } else { SpherePoly::zero(1) };
                assert_eq!(f.eval(v), expect, "base coframe is not dual to the base frame");
            }
        }
        let structure = std::array::from_fn(|k| {
            let d = forms[k].d();
            std::array::from_fn(|a| std::array::from_fn(|b| d.eval2(&vectors[a], &vectors[b])))
        });
        BaseFrame { scale: scale.clone(), vectors, forms, structure }
    }

    pub fn scale_scalar(&self) -> ExactScalar {
        ExactScalar::real(self.scale.clone())
    }

    /// `X(f)`.
    pub fn apply(&self, x: &SeriesVector, f: &Series) -> Series {
        (0..3).fold(zero_series(), |acc, a| {
            if x.c[a].is_zero() {
                return acc;
            }
            let va = f.map(|p| self.vectors[a].apply(p));
            &acc + &(&x.c[a] * &va)
        })
    }

    /// `d alpha (X, Y)`.
    pub fn d_on(&self, alpha: &SeriesForm, x: &SeriesVector, y: &SeriesVector) -> Series {
        let mut acc = zero_series();
        for k in 0..3 {
            if alpha.c[k].is_zero() {
                continue;
            }
            acc = &acc + &(&self.apply(x, &alpha.c[k]) * &y.c[k]);
            acc = &acc - &(&self.apply(y, &alpha.c[k]) * &x.c[k]);
            let mut dphi = zero_series();
            for a in 0..3 {
                for b in 0..3 {
                    let c = &self.structure[k][a][b];
                    if c.is_zero() {
                        continue;
                    }
                    dphi = &dphi + &(&(&x.c[a] * &y.c[b]).times_coeff(c));
                }
            }
            acc = &acc + &(&alpha.c[k] * &dphi);
        }
        acc
    }

    pub fn base_vector(&self, a: usize) -> SeriesVector {
        let mut c = [zero_series(), zero_series(), zero_series()];
        c[a] = const_series(ExactScalar::one());
        SeriesVector { c }
    }

    pub fn base_form(&self, k: usize) -> SeriesForm {
        let mut c = [zero_series(), zero_series(), zero_series()];
        c[k] = const_series(ExactScalar::one());
        SeriesForm { c }
    }
}

/// Optional changes to the frame path, used to test gauge and path independence.
#[derive(Clone, Debug, Default)]
pub struct PathOptions {
    /// Constant multiplier of `Z_1(t)`; must have modulus 1.
    pub phase: Option<ExactScalar>,
    /// Adds `t^2 K Zbar_1` to `Z_1(t)`.
    pub second_order: Option<SpherePoly>,
}

#[derive(Clone, Debug)]
pub struct DeformedCoframe {
    pub base: BaseFrame,
    pub e: SpherePoly,
    /// Real order-2 renormalizer: `mu = 1 + t^2 gamma`.
    pub gamma: SpherePoly,
    pub z1: SeriesVector,
    pub z1bar: SeriesVector,
    pub theta1: SeriesForm,
    pub theta1bar: SeriesForm,
}

pub fn deform_frame(e: &SpherePoly) -> DeformedCoframe {
    deform_frame_with(e, &BigRational::from_integer(1.into()), &PathOptions::default())
}

pub fn deform_frame_with(e: &SpherePoly, scale: &BigRational, opts: &PathOptions) -> DeformedCoframe {
    assert_eq!(e.n(), 1, "the oracle lives on S^3");
    let base = BaseFrame::new(scale);
    let mi = ExactScalar::complex(num::zero(), BigRational::from_integer((-1).into()));
    let raw = SeriesVector {
        c: [zero_series(), const_series(ExactScalar::one()), TSeries2::linear(e.scale(&mi))],
    };
    // Levi norm of the raw field, relative to the base value s
    let theta = base.base_form(0);
    let levi = |x: &SeriesVector| {
        base.d_on(&theta, x, &x.conjugate()).scale(&(&ExactScalar::i().conj() / &base.scale_scalar()))
    };
    let l = levi(&raw);
    let gamma = l.c[2].scale(&ExactScalar::ratio(-1, 2));
    let mu = TSeries2::new(SpherePoly::one(1), SpherePoly::zero(1), gamma.clone());
    let mut z1 = SeriesVector { c: raw.c.clone().map(|x| &x * &mu) };
    if let Some(k) = &opts.second_order {
        z1.c[2] = &z1.c[2] + &TSeries2::quadratic(k.clone());
    }
    if let Some(ph) = &opts.phase {
        z1 = z1.scale(ph);
    }
    let z1bar = z1.conjugate();
    // dual coframe: theta^1(t) = a theta^1 + b theta^1bar
    let (m11, m12, m21, m22) = (&z1.c[1], &z1.c[2], &z1bar.c[1], &z1bar.c[2]);
    let det = &(m11 * m22) - &(m12 * m21);
    let inv = det.inverse_unit();
    let a = m22 * &inv;
    let b = &-m21 * &inv;
    let theta1 = SeriesForm { c: [zero_series(), a, b] };
    let theta1bar = theta1.conjugate();
    DeformedCoframe { base, e: e.clone(), gamma, z1, z1bar, theta1, theta1bar }
}

impl DeformedCoframe {
    pub fn reeb(&self) -> SeriesVector {
        self.base.base_vector(0)
    }

    pub fn theta(&self) -> SeriesForm {
        self.base.base_form(0)
    }

    /// Duality residuals `theta^1(Z_1) - 1`, `theta^1(Zbar_1)`, `theta^1(T)`, `theta(Z_1)`.
    pub fn duality_residuals(&self) -> Vec<Series> {
        let one = const_series(ExactScalar::one());
        vec![
            &self.theta1.on(&self.z1) - &one,
            self.theta1.on(&self.z1bar),
            self.theta1.on(&self.reeb()),
            self.theta().on(&self.z1),
        ]
    }

    /// `-i d theta(Z_1(t), Zbar_1(t)) / s - 1`.
    pub fn levi_residual(&self) -> Series {
        let l = self.base.d_on(&self.theta(), &self.z1, &self.z1bar);
        &l.scale(&(&ExactScalar::i().conj() / &self.base.scale_scalar())) - &const_series(ExactScalar::one())
    }
}
