//! Structure equation `d theta^1 = theta^1 ^ omega + A theta ^ theta^1bar` solved order by order.

use super::coframe::{wedge_on, DeformedCoframe, Series, SeriesForm};
use crate::ring::{ExactScalar, SpherePoly};

#[derive(Clone, Debug)]
pub struct PseudohermitianSeries {
    /// Connection form `omega_1^1` in the base coframe.
    pub omega: SeriesForm,
    /// Torsion coefficient `A^1_{1bar}`.
    pub torsion: Series,
    /// `d theta^1(t)` on `(T, Z_1(t))`, `(T, Zbar_1(t))`, `(Z_1(t), Zbar_1(t))`.
    pub p: Series,
    pub q: Series,
    pub r: Series,
}

/// With `omega = x theta + y theta^1(t) + z theta^1bar(t)`, the equation gives
/// `x = -P`, `A = Q`, `z = R`, and `omega + conj(omega) = 0` fixes `y = -conj(R)`.
pub fn solve_structure(cf: &DeformedCoframe) -> PseudohermitianSeries {
    let b = &cf.base;
    let t = cf.reeb();
    let p = b.d_on(&cf.theta1, &t, &cf.z1);
    let q = b.d_on(&cf.theta1, &t, &cf.z1bar);
    let r = b.d_on(&cf.theta1, &cf.z1, &cf.z1bar);
    let omega = cf
        .theta()
        .times(&-&p)
        .add(&cf.theta1.times(&-&r.conjugate()))
        .add(&cf.theta1bar.times(&r));
    PseudohermitianSeries { omega, torsion: q.clone(), p, q, r }
}

/// Residuals of the structure equation on the base pairs `(T,Z_1)`, `(T,Zbar_1)`, `(Z_1,Zbar_1)`.
pub fn structure_residual(ps: &PseudohermitianSeries, cf: &DeformedCoframe) -> Vec<Series> {
    let b = &cf.base;
    let frame: Vec<_> = (0..3).map(|a| b.base_vector(a)).collect();
    let theta = cf.theta();
    let mut out = Vec::new();
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let (x, y) = (&frame[i], &frame[j]);
        let lhs = b.d_on(&cf.theta1, x, y);
        let conn = wedge_on(&cf.theta1, &ps.omega, x, y);
        let tor = &ps.torsion * &wedge_on(&theta, &cf.theta1bar, x, y);
        out.push(&(&lhs - &conn) - &tor);
    }
    out
}

/// `omega + conj(omega)`, which must vanish since the Levi form stays constant.
pub fn reality_residual(ps: &PseudohermitianSeries) -> SeriesForm {
    ps.omega.add(&ps.omega.conjugate())
}

/// Webster curvature `W(t) = d omega(Z_1(t), Zbar_1(t)) / s`. In dimension three the
/// torsion wedge terms `theta_1 ^ tau^1` and `tau_1 ^ theta^1` vanish identically.
pub fn webster_series(ps: &PseudohermitianSeries, cf: &DeformedCoframe) -> Series {
    let d = cf.base.d_on(&ps.omega, &cf.z1, &cf.z1bar);
    d.scale(&(&ExactScalar::one() / &cf.base.scale_scalar()))
}

/// `W` at `t = 0` for the contact form `s theta_0`, from the undeformed frame.
pub fn round_webster(scale: &num::rational::BigRational) -> SpherePoly {
    let cf = super::coframe::deform_frame_with(&SpherePoly::zero(1), scale, &Default::default());
    let ps = solve_structure(&cf);
    webster_series(&ps, &cf).c[0].clone()
}
