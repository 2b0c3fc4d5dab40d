//! Conformal direction: `theta -> u^{2/n} theta` with `u = 1 + t v`.
//!
//! All integrals use the probability measure; multiply by [`volume_prefactor`]
//! for the volume-normalized functional.

use num::rational::BigRational;

use super::hessian::volume_prefactor;
use crate::error::Error;
use crate::ring::{ExactScalar, SpherePoly, TSeries2, VolumeScaled};
use crate::spectral::dirichlet_energy;

/// `b_n = 2 + 2/n`.
pub fn b_n(n: usize) -> BigRational {
    BigRational::new((2 * n as i64 + 2).into(), (n as i64).into())
}

/// Webster curvature of the round sphere for `theta_0 = (i/2) sum (z dw - w dz)`: `n(n+1)`.
///
/// Fixed by requiring the conformal Hessian to vanish on `H_{1,0} + H_{0,1}` with the
/// energy normalization of [`crate::spectral::KAPPA`]; the `S^3` frame computation in
/// [`crate::oracle3`] reproduces it independently.
pub fn webster_constant(n: usize) -> BigRational {
    BigRational::from_integer((n as i64 * (n as i64 + 1)).into())
}

/// Same constant for the contact form `scale * theta_0`.
pub fn webster_constant_scaled(n: usize, scale: &BigRational) -> BigRational {
    webster_constant(n) / scale
}

fn require_real(v: &SpherePoly) -> Result<(), Error> {
    if v.is_real() {
        Ok(())
    } else {
        Err(Error::NotReal)
    }
}

/// `t -> F(1 + t v)`, `F(u) = int (b_n |grad_b u|^2 + W_0 u^2) / (int u^{2 + 2/n})^{n/(n+1)}`.
pub fn yamabe_energy_series(v: &SpherePoly) -> Result<TSeries2<ExactScalar>, Error> {
    require_real(v)?;
    let n = v.n();
    let w0 = ExactScalar::real(webster_constant(n));
    let u = TSeries2::new(SpherePoly::one(n), v.clone(), SpherePoly::zero(n));
    let grad = ExactScalar::real(b_n(n)) * dirichlet_energy(v)?;
    let numerator = &TSeries2::quadratic(grad) + &(&u * &u).integrate().scale(&w0);
    let p = BigRational::new((2 * n as i64 + 2).into(), (n as i64).into());
    let denominator = u.pow_rational(&p).integrate();
    let alpha = BigRational::new((-(n as i64)).into(), (n as i64 + 1).into());
    Ok(&numerator * &denominator.pow_rational(&alpha))
}

/// First-order coefficient of [`yamabe_energy_series`]. At the round sphere it vanishes for
/// every `v`: the `u^2` term contributes `2 W_0 int v` and the denominator cancels it exactly.
pub fn conformal_first_variation(v: &SpherePoly) -> Result<ExactScalar, Error> {
    Ok(yamabe_energy_series(v)?.c[1].clone())
}

/// First variation of `int W` along `u = 1 + t v` when the curvature is `w`:
/// `2 (int w v - int w int v)`, zero for all `v` iff `w` is constant.
pub fn first_variation_for_curvature(w: &SpherePoly, v: &SpherePoly) -> ExactScalar {
    let wv = (w * v).integrate();
    let ww = &w.integrate() * &v.integrate();
    (&wv - &ww).scale(&BigRational::from_integer(2.into()))
}

/// `2 [b_n int |grad_b v|^2 - (2/n) W_0 int v^2]` for real `v` with `int v = 0`.
pub fn conformal_hessian(v: &SpherePoly) -> Result<ExactScalar, Error> {
    require_real(v)?;
    let avg = v.integrate();
    if !avg.is_zero() {
        return Err(Error::NonZeroAverage(avg.to_string()));
    }
    let n = v.n();
    let grad = ExactScalar::real(b_n(n)) * dirichlet_energy(v)?;
    let pot = ExactScalar::real(BigRational::new(2.into(), (n as i64).into()) * webster_constant(n) * v.norm_sqr());
    Ok((&grad - &pot).scale(&BigRational::from_integer(2.into())))
}

/// [`conformal_hessian`] times `Vol^{2/Q}`.
pub fn conformal_hessian_scaled(v: &SpherePoly) -> Result<VolumeScaled, Error> {
    Ok(VolumeScaled { coefficient: conformal_hessian(v)?, volume: volume_prefactor(v.n()) })
}
