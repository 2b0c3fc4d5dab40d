//! Exact scalars, sphere polynomials, truncated series and the text grammar.

pub mod parse;
pub mod poly;
pub mod quadrature;
pub mod scalar;
pub mod series;
pub mod volume;

pub use parse::{parse_deformation_file, parse_sphere_poly, DeformationFile};
pub use poly::{integrate_poly, monomial_moment, monomial_pool, normal_form, Monomial, Poly, SpherePoly};
pub use scalar::{factorial, rat, ExactScalar};
pub use series::{Coefficient, TSeries2};
pub use volume::{VolumePower, VolumeScaled};

/// Probability-measure integral of a sphere polynomial.
pub fn integrate_sphere(p: &SpherePoly) -> ExactScalar {
    p.integrate()
}

pub fn conjugate(p: &SpherePoly) -> SpherePoly {
    p.conjugate()
}

pub fn fourier_project(p: &SpherePoly, m: i64) -> SpherePoly {
    p.fourier_project(m)
}
