//! Power series in the deformation parameter `t`, truncated after `t^2`.
//!
//! The truncation order is the constant [`ORDER`]; every product drops terms of
//! degree above it. Raising it means widening the coefficient array and extending
//! the two binomial helpers below.

use std::ops::{Add, Mul, Neg, Sub};

use num::rational::BigRational;
use num::One;

use super::poly::SpherePoly;
use super::scalar::ExactScalar;

pub const ORDER: usize = 2;

/// Coefficient ring of a truncated series.
pub trait Coefficient: Clone + PartialEq {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn scaled(&self, c: &ExactScalar) -> Self;
    fn is_zero_value(&self) -> bool;
}

impl Coefficient for ExactScalar {
    fn zero_like(&self) -> Self {
        ExactScalar::zero()
    }
    fn one_like(&self) -> Self {
        ExactScalar::one()
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn scaled(&self, c: &ExactScalar) -> Self {
        self * c
    }
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
}

impl Coefficient for SpherePoly {
    fn zero_like(&self) -> Self {
        SpherePoly::zero(self.n())
    }
    fn one_like(&self) -> Self {
        SpherePoly::one(self.n())
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn scaled(&self, c: &ExactScalar) -> Self {
        self.scale(c)
    }
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
}

/// `c[0] + c[1] t + c[2] t^2`.
#[derive(Clone, PartialEq, Debug)]
pub struct TSeries2<T> {
    pub c: [T; ORDER + 1],
}

impl<T: Coefficient> TSeries2<T> {
    pub fn new(c0: T, c1: T, c2: T) -> Self {
        TSeries2 { c: [c0, c1, c2] }
    }

    pub fn constant(c0: T) -> Self {
        let z = c0.zero_like();
        TSeries2 { c: [c0, z.clone(), z] }
    }

    /// `x t`.
    pub fn linear(x: T) -> Self {
        let z = x.zero_like();
        TSeries2 { c: [z.clone(), x, z] }
    }

    /// `x t^2`.
    pub fn quadratic(x: T) -> Self {
        let z = x.zero_like();
        TSeries2 { c: [z.clone(), z, x] }
    }

    pub fn order(&self, k: usize) -> &T {
        &self.c[k]
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero_value())
    }

    pub fn scale(&self, s: &ExactScalar) -> Self {
        self.map(|x| x.scaled(s))
    }

    pub fn map<U: Coefficient>(&self, f: impl Fn(&T) -> U) -> TSeries2<U> {
        TSeries2 { c: [f(&self.c[0]), f(&self.c[1]), f(&self.c[2])] }
    }

    /// Coefficient-wise multiplication by a constant-in-`t` element.
    pub fn times_coeff(&self, x: &T) -> Self {
        self.map(|c| c.times(x))
    }

    fn assert_unit(&self) {
        assert!(self.c[0] == self.c[0].one_like(), "series must start with 1");
    }

    /// `(1 + x)^alpha` truncated, for a series whose constant term is 1.
    pub fn pow_rational(&self, alpha: &BigRational) -> Self {
        self.assert_unit();
        let a = ExactScalar::real(alpha.clone());
        let half = ExactScalar::ratio(1, 2);
        let binom2 = &(&a * &(&a - &ExactScalar::one())) * &half;
        let c1 = self.c[1].scaled(&a);
        let c2 = self.c[2].scaled(&a).plus(&self.c[1].times(&self.c[1]).scaled(&binom2));
        TSeries2 { c: [self.c[0].clone(), c1, c2] }
    }

    /// Multiplicative inverse of a series whose constant term is 1.
    pub fn inverse_unit(&self) -> Self {
        self.pow_rational(&-BigRational::one())
    }
}

impl<T: Coefficient> Add for &TSeries2<T> {
    type Output = TSeries2<T>;
    fn add(self, o: &TSeries2<T>) -> TSeries2<T> {
        TSeries2 { c: [self.c[0].plus(&o.c[0]), self.c[1].plus(&o.c[1]), self.c[2].plus(&o.c[2])] }
    }
}

impl<T: Coefficient> Sub for &TSeries2<T> {
    type Output = TSeries2<T>;
    fn sub(self, o: &TSeries2<T>) -> TSeries2<T> {
        TSeries2 { c: [self.c[0].minus(&o.c[0]), self.c[1].minus(&o.c[1]), self.c[2].minus(&o.c[2])] }
    }
}

impl<T: Coefficient> Mul for &TSeries2<T> {
    type Output = TSeries2<T>;
    fn mul(self, o: &TSeries2<T>) -> TSeries2<T> {
        let (a, b) = (&self.c, &o.c);
        let c0 = a[0].times(&b[0]);
        let c1 = a[0].times(&b[1]).plus(&a[1].times(&b[0]));
        let c2 = a[0].times(&b[2]).plus(&a[1].times(&b[1])).plus(&a[2].times(&b[0]));
        TSeries2 { c: [c0, c1, c2] }
    }
}

impl<T: Coefficient> Neg for &TSeries2<T> {
    type Output = TSeries2<T>;
    fn neg(self) -> TSeries2<T> {
        self.scale(&ExactScalar::from_int(-1))
    }
}

macro_rules! forward_series {
    ($tr:ident, $m:ident) => {
        impl<T: Coefficient> $tr for TSeries2<T> {
            type Output = TSeries2<T>;
            fn $m(self, o: TSeries2<T>) -> TSeries2<T> {
                (&self).$m(&o)
            }
        }
    };
}
forward_series!(Add, add);
forward_series!(Sub, sub);
forward_series!(Mul, mul);

impl TSeries2<SpherePoly> {
    pub fn integrate(&self) -> TSeries2<ExactScalar> {
        self.map(|p| p.integrate())
    }

    pub fn conjugate(&self) -> Self {
        self.map(|p| p.conjugate())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::scalar::rat;

    fn s(a: i64, b: i64, c: i64) -> TSeries2<ExactScalar> {
        TSeries2::new(a.into(), b.into(), c.into())
    }

    #[test]
    fn product_truncates() {
        let x = s(0, 1, 0);
        let x2 = &x * &x;
        assert_eq!(x2, s(0, 0, 1));
        assert!((&x2 * &x).is_zero());
    }

    #[test]
    fn sqrt_squares_back() {
        let a = s(1, 3, -2);
        let r = a.pow_rational(&rat(1, 2));
        assert_eq!(&r * &r, a);
    }

    #[test]
    fn inverse_unit_is_inverse() {
        let a = s(1, 5, 7);
        assert_eq!(&a * &a.inverse_unit(), s(1, 0, 0));
    }
}
