//! Gaussian rationals `p/q + (r/s) i` over unbounded integers.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// An exact complex number with rational real and imaginary parts.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ExactScalar {
    pub re: BigRational,
    pub im: BigRational,
}

pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

impl ExactScalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        ExactScalar { re, im }
    }

    pub fn zero() -> Self {
        ExactScalar { re: BigRational::zero(), im: BigRational::zero() }
    }

    pub fn one() -> Self {
        Self::real(BigRational::one())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        ExactScalar { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn real(re: BigRational) -> Self {
        ExactScalar { re, im: BigRational::zero() }
    }

    pub fn from_int(v: i64) -> Self {
        Self::real(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Self::real(rat(num, den))
    }

    pub fn complex(re: BigRational, im: BigRational) -> Self {
        ExactScalar { re, im }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        ExactScalar { re: self.re.clone(), im: -self.im.clone() }
    }

    /// |z|^2, always a nonnegative rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        ExactScalar { re: &self.re * r, im: &self.im * r }
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let d = self.norm_sqr();
        Some(ExactScalar { re: &self.re / &d, im: -(&self.im / &d) })
    }

    /// Multiplication by `i`.
    pub fn mul_i(&self) -> Self {
        ExactScalar { re: -self.im.clone(), im: self.re.clone() }
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.re.to_f64().unwrap_or(f64::NAN), self.im.to_f64().unwrap_or(f64::NAN))
    }

    /// Sign of a real scalar: -1, 0 or 1. `None` if the imaginary part is nonzero.
    pub fn real_sign(&self) -> Option<i32> {
        if !self.is_real() {
            return None;
        }
        Some(if self.re.is_zero() {
            0
        } else if self.re.is_positive() {
            1
        } else {
            -1
        })
    }
}

fn fmt_rat(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

impl fmt::Display for ExactScalar {
    /// Canonical `p/q+r/s*i` form, always with explicit denominators.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}*i", fmt_rat(&self.re), fmt_rat(&self.im))
    }
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_rat(s: &str) -> Result<BigRational, Error> {
    let bad = || Error::Parse { line: 1, column: 1, message: format!("malformed rational `{s}`") };
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.trim().parse().map_err(|_| bad())?;
    let d: BigInt = d.trim().parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

impl FromStr for ExactScalar {
    type Err = Error;

    /// Parses the `p/q+r/s*i` form. The imaginary part may be negative (`1/2+-3/4*i`).
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let body = s.strip_suffix("*i").ok_or_else(|| Error::Parse {
            line: 1,
            column: s.len().max(1),
            message: format!("scalar `{s}` must end in `*i`"),
        })?;
        // the separator is the first '+' after the leading sign of the real part
        let split = body
            .char_indices()
            .skip(1)
            .find(|&(_, c)| c == '+')
            .map(|(i, _)| i)
            .ok_or_else(|| Error::Parse {
                line: 1,
                column: 1,
                message: format!("scalar `{s}` has no `+` separator"),
            })?;
        let re = parse_rat(&body[..split])?;
        let im = parse_rat(&body[split + 1..])?;
        Ok(ExactScalar { re, im })
    }
}

impl Serialize for ExactScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for ExactScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl From<i64> for ExactScalar {
    fn from(v: i64) -> Self {
        ExactScalar::from_int(v)
    }
}

impl From<BigRational> for ExactScalar {
    fn from(v: BigRational) -> Self {
        ExactScalar::real(v)
    }
}

impl<'a> Add<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn add(self, o: &ExactScalar) -> ExactScalar {
        ExactScalar { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl<'a> Sub<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn sub(self, o: &ExactScalar) -> ExactScalar {
        ExactScalar { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl<'a> Mul<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn mul(self, o: &ExactScalar) -> ExactScalar {
        ExactScalar {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl<'a> Div<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    /// Panics on division by zero.
    fn div(self, o: &ExactScalar) -> ExactScalar {
        let inv = o.inv().expect("division by zero scalar");
        self * &inv
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $m(self, o: ExactScalar) -> ExactScalar {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $m(self, o: &ExactScalar) -> ExactScalar {
                (&self).$m(o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar { re: -self.re, im: -self.im }
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar { re: -self.re.clone(), im: -self.im.clone() }
    }
}

impl AddAssign<&ExactScalar> for ExactScalar {
    fn add_assign(&mut self, o: &ExactScalar) {
        self.re += &o.re;
        self.im += &o.im;
    }
}

impl SubAssign<&ExactScalar> for ExactScalar {
    fn sub_assign(&mut self, o: &ExactScalar) {
        self.re -= &o.re;
        self.im -= &o.im;
    }
}

impl MulAssign<&ExactScalar> for ExactScalar {
    fn mul_assign(&mut self, o: &ExactScalar) {
        *self = &*self * o;
    }
}

/// n! as a big integer.
pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_is_lowest_terms() {
        let s = ExactScalar::complex(rat(2, 4), rat(-6, 8));
        assert_eq!(s.to_string(), "1/2+-3/4*i");
        assert_eq!(ExactScalar::zero().to_string(), "0/1+0/1*i");
    }

    #[test]
    fn parse_round_trip() {
        for text in ["1/2+-3/4*i", "-5/1+0/1*i", "0/1+7/3*i", "-1/6+-1/6*i"] {
            let s: ExactScalar = text.parse().unwrap();
            assert_eq!(s.to_string(), text);
        }
        assert!("1/2+3/4".parse::<ExactScalar>().is_err());
        assert!("1/0+0/1*i".parse::<ExactScalar>().is_err());
    }

    #[test]
    fn field_operations() {
        let a = ExactScalar::complex(rat(1, 2), rat(1, 3));
        let b = ExactScalar::complex(rat(-2, 1), rat(5, 7));
        let q = &(&a * &b) / &b;
        assert_eq!(q, a);
        assert_eq!(&ExactScalar::i() * &ExactScalar::i(), ExactScalar::from_int(-1));
        assert_eq!(a.mul_i(), &a * &ExactScalar::i());
        assert!(ExactScalar::zero().inv().is_none());
    }

    #[test]
    fn serde_is_string() {
        let a = ExactScalar::complex(rat(3, 9), rat(0, 1));
        let js = serde_json::to_string(&a).unwrap();
        assert_eq!(js, "\"1/3+0/1*i\"");
        let back: ExactScalar = serde_json::from_str(&js).unwrap();
        assert_eq!(back, a);
    }
}
