//! Symbolic powers of the pseudohermitian volume `Vol(S^{2n+1}) = 2^{n+1} pi^{n+1}`.

use std::fmt;

use num::rational::BigRational;
use num::{ToPrimitive, Zero};
use serde::Serialize;

use super::scalar::ExactScalar;

/// `Vol^exponent` for the sphere `S^{2n+1}`, kept symbolic so that no `pi` enters exact arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VolumePower {
    pub n: usize,
    pub exponent: BigRational,
}

impl VolumePower {
    pub fn new(n: usize, exponent: BigRational) -> Self {
        VolumePower { n, exponent }
    }

    pub fn to_f64(&self) -> f64 {
        let vol = (2.0 * std::f64::consts::PI).powi(self.n as i32 + 1);
        vol.powf(self.exponent.to_f64().unwrap_or(f64::NAN))
    }
}

impl fmt::Display for VolumePower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent.is_zero() {
            return write!(f, "1");
        }
        write!(f, "(2pi)^({}*{})", self.n + 1, self.exponent)
    }
}

/// An exact scalar times a symbolic volume power.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VolumeScaled {
    pub coefficient: ExactScalar,
    #[serde(serialize_with = "ser_display")]
    pub volume: VolumePower,
}

fn ser_display<S: serde::Serializer>(v: &VolumePower, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

impl VolumeScaled {
    pub fn to_f64(&self) -> f64 {
        self.coefficient.to_f64_pair().0 * self.volume.to_f64()
    }
}

impl fmt::Display for VolumeScaled {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} * {}", self.coefficient, self.volume)
    }
}
