//! Deformation tensors of the CR structure and their Fourier analysis.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::Error;
use crate::frames::TensorField;
use crate::ring::{DeformationFile, SpherePoly};

/// The tensor `E` with `Jdot = 2E`. On `S^3` it is the single coefficient `E_1^{1bar}`.
#[derive(Clone, Debug, PartialEq)]
pub struct DeformationTensor {
    n: usize,
    tensor: TensorField,
}

impl DeformationTensor {
    /// `S^3` deformation with coefficient `E_1^{1bar} = e`.
    pub fn scalar(e: &SpherePoly) -> Self {
        DeformationTensor { n: e.n(), tensor: TensorField::from_scalar(e) }
    }

    /// From lowered ambient entries `B_ab` (indices from 1).
    pub fn from_lowered(n: usize, entries: &[(usize, usize, SpherePoly)]) -> Self {
        DeformationTensor { n, tensor: TensorField::from_lowered_ambient(n, entries) }
    }

    pub fn from_tensor(tensor: TensorField) -> Self {
        DeformationTensor { n: tensor.n(), tensor }
    }

    pub fn from_file(f: &DeformationFile) -> Self {
        match &f.e {
            Some(e) if f.lowered.is_empty() => Self::scalar(e),
            _ => Self::from_lowered(f.n, &f.lowered),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn tensor(&self) -> &TensorField {
        &self.tensor
    }

    /// The `S^3` coefficient.
    pub fn scalar_coefficient(&self) -> Option<SpherePoly> {
        (self.n == 1).then(|| self.tensor.coefficient((1, 2), (1, 2)))
    }

    pub fn is_zero(&self) -> bool {
        self.tensor.is_zero()
    }
}

pub fn validate_symmetry(e: &DeformationTensor) -> bool {
    e.tensor.symmetry_violation().is_none()
}

pub fn check_symmetry(e: &DeformationTensor) -> Result<(), Error> {
    match e.tensor.symmetry_violation() {
        None => Ok(()),
        Some((a, b)) => Err(Error::SymmetryViolation(format!("Z{}{}", a.0, a.1), format!("Z{}{}", b.0, b.1))),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FourierModes {
    pub modes: BTreeMap<i64, DeformationTensor>,
    /// Set when `n > 1` and a negative weight is present.
    pub inadmissible: bool,
}

pub fn fourier_modes(e: &DeformationTensor) -> FourierModes {
    let modes: BTreeMap<i64, DeformationTensor> = e
        .tensor
        .weights()
        .into_iter()
        .map(|m| (m, DeformationTensor::from_tensor(e.tensor.fourier_project(m))))
        .collect();
    let inadmissible = e.n > 1 && modes.keys().any(|&m| m < 0);
    FourierModes { modes, inadmissible }
}

/// Embeddability of the infinitesimal deformation of `S^3`: no mode with `m <= -4`.
/// For `n > 1` every strictly pseudoconvex deformation is embeddable; this returns an error
/// rather than computing anything.
pub fn is_embeddable(e: &DeformationTensor) -> Result<bool, Error> {
    if e.n != 1 {
        return Err(Error::UnsupportedDimension {
            n: e.n,
            reason: "the Fourier criterion applies to S^3; higher spheres are always embeddable".into(),
        });
    }
    Ok(fourier_modes(e).modes.keys().all(|&m| m > -4))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Embeddability {
    Embeddable,
    NotEmbeddable,
    /// `n > 1`: automatic.
    AlwaysEmbeddable,
}

pub fn embeddability(e: &DeformationTensor) -> Embeddability {
    match is_embeddable(e) {
        Ok(true) => Embeddability::Embeddable,
        Ok(false) => Embeddability::NotEmbeddable,
        Err(_) => Embeddability::AlwaysEmbeddable,
    }
}
