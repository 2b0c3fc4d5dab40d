//! Second variation of the normalized Webster functional along `J`.

use num::rational::BigRational;
use serde::Serialize;

use super::deformation::{check_symmetry, embeddability, fourier_modes, DeformationTensor, Embeddability};
use crate::error::Error;
use crate::frames::covariant_t;
use crate::ring::{ExactScalar, VolumePower, VolumeScaled};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ModeRow {
    pub m: i64,
    pub norm_sqr: ExactScalar,
    pub weighted: ExactScalar,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HessianReport {
    pub n: usize,
    pub modes: Vec<ModeRow>,
    /// `n * sum (m + 4) ||E^(m)||^2` in the probability measure.
    pub total: ExactScalar,
    /// `total * Vol^{2/Q}`, the value for the volume-normalized functional.
    pub total_with_volume: VolumeScaled,
    pub norm_sqr: ExactScalar,
    pub embeddable: bool,
    pub embeddability: Embeddability,
}

/// Prefactor `Vol^{2/Q}`, `Q = 2n + 2`, relating probability-measure values to the normalized functional.
pub fn volume_prefactor(n: usize) -> VolumePower {
    VolumePower::new(n, BigRational::new(1.into(), (n as i64 + 1).into()))
}

pub fn j_hessian(e: &DeformationTensor) -> Result<HessianReport, Error> {
    check_symmetry(e)?;
    let n = e.n();
    let nn = ExactScalar::from_int(n as i64);
    let mut modes = Vec::new();
    let mut total = ExactScalar::zero();
    let mut norm = ExactScalar::zero();
    for (m, part) in fourier_modes(e).modes {
        let ns = part.tensor().norm_sqr();
        let weighted = &(&ns * &ExactScalar::from_int(m + 4)) * &nn;
        total += &weighted;
        norm += &ns;
        modes.push(ModeRow { m, norm_sqr: ns, weighted });
    }
    let emb = embeddability(e);
    Ok(HessianReport {
        n,
        modes,
        total_with_volume: VolumeScaled { coefficient: total.clone(), volume: volume_prefactor(n) },
        total,
        norm_sqr: norm,
        embeddable: emb != Embeddability::NotEmbeddable,
        embeddability: emb,
    })
}

/// `-i n int <nabla_T E, E> + conj`.
pub fn j_hessian_via_t(e: &DeformationTensor) -> Result<ExactScalar, Error> {
    check_symmetry(e)?;
    let te = covariant_t(e.tensor());
    let x = te.contraction(e.tensor()).integrate();
    let y = &ExactScalar::complex(num::zero(), BigRational::from_integer((-(e.n() as i64)).into())) * &x;
    Ok(&y + &y.conj())
}
