//! Exact pseudohermitian calculus on odd-dimensional spheres.

pub mod error;
pub mod frames;
pub mod montecarlo;
pub mod ring;
pub mod spectral;
pub mod oracle3;
pub mod suite;
pub mod variation;

pub use error::{Error, Result};
