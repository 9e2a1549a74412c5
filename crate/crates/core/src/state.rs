use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Complex amplitudes over a basis (the 2ⁿ computational basis, or the
/// nodes of a median graph). Serialised as a list of `[re, im]` pairs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct StateVector(Vec<Complex64>);

impl StateVector {
    pub fn zeros(dim: usize) -> Self {
        StateVector(vec![Complex64::new(0.0, 0.0); dim])
    }

    /// Unit amplitude on basis element `index`.
    pub fn basis(dim: usize, index: usize) -> Self {
        let mut v = StateVector::zeros(dim);
        v.0[index] = Complex64::new(1.0, 0.0);
        v
    }

    pub fn from_amplitudes(amps: Vec<Complex64>) -> Self {
        StateVector(amps)
    }

    /// Equal-weight superposition of the listed basis elements.
    pub fn uniform_over(dim: usize, indices: &[usize]) -> Self {
        let mut v = StateVector::zeros(dim);
        let a = 1.0 / (indices.len() as f64).sqrt();
        for &i in indices {
            v.0[i] = Complex64::new(a, 0.0);
        }
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.0
    }

    pub fn amplitudes_mut(&mut self) -> &mut [Complex64] {
        &mut self.0
    }

    pub fn into_amplitudes(self) -> Vec<Complex64> {
        self.0
    }

    pub fn norm_sqr(&self) -> f64 {
        self.0.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn probabilities(&self) -> Vec<f64> {
        self.0.iter().map(|a| a.norm_sqr()).collect()
    }

    /// ⟨self|other⟩, antilinear in `self`.
    pub fn inner(&self, other: &StateVector) -> Result<Complex64> {
        self.check_dim(other.dim())?;
        Ok(self.0.iter().zip(&other.0).map(|(a, b)| a.conj() * b).sum())
    }

    pub(crate) fn check_dim(&self, expected: usize) -> Result<()> {
        if self.dim() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                got: self.dim(),
            });
        }
        Ok(())
    }
}
