//! Family parameters.

use crate::error::{Error, Result};

/// The pair `(alpha, m)` selecting one member of the family.
///
/// `alpha > 0` is required everywhere; the zero-count theorem and the
/// inequality scans additionally require `alpha` inside `(0, 1)`, which is
/// enforced at the call sites that need it.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Params {
    alpha: f64,
    degree: u32,
}

impl Params {
    pub fn new(alpha: f64, degree: u32) -> Result<Self> {
        if !alpha.is_finite() || alpha <= 0.0 {
            return Err(Error::InvalidAlpha(alpha));
        }
        Ok(Params { alpha, degree })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// The degree index `m`.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Same `alpha`, different degree.
    pub fn with_degree(&self, degree: u32) -> Self {
        Params { alpha: self.alpha, degree }
    }

    /// Errors unless `0 < alpha < 1`.
    pub fn require_unit_alpha(&self) -> Result<()> {
        if self.alpha < 1.0 {
            Ok(())
        } else {
            Err(Error::AlphaNotInUnitInterval(self.alpha))
        }
    }
}

/// Validates `0 < theta < pi`.
pub(crate) fn check_theta(theta: f64) -> Result<f64> {
    if theta.is_finite() && theta > 0.0 && theta < core::f64::consts::PI {
        Ok(theta)
    } else {
        Err(Error::InvalidTheta(theta))
    }
}
