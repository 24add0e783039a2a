use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Relative thresholds used by every definiteness and equality test.
///
/// Thresholds are scaled by the spectral norm of the operand (or of the
/// operand pair for comparisons). When that norm is zero the thresholds are
/// used as absolute values.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ToleranceConfig {
    pub psd_tol: f64,
    pub pd_tol: f64,
    pub eq_tol: f64,
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        Self { psd_tol: 1e-10, pd_tol: 1e-10, eq_tol: 1e-9 }
    }
}

impl ToleranceConfig {
    pub fn new(psd_tol: f64, pd_tol: f64, eq_tol: f64) -> Result<Self> {
        let tol = Self { psd_tol, pd_tol, eq_tol };
        tol.validate()?;
        Ok(tol)
    }

    /// Default thresholds with `eq_tol` replaced.
    pub fn with_eq_tol(eq_tol: f64) -> Result<Self> {
        Self::new(Self::default().psd_tol, Self::default().pd_tol, eq_tol)
    }

    pub fn validate(&self) -> Result<()> {
        let finite = self.psd_tol.is_finite() && self.pd_tol.is_finite() && self.eq_tol.is_finite();
        if !finite {
            return Err(Error::InvalidTolerance("thresholds must be finite"));
        }
        if self.psd_tol < 0.0 || self.eq_tol < 0.0 {
            return Err(Error::InvalidTolerance("psd_tol and eq_tol must be nonnegative"));
        }
        if self.pd_tol <= 0.0 {
            return Err(Error::InvalidTolerance("pd_tol must be positive"));
        }
        // PD must imply PSD, which holds whenever psd_tol <= pd_tol.
        if self.psd_tol > self.pd_tol {
            return Err(Error::InvalidTolerance("psd_tol must not exceed pd_tol"));
        }
        Ok(())
    }
}

/// A threshold relative to `scale`, falling back to the absolute value for a zero scale.
pub(crate) fn scaled(threshold: f64, scale: f64) -> f64 {
    if scale > 0.0 {
        threshold * scale
    } else {
        threshold
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_validate() {
        ToleranceConfig::default().validate().unwrap();
    }

    #[test]
    fn rejects_bad_thresholds() {
        assert!(ToleranceConfig::new(-1.0, 1e-10, 1e-9).is_err());
        assert!(ToleranceConfig::new(1e-10, 0.0, 1e-9).is_err());
        assert!(ToleranceConfig::new(1e-8, 1e-10, 1e-9).is_err());
        assert!(ToleranceConfig::new(1e-10, 1e-10, f64::NAN).is_err());
    }
}
