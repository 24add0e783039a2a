use serde::{Deserialize, Serialize};

use crate::tol::scaled;

/// Absolute residual of a matrix identity together with the magnitude of
/// the terms it was computed from.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Residual {
    pub abs: f64,
    pub scale: f64,
}

impl Residual {
    pub fn new(abs: f64, scale: f64) -> Self {
        Self { abs, scale }
    }

    pub fn relative(&self) -> f64 {
        if self.scale > 0.0 {
            self.abs / self.scale
        } else {
            self.abs
        }
    }

    /// `abs ≤ rel_tol · scale`.
    pub fn within(&self, rel_tol: f64) -> bool {
        self.abs <= scaled(rel_tol, self.scale)
    }

    /// The worse of two residuals, by relative size.
    pub fn worst(self, other: Self) -> Self {
        if other.relative() > self.relative() {
            other
        } else {
            self
        }
    }
}
