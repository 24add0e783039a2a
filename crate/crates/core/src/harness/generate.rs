//! Seeded random instances. Every trial draws from its own ChaCha stream
//! keyed by `(seed, index)`, so results do not depend on execution order.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{ComplexSquareMatrix, HermitianMatrix};
use crate::order::AccretiveDissipativeMatrix;
use crate::tol::ToleranceConfig;

/// Parameters of a batch of random instances.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InstanceSpec {
    /// Largest dimension drawn.
    pub dim: usize,
    /// Smallest dimension drawn; trials cycle through `min_dim..=dim`.
    pub min_dim: usize,
    pub seed: u64,
    /// Cap on the spectral spread of generated positive definite parts.
    pub conditioning: f64,
    pub count: usize,
}

impl InstanceSpec {
    pub fn new(dim: usize, seed: u64, conditioning: f64, count: usize) -> Result<Self> {
        let spec = Self { dim, min_dim: dim, seed, conditioning, count };
        spec.validate()?;
        Ok(spec)
    }

    /// Cycle trial dimensions over `min_dim..=self.dim`.
    pub fn with_min_dim(mut self, min_dim: usize) -> Result<Self> {
        self.min_dim = min_dim;
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        if self.dim == 0 || self.min_dim == 0 {
            return Err(Error::EmptyInput);
        }
        if self.min_dim > self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: self.min_dim });
        }
        if !(self.conditioning >= 1.0 && self.conditioning.is_finite()) {
            return Err(Error::InvalidTolerance("conditioning must be a finite number >= 1"));
        }
        Ok(())
    }

    /// Dimension used by trial `index`.
    pub fn dim_for(&self, index: usize) -> usize {
        let span = self.dim - self.min_dim + 1;
        self.min_dim + index % span
    }
}

impl Default for InstanceSpec {
    fn default() -> Self {
        Self { dim: 4, min_dim: 4, seed: 0, conditioning: 100.0, count: 100 }
    }
}

/// Independent stream for trial `index` of a run seeded with `seed`.
pub fn trial_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

/// Entries `(x + iy)/√2` with `x, y` standard normal.
pub fn complex_gaussian<R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> DMatrix<Complex64> {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    DMatrix::from_fn(rows, cols, |_, _| {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        Complex64::new(re * s, im * s)
    })
}

/// `G G* + δ I` with `δ = ‖G G*‖ / conditioning`, so the condition number is at most `conditioning + 1`.
pub fn random_pd<R: Rng + ?Sized>(n: usize, conditioning: f64, rng: &mut R) -> HermitianMatrix {
    let g = complex_gaussian(n, n, rng);
    let gram = HermitianMatrix::symmetrize(&ComplexSquareMatrix::from_raw(&g * g.adjoint()));
    let norm = gram.spectral_norm().unwrap_or_else(|_| gram.norm());
    // A rank-deficient draw is measure-zero; fall back to the identity scale.
    let delta = if norm > 0.0 { norm / conditioning } else { 1.0 };
    &gram + &HermitianMatrix::scalar(n, delta)
}

pub fn random_ad<R: Rng + ?Sized>(n: usize, conditioning: f64, rng: &mut R) -> AccretiveDissipativeMatrix {
    let real = random_pd(n, conditioning, rng);
    let imag = random_pd(n, conditioning, rng);
    // Both parts are positive definite by construction; use a permissive tolerance
    // so that extreme `conditioning` values still pass the membership check.
    let tol = ToleranceConfig { psd_tol: 0.0, pd_tol: f64::MIN_POSITIVE, eq_tol: 0.0 };
    AccretiveDissipativeMatrix::from_parts(real, imag, &tol).expect("Gram plus ridge is positive definite")
}

/// A general non-Hermitian matrix `e^{iθ}(G + 2√n I)`; its eigenvalues stay away from zero.
pub fn random_general<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexSquareMatrix {
    let g = complex_gaussian(n, n, rng);
    let theta: f64 = rng.random_range(0.0..std::f64::consts::TAU);
    let shift = 2.0 * (n as f64).sqrt();
    let shifted = g + DMatrix::from_diagonal_element(n, n, Complex64::new(shift, 0.0));
    ComplexSquareMatrix::from_raw(shifted * Complex64::from_polar(1.0, theta))
}

/// Deterministic stream of `spec.count` accretive-dissipative matrices.
pub fn generate_random_ad(spec: &InstanceSpec) -> impl Iterator<Item = AccretiveDissipativeMatrix> + '_ {
    (0..spec.count).map(move |i| {
        let mut rng = trial_rng(spec.seed, i);
        random_ad(spec.dim_for(i), spec.conditioning, &mut rng)
    })
}
