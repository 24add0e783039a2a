//! Means, the extended Loewner order, parallel sums and Schur complements
//! for accretive-dissipative matrices, plus a verification harness that
//! property-tests their inequalities and identities.

pub mod error;
pub mod harness;
pub mod linalg;
pub mod means;
pub mod order;
pub mod residual;
pub mod schur;
pub mod tol;

pub use error::{Error, Result};
pub use linalg::{ComplexSquareMatrix, HermitianMatrix};
pub use means::MeanKind;
pub use order::{AccretiveDissipativeMatrix, OrderRelation, OrderTag, PartOrder, ToeplitzParts};
pub use residual::Residual;
pub use schur::{ArithmeticForm, BlockPartition, InputMode};
pub use tol::ToleranceConfig;

pub use num_complex::Complex64;
