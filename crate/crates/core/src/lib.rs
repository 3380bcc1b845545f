//! Exact rank and inertia analysis of Hermitian solutions of `AX = B` and `AXA* = B`.
//!
//! All arithmetic is over Gaussian rationals; no floating point enters any verdict.

pub mod blocks;
pub mod cli;
pub mod error;
pub mod extremal;
mod intmat;
pub mod io;
pub mod linalg;
pub mod matrix;
pub mod oracle;
pub mod ordering;
pub mod sample;
pub mod scalar;
pub mod solutions;

pub use error::{Error, Result};
pub use intmat::ScaledMatrix;
pub use linalg::{inertia, pinv, rank, Inertia, PinvBundle};
pub use matrix::Matrix;
pub use scalar::{GaussianRational, Rational};
