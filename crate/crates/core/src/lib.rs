//! Desk-scale numerics for KPZ universality.
//!
//! * [`tasep`]: continuous-time TASEP with step, flat and stationary initial
//!   data, height functions and the fluctuation rescalings.
//! * [`airy`]: the Airy function on the real line.
//! * [`fredholm`]: Nyström evaluation of the Airy₁/Airy₂ Fredholm
//!   determinants, Tracy-Widom distributions and process covariances.
//! * [`rmt`]: GUE/GOE sampling, Dyson Brownian motion and the largest
//!   eigenvalue.
//! * [`stats`]: empirical distributions, Kolmogorov-Smirnov distances and
//!   batch-means covariance estimates.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod airy;
pub mod error;
pub mod fredholm;
pub mod linalg;
pub mod quadrature;
pub mod rmt;
pub mod rng;
pub mod scalar;
pub mod stats;
pub mod tasep;

pub use error::{Error, Result};
pub use scalar::Real;

pub type AiryValue64 = airy::AiryValue<f64>;
pub type FredholmSolver64 = fredholm::FredholmSolver<f64>;
pub type KernelCut64 = fredholm::KernelCut<f64>;
pub type QuadratureGrid64 = fredholm::QuadratureGrid<f64>;
pub type GaussLegendre64 = quadrature::GaussLegendre<f64>;
pub type MatrixState64 = rmt::MatrixState<f64>;
pub type SymTridiagonal64 = linalg::SymTridiagonal<f64>;
