//! Explicit hyperkähler geometry of the complex adjoint orbit of
//! `x = diag(i, −i)` under SL(2,C), which is `T*CP(1)` fibered over the
//! two-sphere with hyperbolic-disc fibers.
//!
//! All geometry is generic over the real scalar ([`Scalar`]: `f32` or
//! `f64`); the `*64` aliases below fix double precision.

pub mod cli;
pub mod error;
pub mod hk;
pub mod lie;
pub mod mat2;
pub mod mostow;
pub mod orbit;
pub mod sample;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::Scalar;

pub type Mat2C64 = mat2::Mat2C<f64>;
pub type Mat2R64 = mat2::Mat2R<f64>;
pub type OrbitPoint64 = orbit::OrbitPoint<f64>;
pub type TangentVec64 = orbit::TangentVec<f64>;
pub type DiscPoint64 = orbit::DiscPoint<f64>;
pub type MostowFactors64 = mostow::MostowFactors<f64>;
pub type StructureConfig64 = hk::StructureConfig<f64>;
pub type JFrame64 = hk::JFrame<f64>;
pub type EllipseGlyph64 = hk::EllipseGlyph<f64>;

pub type Mat2C32 = mat2::Mat2C<f32>;
pub type OrbitPoint32 = orbit::OrbitPoint<f32>;
