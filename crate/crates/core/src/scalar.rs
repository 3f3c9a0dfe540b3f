use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, NumCast};

/// Real scalar the geometry is computed over: `f32` or `f64`.
///
/// Admission gates and zero-branch thresholds are written for `f64`; a
/// scalar type widens them by `TOL_SCALE` so the same code path stays
/// usable in single precision.
pub trait Scalar: Float + FloatConst + Debug + Display + Default + Send + Sync + 'static {
    /// Multiplier applied to every `f64`-calibrated tolerance.
    const TOL_SCALE: f64;

    /// Converts an `f64` literal.
    fn c(v: f64) -> Self {
        <Self as NumCast>::from(v).expect("f64 literal representable in scalar type")
    }

    /// Tolerance `v` (stated for `f64`) adapted to this scalar type.
    fn tol(v: f64) -> Self {
        Self::c(v * Self::TOL_SCALE)
    }

    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    const TOL_SCALE: f64 = 1.0;
}

impl Scalar for f32 {
    const TOL_SCALE: f64 = 1e4;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tolerances_widen_for_single_precision() {
        assert_eq!(f64::tol(1e-9), 1e-9);
        assert!((f32::tol(1e-9) - 1e-5).abs() < 1e-10);
        assert_eq!(f32::c(0.5), 0.5f32);
    }
}
