use crate::error::{Error, Result};
use crate::lie::ALPHA_CURV;
use crate::scalar::Scalar;

use super::forms::calibrate_metric_c;

/// Default step of the first-derivative difference quotients.
pub const DEFAULT_FD_STEP: f64 = 1e-5;

/// Step of the second-order stencil used for `dd^c K`.
pub const DDC_STEP: f64 = 1e-3;

/// The `d^c` convention in force: `d^c = i(∂̄ − ∂)`, so `dd^c = 2i∂∂̄`.
pub const DC_CONVENTION: &str = "d^c = i(dbar - d)";

/// How the metric constant `c` is chosen.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MetricC<T> {
    /// Calibrated at `x` so that `ω₁(X, I₁⁻¹Y) = g(X, Y)`.
    Auto,
    Fixed(T),
}

/// Constants of the hyperkähler package: prefactor of the potential, the
/// metric constant, and the difference step for pushforwards.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StructureConfig<T> {
    alpha_potential: T,
    metric_c: T,
    metric_c_calibrated: bool,
    fd_step: T,
}

impl<T: Scalar> StructureConfig<T> {
    pub fn new(alpha_potential: T, metric_c: MetricC<T>, fd_step: T) -> Result<Self> {
        if !(alpha_potential.is_finite() && alpha_potential > T::zero()) {
            return Err(Error::InvalidConfig(format!("alpha_potential must be > 0, got {alpha_potential}")));
        }
        if !(fd_step > T::zero() && fd_step < T::c(1e-2)) {
            return Err(Error::InvalidConfig(format!("fd_step must lie in (0, 1e-2), got {fd_step}")));
        }
        let mut cfg = Self { alpha_potential, metric_c: T::one(), metric_c_calibrated: false, fd_step };
        match metric_c {
            MetricC::Fixed(c) => cfg.metric_c = check_metric_c(c)?,
            MetricC::Auto => {
                cfg.metric_c = check_metric_c(calibrate_metric_c(&cfg)?)?;
                cfg.metric_c_calibrated = true;
            }
        }
        Ok(cfg)
    }

    /// `α = 2`, calibrated `c`, default step.
    pub fn standard() -> Self {
        Self::new(T::c(ALPHA_CURV), MetricC::Auto, T::c(DEFAULT_FD_STEP))
            .expect("calibration at the base point is well conditioned")
    }

    pub fn alpha_potential(&self) -> T {
        self.alpha_potential
    }

    pub fn metric_c(&self) -> T {
        self.metric_c
    }

    pub fn metric_c_calibrated(&self) -> bool {
        self.metric_c_calibrated
    }

    pub fn fd_step(&self) -> T {
        self.fd_step
    }

    pub fn with_metric_c(self, c: T) -> Result<Self> {
        Ok(Self { metric_c: check_metric_c(c)?, metric_c_calibrated: false, ..self })
    }

    pub(crate) fn with_unit_metric(self) -> Self {
        Self { metric_c: T::one(), metric_c_calibrated: false, ..self }
    }
}

impl<T: Scalar> Default for StructureConfig<T> {
    fn default() -> Self {
        Self::standard()
    }
}

// The calibrated constant comes out negative for this orientation of ω₁,
// so only zero and non-finite values are rejected.
fn check_metric_c<T: Scalar>(c: T) -> Result<T> {
    if c.is_finite() && c != T::zero() {
        Ok(c)
    } else {
        Err(Error::InvalidConfig(format!("metric_c must be finite and nonzero, got {c}")))
    }
}
