use num_complex::Complex;

use crate::error::{Error, Result};
use crate::lie::{base_point, pairing};
use crate::mat2::{eigenlines, Mat2C, Vec2C};
use crate::orbit::{project_pi, OrbitPoint, TangentVec};
use crate::scalar::Scalar;

use super::config::{StructureConfig, DDC_STEP};

/// `K(y) = α·Re⟨y, π(y)⟩`.
pub fn kahler_potential<T: Scalar>(y: &OrbitPoint<T>, cfg: &StructureConfig<T>) -> Result<T> {
    let p = project_pi(y)?;
    Ok(cfg.alpha_potential() * pairing(y.value(), p.value()).re)
}

/// Affine chart on pairs of complementary lines: line `j` is
/// `span(1, z_j)`, or `span(z_j, 1)` when `flipped[j]`. The orbit point is
/// `G x G⁻¹` with the two representatives as the columns of `G`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenChart<T> {
    pub flipped: [bool; 2],
    pub coords: Vec2C<T>,
}

/// Below this `|det G|` the chart is treated as singular.
pub const CHART_MIN_DET: f64 = 1e-6;

impl<T: Scalar> EigenChart<T> {
    /// Chart centered on the eigenlines of `y`, each line written over its
    /// larger component.
    pub fn at(y: &OrbitPoint<T>) -> Result<Self> {
        let lines = eigenlines(y.value())?;
        let mut flipped = [false; 2];
        let mut coords = [Complex::new(T::zero(), T::zero()); 2];
        for (j, l) in [lines.l1, lines.l2].iter().enumerate() {
            if l[0].norm() >= l[1].norm() {
                coords[j] = l[1] / l[0];
            } else {
                flipped[j] = true;
                coords[j] = l[0] / l[1];
            }
        }
        let chart = Self { flipped, coords };
        chart.point(&coords)?;
        Ok(chart)
    }

    fn representative(&self, j: usize, z: Complex<T>) -> Vec2C<T> {
        let one = Complex::new(T::one(), T::zero());
        if self.flipped[j] {
            [z, one]
        } else {
            [one, z]
        }
    }

    fn columns(&self, z: &Vec2C<T>) -> Result<Mat2C<T>> {
        let g = Mat2C::from_columns(self.representative(0, z[0]), self.representative(1, z[1]));
        let det = g.det().norm();
        if det < T::tol(CHART_MIN_DET) {
            return Err(Error::ChartSingular { det: det.as_f64() });
        }
        Ok(g)
    }

    /// Orbit point with chart coordinates `z`.
    pub fn point(&self, z: &Vec2C<T>) -> Result<OrbitPoint<T>> {
        let g = self.columns(z)?;
        let inv = g.inverse().ok_or(Error::ChartSingular { det: 0.0 })?;
        OrbitPoint::new(g * base_point() * inv)
    }

    /// Tangent vector at the chart center in direction `dir`; its generator
    /// is `dG·G⁻¹`.
    pub fn tangent(&self, dir: &Vec2C<T>) -> Result<TangentVec<T>> {
        let g = self.columns(&self.coords)?;
        let inv = g.inverse().ok_or(Error::ChartSingular { det: 0.0 })?;
        let zero = Complex::new(T::zero(), T::zero());
        let col = |j: usize| if self.flipped[j] { [dir[j], zero] } else { [zero, dir[j]] };
        let dg = Mat2C::from_columns(col(0), col(1));
        Ok(TangentVec::new(self.point(&self.coords)?, dg * inv))
    }
}

/// `dd^cK(u, v)` at `y`, for chart directions `u, v ∈ C²`, with
/// `d^c = i(∂̄ − ∂)`: in real terms `Hess K(v, iu) − Hess K(u, iv)`, each
/// mixed second derivative by a four-point centered stencil.
pub fn omega1_numeric<T: Scalar>(
    y: &OrbitPoint<T>,
    dir1: &Vec2C<T>,
    dir2: &Vec2C<T>,
    cfg: &StructureConfig<T>,
) -> Result<T> {
    let chart = EigenChart::at(y)?;
    omega1_numeric_in(&chart, dir1, dir2, cfg)
}

pub fn omega1_numeric_in<T: Scalar>(
    chart: &EigenChart<T>,
    dir1: &Vec2C<T>,
    dir2: &Vec2C<T>,
    cfg: &StructureConfig<T>,
) -> Result<T> {
    let h = T::c(DDC_STEP);
    let z0 = chart.coords;
    let k_at = |a: &Vec2C<T>, sa: T, b: &Vec2C<T>, sb: T| -> Result<T> {
        let z = [z0[0] + a[0] * sa + b[0] * sb, z0[1] + a[1] * sa + b[1] * sb];
        kahler_potential(&chart.point(&z)?, cfg)
    };
    let hess = |a: &Vec2C<T>, b: &Vec2C<T>| -> Result<T> {
        let s = k_at(a, h, b, h)? - k_at(a, h, b, -h)? - k_at(a, -h, b, h)? + k_at(a, -h, b, -h)?;
        Ok(s / (T::c(4.0) * h * h))
    };
    // unit directions keep the stencil step at h in the chart; bilinearity restores the scale
    let norm = |d: &Vec2C<T>| (d[0].norm_sqr() + d[1].norm_sqr()).sqrt();
    let (n1, n2) = (norm(dir1), norm(dir2));
    if n1 == T::zero() || n2 == T::zero() {
        return Ok(T::zero());
    }
    let u = [dir1[0] / n1, dir1[1] / n1];
    let v = [dir2[0] / n2, dir2[1] / n2];
    let i = Complex::i();
    let iu = [u[0] * i, u[1] * i];
    let iv = [v[0] * i, v[1] * i];
    Ok((hess(&v, &iu)? - hess(&u, &iv)?) * n1 * n2)
}
