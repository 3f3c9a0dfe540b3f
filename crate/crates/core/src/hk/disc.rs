use num_complex::Complex;

use crate::error::Result;
use crate::mat2::{exp_offdiag, svd2, Mat2R, Svd2};
use crate::orbit::{disc_beta, fiber_to_disc, DiscPoint, OrbitPoint};
use crate::scalar::Scalar;

/// Pushforwards `(X̃₁, X̃₂) = (i(1 + Z²), 1 − Z²)` of the fiber vectors with
/// generators `[[0, i], [−i, 0]]` and `[[0, 1], [1, 0]]`.
pub fn tilde_frame<T: Scalar>(z: &DiscPoint<T>) -> (Complex<T>, Complex<T>) {
    let one = Complex::new(T::one(), T::zero());
    let z2 = z.z() * z.z();
    ((one + z2) * Complex::i(), one - z2)
}

/// `(X̃₁, X̃₂)` by differentiating `t ↦ b(t)/ā(t)` along `h_k(t)·f`, where
/// `f = exp_offdiag(β(Z))`, `h₁(t) = exp_offdiag(it)`, `h₂(t) = exp_offdiag(t)`.
/// Central differences with one Richardson level.
pub fn frame_by_curves<T: Scalar>(z: &DiscPoint<T>, step: T) -> (Complex<T>, Complex<T>) {
    let f = exp_offdiag(disc_beta(z));
    let curve = |dir: Complex<T>| {
        move |t: T| {
            let h = exp_offdiag(dir * t) * f;
            h.a12 / h.a22
        }
    };
    let i = Complex::i();
    let one = Complex::new(T::one(), T::zero());
    (richardson(curve(i), step), richardson(curve(one), step))
}

/// `(X̃₁, X̃₂)` by differentiating the disc coordinate of
/// `Ad(h_k(t))(y)` for the same two curves, through [`fiber_to_disc`].
pub fn frame_through_quotient<T: Scalar>(z: &DiscPoint<T>, step: T) -> Result<(Complex<T>, Complex<T>)> {
    let y = crate::orbit::disc_to_fiber(z);
    let curve = |dir: Complex<T>| {
        move |t: T| -> Result<Complex<T>> {
            let moved = OrbitPoint::new(y.value().conjugated_by(&exp_offdiag(dir * t)))?;
            Ok(fiber_to_disc(&moved)?.z())
        }
    };
    let i = Complex::i();
    let one = Complex::new(T::one(), T::zero());
    Ok((try_richardson(curve(i), step)?, try_richardson(curve(one), step)?))
}

fn richardson<T: Scalar, F: Fn(T) -> Complex<T>>(f: F, h: T) -> Complex<T> {
    try_richardson(|t| Ok(f(t)), h).expect("infallible curve")
}

fn try_richardson<T: Scalar, F: Fn(T) -> Result<Complex<T>>>(f: F, h: T) -> Result<Complex<T>> {
    let central = |s: T| -> Result<Complex<T>> { Ok((f(s)? - f(-s)?) / (s + s)) };
    let coarse = central(h)?;
    let fine = central(h / T::c(2.0))?;
    Ok((fine * T::c(4.0) - coarse) / T::c(3.0))
}

fn real_coords<T: Scalar>(w: Complex<T>) -> [T; 2] {
    [w.re, w.im]
}

/// Structure induced on the disc by `I₂`: in the frame `(X̃₁, X̃₂)` it is
/// `[[0, −1], [1, 0]]`, so in the standard basis `J = P·[[0, −1], [1, 0]]·P⁻¹`
/// with `P = (X̃₁ | X̃₂)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JFrame<T> {
    pub z: DiscPoint<T>,
    pub p_matrix: Mat2R<T>,
    pub j_matrix: Mat2R<T>,
}

impl<T: Scalar> JFrame<T> {
    /// `‖J − J₀‖_max` against the standard structure `J₀ = [[0, −1], [1, 0]]`.
    pub fn distance_from_standard(&self) -> T {
        self.j_matrix.dist(&Mat2R::standard_j())
    }

    /// `‖J² + I‖_max`.
    pub fn square_residual(&self) -> T {
        (self.j_matrix * self.j_matrix + Mat2R::identity()).max_norm()
    }
}

pub fn induced_j<T: Scalar>(z: &DiscPoint<T>) -> JFrame<T> {
    let (x1, x2) = tilde_frame(z);
    let p = Mat2R::from_columns(real_coords(x1), real_coords(x2));
    // det P = r⁴ − 1 < 0 inside the disc
    let p_inv = p.inverse().expect("P is invertible inside the disc");
    let j = p * Mat2R::standard_j() * p_inv;
    JFrame { z: *z, p_matrix: p, j_matrix: j }
}

/// Ellipse drawn for `J(Z)`: `axis1 = scale·s₁·U₁` from the SVD `P = U S V`,
/// and `axis2 = J·axis1`, of length `scale·s₂` along `U₂`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipseGlyph<T> {
    pub center: DiscPoint<T>,
    pub axis1: [T; 2],
    pub axis2: [T; 2],
}

impl<T: Scalar> EllipseGlyph<T> {
    pub fn half_axes(&self) -> (T, T) {
        (self.axis1[0].hypot(self.axis1[1]), self.axis2[0].hypot(self.axis2[1]))
    }

    /// Angle of the great axis from the real axis.
    pub fn angle(&self) -> T {
        self.axis1[1].atan2(self.axis1[0])
    }

    /// `|axis1| / |axis2|`.
    pub fn aspect_ratio(&self) -> T {
        let (a, b) = self.half_axes();
        a / b
    }
}

pub fn ellipse_glyph<T: Scalar>(z: &DiscPoint<T>, scale: T) -> EllipseGlyph<T> {
    let frame = induced_j(z);
    let Svd2 { u, s, .. } = svd2(&frame.p_matrix);
    let u1 = u.column(0);
    let axis1 = [u1[0] * s[0] * scale, u1[1] * s[0] * scale];
    let axis2 = frame.j_matrix.mul_vec(&axis1);
    EllipseGlyph { center: *z, axis1, axis2 }
}
