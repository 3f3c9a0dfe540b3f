//! Seeded random samples of the groups and spaces involved, for the
//! verification sweeps and tests.

use num_complex::Complex;
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::lie::{base_point, im_element, m_element};
use crate::mat2::{exp_traceless, Mat2C};
use crate::scalar::Scalar;

pub fn complex_normal<T: Scalar, R: Rng + ?Sized>(rng: &mut R) -> Complex<T> {
    let re: f64 = StandardNormal.sample(rng);
    let im: f64 = StandardNormal.sample(rng);
    Complex::new(T::c(re), T::c(im))
}

/// Complex standard-normal entries divided by the principal square root of
/// the determinant.
pub fn sl2c<T: Scalar, R: Rng + ?Sized>(rng: &mut R) -> Mat2C<T> {
    loop {
        let m = Mat2C::new(complex_normal(rng), complex_normal(rng), complex_normal(rng), complex_normal(rng));
        let d = m.det();
        if d.norm() < T::c(1e-3) {
            continue;
        }
        return m.scale(d.sqrt().inv());
    }
}

/// `exp` of a random su(2) element; covers SU(2) since exp is onto for
/// compact connected groups.
pub fn su2<T: Scalar, R: Rng + ?Sized>(rng: &mut R) -> Mat2C<T> {
    let theta: f64 = rng.random_range(-std::f64::consts::PI..std::f64::consts::PI);
    let t = base_point::<T>().scale_re(T::c(theta));
    let m = m_element(complex_normal::<T, R>(rng).scale(T::c(1.5)));
    exp_traceless(&(t + m))
}

/// `exp_offdiag(β)` parameter with `|β| ≤ max_modulus`.
pub fn beta<T: Scalar, R: Rng + ?Sized>(rng: &mut R, max_modulus: f64) -> Complex<T> {
    let r: f64 = rng.random_range(0.0..max_modulus);
    let phase: f64 = rng.random_range(-std::f64::consts::PI..std::f64::consts::PI);
    Complex::from_polar(T::c(r), T::c(phase))
}

/// Uniform point of the disc of radius `max_radius < 1`.
pub fn disc<T: Scalar, R: Rng + ?Sized>(rng: &mut R, max_radius: f64) -> Complex<T> {
    let r: f64 = max_radius * rng.random_range(0.0f64..1.0).sqrt();
    let phase: f64 = rng.random_range(-std::f64::consts::PI..std::f64::consts::PI);
    Complex::from_polar(T::c(r), T::c(phase))
}

/// Random SU(1,1) element `exp_offdiag(β)·diag(e^{iθ}, e^{−iθ})`.
pub fn su11<T: Scalar, R: Rng + ?Sized>(rng: &mut R, max_modulus: f64) -> Mat2C<T> {
    let p = exp_traceless(&im_element(beta::<T, R>(rng, max_modulus)));
    let theta: f64 = rng.random_range(-std::f64::consts::PI..std::f64::consts::PI);
    let u = Mat2C::diag(Complex::from_polar(T::one(), T::c(theta)), Complex::from_polar(T::one(), T::c(-theta)));
    p * u
}

/// Random real vector in `[-1, 1]^n`.
pub fn unit_box<const N: usize, R: Rng + ?Sized>(rng: &mut R) -> [f64; N] {
    std::array::from_fn(|_| rng.random_range(-1.0..1.0))
}
