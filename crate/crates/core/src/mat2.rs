//! Fixed-shape 2×2 linear algebra.
//!
//! Everything in the orbit geometry is a 2×2 complex matrix: group elements
//! of SL(2,C), algebra elements of sl(2,C), and points of the orbit. The
//! disc figure needs a real 2×2 SVD. Both are small enough that closed forms
//! beat any general-purpose routine.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Column vector in C².
pub type Vec2C<T> = [Complex<T>; 2];

/// 2×2 complex matrix `[[a11, a12], [a21, a22]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2C<T> {
    pub a11: Complex<T>,
    pub a12: Complex<T>,
    pub a21: Complex<T>,
    pub a22: Complex<T>,
}

impl<T: Scalar> Mat2C<T> {
    pub const fn new(a11: Complex<T>, a12: Complex<T>, a21: Complex<T>, a22: Complex<T>) -> Self {
        Self { a11, a12, a21, a22 }
    }

    /// Constructor that rejects NaN and infinite entries.
    pub fn try_new(a11: Complex<T>, a12: Complex<T>, a21: Complex<T>, a22: Complex<T>) -> Result<Self> {
        let m = Self::new(a11, a12, a21, a22);
        if m.is_finite() {
            Ok(m)
        } else {
            Err(Error::NonFinite)
        }
    }

    /// Builds a matrix from real parts only.
    pub fn from_real(a11: T, a12: T, a21: T, a22: T) -> Self {
        let r = |v| Complex::new(v, T::zero());
        Self::new(r(a11), r(a12), r(a21), r(a22))
    }

    pub fn from_columns(c1: Vec2C<T>, c2: Vec2C<T>) -> Self {
        Self::new(c1[0], c2[0], c1[1], c2[1])
    }

    pub fn zero() -> Self {
        let z = Complex::zero();
        Self::new(z, z, z, z)
    }

    pub fn identity() -> Self {
        Self::diag(Complex::one(), Complex::one())
    }

    pub fn diag(d1: Complex<T>, d2: Complex<T>) -> Self {
        let z = Complex::zero();
        Self::new(d1, z, z, d2)
    }

    pub fn offdiag(u: Complex<T>, l: Complex<T>) -> Self {
        let z = Complex::zero();
        Self::new(z, u, l, z)
    }

    pub fn entries(&self) -> [Complex<T>; 4] {
        [self.a11, self.a12, self.a21, self.a22]
    }

    pub fn column(&self, j: usize) -> Vec2C<T> {
        match j {
            0 => [self.a11, self.a21],
            _ => [self.a12, self.a22],
        }
    }

    pub fn is_finite(&self) -> bool {
        self.entries().iter().all(|c| c.re.is_finite() && c.im.is_finite())
    }

    pub fn trace(&self) -> Complex<T> {
        self.a11 + self.a22
    }

    pub fn det(&self) -> Complex<T> {
        self.a11 * self.a22 - self.a12 * self.a21
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::new(self.a11.conj(), self.a21.conj(), self.a12.conj(), self.a22.conj())
    }

    pub fn transpose(&self) -> Self {
        Self::new(self.a11, self.a21, self.a12, self.a22)
    }

    pub fn scale(&self, s: Complex<T>) -> Self {
        Self::new(self.a11 * s, self.a12 * s, self.a21 * s, self.a22 * s)
    }

    pub fn scale_re(&self, s: T) -> Self {
        self.scale(Complex::new(s, T::zero()))
    }

    /// Multiplication by the imaginary unit.
    pub fn times_i(&self) -> Self {
        self.scale(Complex::i())
    }

    /// Adjugate; equals the inverse when `det = 1`.
    pub fn adjugate(&self) -> Self {
        Self::new(self.a22, -self.a12, -self.a21, self.a11)
    }

    pub fn inverse(&self) -> Option<Self> {
        let d = self.det();
        if d.norm() == T::zero() || !d.norm().is_finite() {
            return None;
        }
        Some(self.adjugate().scale(d.inv()))
    }

    /// Conjugation `g · self · g⁻¹`.
    ///
    /// # Panics
    /// If `g` is singular.
    pub fn conjugated_by(&self, g: &Self) -> Self {
        let g_inv = g.inverse().expect("conjugation by a singular matrix");
        *g * *self * g_inv
    }

    /// Largest entry modulus.
    pub fn max_norm(&self) -> T {
        self.entries().iter().fold(T::zero(), |acc, c| acc.max(c.norm()))
    }

    pub fn frobenius_norm(&self) -> T {
        self.entries().iter().fold(T::zero(), |acc, c| acc + c.norm_sqr()).sqrt()
    }

    /// Max-norm distance to `other`.
    pub fn dist(&self, other: &Self) -> T {
        (*self - *other).max_norm()
    }

    pub fn mul_vec(&self, v: &Vec2C<T>) -> Vec2C<T> {
        [self.a11 * v[0] + self.a12 * v[1], self.a21 * v[0] + self.a22 * v[1]]
    }

    /// Hermitian part `(m + m†)/2`.
    pub fn hermitian_part(&self) -> Self {
        (*self + self.adjoint()).scale_re(T::c(0.5))
    }

    /// Anti-Hermitian part `(m − m†)/2`.
    pub fn antihermitian_part(&self) -> Self {
        (*self - self.adjoint()).scale_re(T::c(0.5))
    }

    pub fn diagonal_part(&self) -> Self {
        Self::diag(self.a11, self.a22)
    }

    pub fn offdiagonal_part(&self) -> Self {
        Self::offdiag(self.a12, self.a21)
    }

    /// Real 8-vector `(Re a11, Re a12, Re a21, Re a22, Im a11, …)`.
    pub fn to_real_vec(&self) -> [T; 8] {
        let e = self.entries();
        [e[0].re, e[1].re, e[2].re, e[3].re, e[0].im, e[1].im, e[2].im, e[3].im]
    }

    pub fn map<F: Fn(Complex<T>) -> Complex<T>>(&self, f: F) -> Self {
        Self::new(f(self.a11), f(self.a12), f(self.a21), f(self.a22))
    }
}

/// Commutator `[a, b] = ab − ba`.
pub fn bracket<T: Scalar>(a: &Mat2C<T>, b: &Mat2C<T>) -> Mat2C<T> {
    *a * *b - *b * *a
}

impl<T: Scalar> Add for Mat2C<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.a11 + o.a11, self.a12 + o.a12, self.a21 + o.a21, self.a22 + o.a22)
    }
}

impl<T: Scalar> Sub for Mat2C<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.a11 - o.a11, self.a12 - o.a12, self.a21 - o.a21, self.a22 - o.a22)
    }
}

impl<T: Scalar> Neg for Mat2C<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a11, -self.a12, -self.a21, -self.a22)
    }
}

impl<T: Scalar> Mul for Mat2C<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Self::new(
            self.a11 * o.a11 + self.a12 * o.a21,
            self.a11 * o.a12 + self.a12 * o.a22,
            self.a21 * o.a11 + self.a22 * o.a21,
            self.a21 * o.a12 + self.a22 * o.a22,
        )
    }
}

/// Exponential of the Hermitian off-diagonal direction `[[0, β], [β̄, 0]]`:
///
/// ```text
/// [[cosh|β|,          (β/|β|) sinh|β|],
///  [(β̄/|β|) sinh|β|,  cosh|β|        ]]
/// ```
///
/// `β = 0` returns the identity exactly.
pub fn exp_offdiag<T: Scalar>(beta: Complex<T>) -> Mat2C<T> {
    let m = beta.norm();
    if m == T::zero() {
        return Mat2C::identity();
    }
    let phase = beta.unscale(m);
    let ch = Complex::new(m.cosh(), T::zero());
    let sh = m.sinh();
    Mat2C::new(ch, phase * sh, phase.conj() * sh, ch)
}

/// Inverse of [`exp_offdiag`]: recovers β from a matrix of that form.
///
/// Uses the off-diagonal entry, `|β| = asinh|f₁₂|`, which stays accurate
/// near the identity where `acosh f₁₁` does not.
pub fn log_offdiag<T: Scalar>(f: &Mat2C<T>) -> Complex<T> {
    let s = f.a12.norm();
    if s == T::zero() {
        return Complex::zero();
    }
    f.a12.unscale(s) * s.asinh()
}

/// Exponential of a traceless matrix.
///
/// Cayley–Hamilton gives `ξ² = −det(ξ)·I`, so
/// `exp ξ = cosh(s)·I + (sinh(s)/s)·ξ` with `s² = −det ξ`.
pub fn exp_traceless<T: Scalar>(xi: &Mat2C<T>) -> Mat2C<T> {
    let s2 = -xi.det();
    let s = s2.sqrt();
    let (ch, sinhc) = if s.norm() < T::c(1e-4) {
        // Taylor to s⁶; remainder below 1e-28.
        let k = |v: f64| Complex::new(T::c(v), T::zero());
        let ch = k(1.0) + s2 * (k(0.5) + s2 * (k(1.0 / 24.0) + s2 * k(1.0 / 720.0)));
        let sinhc = k(1.0) + s2 * (k(1.0 / 6.0) + s2 * (k(1.0 / 120.0) + s2 * k(1.0 / 5040.0)));
        (ch, sinhc)
    } else {
        (s.cosh(), s.sinh() / s)
    };
    Mat2C::identity().scale(ch) + xi.scale(sinhc)
}

/// Pair of complementary complex lines (ℓ₁, ℓ₂) in C², each held as a unit
/// representative whose first non-negligible component is real positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinePair<T> {
    pub l1: Vec2C<T>,
    pub l2: Vec2C<T>,
}

impl<T: Scalar> LinePair<T> {
    pub fn new(l1: Vec2C<T>, l2: Vec2C<T>) -> Result<Self> {
        let l1 = normalize_line(&l1).ok_or(Error::DegenerateLines { det: 0.0 })?;
        let l2 = normalize_line(&l2).ok_or(Error::DegenerateLines { det: 0.0 })?;
        let det = (l1[0] * l2[1] - l1[1] * l2[0]).norm();
        if det <= T::tol(1e-12) {
            return Err(Error::DegenerateLines { det: det.as_f64() });
        }
        Ok(Self { l1, l2 })
    }

    /// Matrix with the two representatives as columns.
    pub fn as_columns(&self) -> Mat2C<T> {
        Mat2C::from_columns(self.l1, self.l2)
    }
}

/// Canonical unit representative of the line spanned by `v`.
pub fn normalize_line<T: Scalar>(v: &Vec2C<T>) -> Option<Vec2C<T>> {
    let n = (v[0].norm_sqr() + v[1].norm_sqr()).sqrt();
    if !(n > T::zero()) || !n.is_finite() {
        return None;
    }
    let u = [v[0].unscale(n), v[1].unscale(n)];
    let pivot = if u[0].norm() > T::tol(1e-12) { u[0] } else { u[1] };
    let rot = pivot.conj().unscale(pivot.norm());
    Some([u[0] * rot, u[1] * rot])
}

/// Distance between two projective lines: `sqrt(1 − |⟨u, v⟩|²)` on unit representatives.
pub fn line_distance<T: Scalar>(u: &Vec2C<T>, v: &Vec2C<T>) -> T {
    let (Some(u), Some(v)) = (normalize_line(u), normalize_line(v)) else {
        return T::infinity();
    };
    // sine of the angle; avoids the cancellation in sqrt(1 − |⟨u,v⟩|²)
    (u[0] * v[1] - u[1] * v[0]).norm()
}

/// Eigenvector of `y` for eigenvalue `lambda`, from the better-conditioned row of `y − λI`.
fn eigvec<T: Scalar>(y: &Mat2C<T>, lambda: Complex<T>) -> Vec2C<T> {
    let from_row1 = [y.a12, lambda - y.a11];
    let from_row2 = [lambda - y.a22, y.a21];
    let n1 = from_row1[0].norm_sqr() + from_row1[1].norm_sqr();
    let n2 = from_row2[0].norm_sqr() + from_row2[1].norm_sqr();
    if n1 >= n2 {
        from_row1
    } else {
        from_row2
    }
}

/// Checks the `{+i, −i}` spectrum gate: `|tr y| ≤ 1e−9`, `|det y − 1| ≤ 1e−9`.
pub fn check_pm_i_spectrum<T: Scalar>(y: &Mat2C<T>) -> Result<()> {
    if !y.is_finite() {
        return Err(Error::NonFinite);
    }
    let tr = y.trace().norm();
    let det = (y.det() - Complex::one()).norm();
    let gate = T::tol(1e-9);
    if tr <= gate && det <= gate {
        Ok(())
    } else {
        Err(Error::DegenerateSpectrum { trace: tr.as_f64(), det: det.as_f64() })
    }
}

/// Eigenlines of a matrix with spectrum `{+i, −i}`: `l1` for `+i`, `l2` for `−i`.
pub fn eigenlines<T: Scalar>(y: &Mat2C<T>) -> Result<LinePair<T>> {
    check_pm_i_spectrum(y)?;
    let i = Complex::i();
    LinePair::new(eigvec(y, i), eigvec(y, -i))
}

/// Real 2×2 matrix `[[a11, a12], [a21, a22]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2R<T> {
    pub a11: T,
    pub a12: T,
    pub a21: T,
    pub a22: T,
}

impl<T: Scalar> Mat2R<T> {
    pub const fn new(a11: T, a12: T, a21: T, a22: T) -> Self {
        Self { a11, a12, a21, a22 }
    }

    pub fn identity() -> Self {
        Self::new(T::one(), T::zero(), T::zero(), T::one())
    }

    pub fn diag(d1: T, d2: T) -> Self {
        Self::new(d1, T::zero(), T::zero(), d2)
    }

    /// Counter-clockwise rotation by `angle`.
    pub fn rotation(angle: T) -> Self {
        let (s, c) = angle.sin_cos();
        Self::new(c, -s, s, c)
    }

    /// The standard complex structure of R² ≅ C, multiplication by i.
    pub fn standard_j() -> Self {
        Self::new(T::zero(), -T::one(), T::one(), T::zero())
    }

    pub fn from_columns(c1: [T; 2], c2: [T; 2]) -> Self {
        Self::new(c1[0], c2[0], c1[1], c2[1])
    }

    pub fn column(&self, j: usize) -> [T; 2] {
        match j {
            0 => [self.a11, self.a21],
            _ => [self.a12, self.a22],
        }
    }

    pub fn det(&self) -> T {
        self.a11 * self.a22 - self.a12 * self.a21
    }

    pub fn transpose(&self) -> Self {
        Self::new(self.a11, self.a21, self.a12, self.a22)
    }

    pub fn inverse(&self) -> Option<Self> {
        let d = self.det();
        if d == T::zero() || !d.is_finite() {
            return None;
        }
        Some(Self::new(self.a22 / d, -self.a12 / d, -self.a21 / d, self.a11 / d))
    }

    pub fn mul_vec(&self, v: &[T; 2]) -> [T; 2] {
        [self.a11 * v[0] + self.a12 * v[1], self.a21 * v[0] + self.a22 * v[1]]
    }

    pub fn max_norm(&self) -> T {
        self.a11.abs().max(self.a12.abs()).max(self.a21.abs()).max(self.a22.abs())
    }

    pub fn dist(&self, other: &Self) -> T {
        (*self - *other).max_norm()
    }

    pub fn rows(&self) -> [[T; 2]; 2] {
        [[self.a11, self.a12], [self.a21, self.a22]]
    }
}

impl<T: Scalar> Add for Mat2R<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.a11 + o.a11, self.a12 + o.a12, self.a21 + o.a21, self.a22 + o.a22)
    }
}

impl<T: Scalar> Sub for Mat2R<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.a11 - o.a11, self.a12 - o.a12, self.a21 - o.a21, self.a22 - o.a22)
    }
}

impl<T: Scalar> Mul for Mat2R<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Self::new(
            self.a11 * o.a11 + self.a12 * o.a21,
            self.a11 * o.a12 + self.a12 * o.a22,
            self.a21 * o.a11 + self.a22 * o.a21,
            self.a21 * o.a12 + self.a22 * o.a22,
        )
    }
}

/// `m = u · diag(s) · v` with `u`, `v` orthogonal and `s[0] ≥ s[1] ≥ 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Svd2<T> {
    pub u: Mat2R<T>,
    pub s: [T; 2],
    pub v: Mat2R<T>,
}

impl<T: Scalar> Svd2<T> {
    pub fn reconstruct(&self) -> Mat2R<T> {
        self.u * Mat2R::diag(self.s[0], self.s[1]) * self.v
    }
}

/// Closed-form SVD of a real 2×2 matrix.
///
/// Splits `m` into a conformal part `E·I + H·J` and an anti-conformal part
/// `F·σz + G·σx`; their moduli `Q`, `R` give `s = (Q + R, |Q − R|)` and their
/// angles give the two rotations. A negative `Q − R` is absorbed into `v`.
pub fn svd2<T: Scalar>(m: &Mat2R<T>) -> Svd2<T> {
    let half = T::c(0.5);
    let e = (m.a11 + m.a22) * half;
    let f = (m.a11 - m.a22) * half;
    let g = (m.a21 + m.a12) * half;
    let h = (m.a21 - m.a12) * half;
    let q = e.hypot(h);
    let r = f.hypot(g);
    let a1 = g.atan2(f);
    let a2 = h.atan2(e);
    let phi = (a1 + a2) * half;
    let theta = (a1 - a2) * half;
    let u = Mat2R::rotation(phi);
    let mut v = Mat2R::rotation(-theta);
    let s1 = q + r;
    let mut s2 = q - r;
    if s2 < T::zero() {
        s2 = -s2;
        v = Mat2R::diag(T::one(), -T::one()) * v;
    }
    Svd2 { u, s: [s1, s2], v }
}

#[cfg(test)]
mod tests {
    use super::*;

    type C = Complex<f64>;

    fn c(re: f64, im: f64) -> C {
        C::new(re, im)
    }

    /// Scaling-and-squaring Taylor exponential; independent of the closed forms.
    fn expm_series(m: &Mat2C<f64>) -> Mat2C<f64> {
        let norm = m.frobenius_norm();
        let squarings = if norm > 0.5 { (norm / 0.5).log2().ceil() as i32 } else { 0 };
        let a = m.scale_re(0.5f64.powi(squarings));
        let mut term = Mat2C::identity();
        let mut sum = Mat2C::identity();
        for k in 1..30 {
            term = (term * a).scale_re(1.0 / k as f64);
            sum = sum + term;
        }
        for _ in 0..squarings {
            sum = sum * sum;
        }
        sum
    }

    #[test]
    fn exp_offdiag_zero_is_identity() {
        assert_eq!(exp_offdiag(c(0.0, 0.0)), Mat2C::identity());
    }

    #[test]
    fn exp_offdiag_real_one() {
        let f = exp_offdiag(c(1.0, 0.0));
        let expect = Mat2C::from_real(1f64.cosh(), 1f64.sinh(), 1f64.sinh(), 1f64.cosh());
        assert!(f.dist(&expect) < 1e-15);
    }

    #[test]
    fn exp_offdiag_imaginary_unit_matches_series() {
        let f = exp_offdiag(c(0.0, 1.0));
        let expect = Mat2C::new(c(1f64.cosh(), 0.0), c(0.0, 1f64.sinh()), c(0.0, -1f64.sinh()), c(1f64.cosh(), 0.0));
        assert!(f.dist(&expect) < 1e-15);
        let gen = Mat2C::offdiag(c(0.0, 1.0), c(0.0, -1.0));
        assert!(f.dist(&expm_series(&gen)) < 1e-12);
    }

    #[test]
    fn exp_offdiag_is_positive_hermitian_unimodular() {
        for beta in [c(0.3, -0.2), c(-2.0, 1.5), c(0.0, -4.0)] {
            let f = exp_offdiag(beta);
            assert!(f.dist(&f.adjoint()) < 1e-14);
            assert!((f.det() - C::new(1.0, 0.0)).norm() < 1e-12);
            assert_eq!(f.a11, f.a22);
            assert!(f.a11.re > 0.0);
            let gen = Mat2C::offdiag(beta, beta.conj());
            assert!(f.dist(&expm_series(&gen)) < 1e-12 * f.max_norm());
        }
    }

    #[test]
    fn log_offdiag_inverts_exp() {
        for beta in [c(0.0, 0.0), c(1e-9, 2e-9), c(0.7, 0.1), c(-3.0, 2.0)] {
            let back = log_offdiag(&exp_offdiag(beta));
            assert!((back - beta).norm() < 1e-12, "{beta} -> {back}");
        }
    }

    #[test]
    fn exp_traceless_matches_series() {
        let cases = [
            Mat2C::new(c(0.3, 0.1), c(-1.0, 0.4), c(0.2, 0.9), c(-0.3, -0.1)),
            Mat2C::new(c(0.0, 1.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, -1.0)),
            Mat2C::new(c(1e-6, 0.0), c(2e-6, 0.0), c(0.0, 1e-6), c(-1e-6, 0.0)),
            // nilpotent: s = 0 exactly
            Mat2C::new(c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)),
        ];
        for m in cases {
            assert!(exp_traceless(&m).dist(&expm_series(&m)) < 1e-13);
        }
    }

    #[test]
    fn eigenlines_of_x_are_coordinate_axes() {
        let x = Mat2C::diag(c(0.0, 1.0), c(0.0, -1.0));
        let lp = eigenlines(&x).unwrap();
        assert!(line_distance(&lp.l1, &[c(1.0, 0.0), c(0.0, 0.0)]) < 1e-15);
        assert!(line_distance(&lp.l2, &[c(0.0, 0.0), c(1.0, 0.0)]) < 1e-15);
        assert_eq!(lp.l1, [c(1.0, 0.0), c(0.0, 0.0)]);
        assert_eq!(lp.l2, [c(0.0, 0.0), c(1.0, 0.0)]);
    }

    #[test]
    fn eigenlines_of_shear_conjugate() {
        // g = [[1,1],[0,1]] gives y = g x g⁻¹ = [[i, -2i],[0, -i]]; the −i line is g·e₂ = (1, 1).
        let x = Mat2C::diag(c(0.0, 1.0), c(0.0, -1.0));
        let g = Mat2C::from_real(1.0, 1.0, 0.0, 1.0);
        let y = x.conjugated_by(&g);
        assert!(y.dist(&Mat2C::new(c(0.0, 1.0), c(0.0, -2.0), c(0.0, 0.0), c(0.0, -1.0))) < 1e-15);
        let lp = eigenlines(&y).unwrap();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert!((lp.l1[0] - c(1.0, 0.0)).norm() < 1e-15 && lp.l1[1].norm() < 1e-15);
        assert!((lp.l2[0] - c(s, 0.0)).norm() < 1e-15 && (lp.l2[1] - c(s, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn eigenlines_rejects_wrong_spectrum() {
        let y = Mat2C::diag(c(0.0, 2.0), c(0.0, -2.0));
        assert!(matches!(eigenlines(&y), Err(Error::DegenerateSpectrum { .. })));
        let nan = Mat2C::diag(c(f64::NAN, 0.0), c(0.0, 0.0));
        assert_eq!(eigenlines(&nan), Err(Error::NonFinite));
    }

    #[test]
    fn normalized_line_has_real_positive_pivot() {
        let v = normalize_line(&[c(0.0, -3.0), c(4.0, 0.0)]).unwrap();
        assert!(v[0].im.abs() < 1e-16 && v[0].re > 0.0);
        assert!((v[0].norm_sqr() + v[1].norm_sqr() - 1.0).abs() < 1e-15);
        let w = normalize_line(&[c(0.0, 0.0), c(0.0, 2.0)]).unwrap();
        assert_eq!(w, [c(0.0, 0.0), c(1.0, 0.0)]);
        assert!(normalize_line(&[c(0.0, 0.0), c(0.0, 0.0)]).is_none());
    }

    #[test]
    fn svd2_examples() {
        let id = svd2(&Mat2R::<f64>::identity());
        assert!((id.s[0] - 1.0).abs() < 1e-15 && (id.s[1] - 1.0).abs() < 1e-15);

        let d = svd2(&Mat2R::<f64>::diag(3.0, -2.0));
        assert!((d.s[0] - 3.0).abs() < 1e-15 && (d.s[1] - 2.0).abs() < 1e-15);
        assert!(d.reconstruct().dist(&Mat2R::diag(3.0, -2.0)) < 1e-14);

        let p = Mat2R::<f64>::new(0.0, 0.75, 1.25, 0.0);
        let sv = svd2(&p);
        assert!((sv.s[0] - 1.25).abs() < 1e-15 && (sv.s[1] - 0.75).abs() < 1e-15);
        assert!(sv.reconstruct().dist(&p) < 1e-15);
    }

    #[test]
    fn svd2_of_zero_matrix() {
        let z = svd2(&Mat2R::new(0.0, 0.0, 0.0, 0.0));
        assert_eq!(z.s, [0.0, 0.0]);
    }

    #[test]
    fn single_precision_paths() {
        let f = exp_offdiag(Complex::new(0.5f32, 0.25));
        assert!((f.det() - Complex::new(1.0f32, 0.0)).norm() < 1e-5);
        let sv = svd2(&Mat2R::new(0.0f32, 0.75, 1.25, 0.0));
        assert!((sv.s[0] - 1.25).abs() < 1e-6);
    }

    fn orthogonality(u: &Mat2R<f64>) -> f64 {
        (u.transpose() * *u - Mat2R::identity()).max_norm()
    }

    #[test]
    fn svd2_random_reconstruction() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2);
        for _ in 0..10_000 {
            let m = Mat2R::new(
                rng.random_range(-10.0..10.0),
                rng.random_range(-10.0..10.0),
                rng.random_range(-10.0..10.0),
                rng.random_range(-10.0..10.0),
            );
            let sv = svd2(&m);
            assert!(sv.reconstruct().dist(&m) <= 1e-12, "{m:?}");
            assert!(orthogonality(&sv.u) < 1e-14 && orthogonality(&sv.v) < 1e-14);
            assert!(sv.s[0] >= sv.s[1] && sv.s[1] >= 0.0);
        }
    }

    #[test]
    fn eigenlines_follow_conjugation() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let x = Mat2C::diag(c(0.0, 1.0), c(0.0, -1.0));
        for _ in 0..100 {
            let g = crate::sample::sl2c::<f64, _>(&mut rng);
            let lp = eigenlines(&x.conjugated_by(&g)).unwrap();
            assert!(line_distance(&lp.l1, &g.column(0)) < 1e-10);
            assert!(line_distance(&lp.l2, &g.column(1)) < 1e-10);
        }
    }

    #[test]
    fn eigenlines_are_su2_equivariant() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(4);
        let x = Mat2C::diag(c(0.0, 1.0), c(0.0, -1.0));
        for _ in 0..100 {
            let y = x.conjugated_by(&crate::sample::sl2c::<f64, _>(&mut rng));
            let u = crate::sample::su2::<f64, _>(&mut rng);
            let before = eigenlines(&y).unwrap();
            let after = eigenlines(&y.conjugated_by(&u)).unwrap();
            assert!(line_distance(&after.l1, &u.mul_vec(&before.l1)) < 1e-10);
            assert!(line_distance(&after.l2, &u.mul_vec(&before.l2)) < 1e-10);
        }
    }

    proptest::proptest! {
        #[test]
        fn exp_offdiag_inverse_pair(r in 0.0f64..5.0, phase in -3.15f64..3.15) {
            let beta = C::from_polar(r, phase);
            let f = exp_offdiag(beta);
            // entries are O(cosh r), so the products carry rounding of order
            // ε·cosh²r, which exceeds 1e-12 once r passes about 4.6
            let tol = 1e-12f64.max(4.0 * f64::EPSILON * r.cosh().powi(2));
            proptest::prop_assert!((f * exp_offdiag(-beta)).dist(&Mat2C::identity()) <= tol);
            proptest::prop_assert!((f.det() - c(1.0, 0.0)).norm() <= tol);
        }
    }
}
