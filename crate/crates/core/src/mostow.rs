//! Closed-form Mostow decomposition `SL(2,C) = SU(2) · exp(im) · exp(it)`
//! and the polar decomposition `SU(1,1) = exp(im) · U(1)`.

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::mat2::{exp_offdiag, Mat2C};
use crate::scalar::Scalar;

/// Factors `g = k · f · e` with `k ∈ SU(2)`, `f = exp_offdiag(β)` and
/// `e = diag(λ, 1/λ)`, `λ = mostow_alpha > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MostowFactors<T> {
    pub k: Mat2C<T>,
    pub f: Mat2C<T>,
    pub e: Mat2C<T>,
    pub beta: Complex<T>,
    pub mostow_alpha: T,
}

impl<T: Scalar> MostowFactors<T> {
    pub fn product(&self) -> Mat2C<T> {
        self.k * self.f * self.e
    }

    /// `‖k·f·e − g‖_max`.
    pub fn reconstruction_residual(&self, g: &Mat2C<T>) -> T {
        self.product().dist(g)
    }

    /// `‖e·f²·e − g†g‖_max`.
    pub fn gram_residual(&self, g: &Mat2C<T>) -> T {
        (self.e * self.f * self.f * self.e).dist(&(g.adjoint() * *g))
    }

    /// `max(‖k†k − I‖, |det k − 1|)`.
    pub fn unitarity_residual(&self) -> T {
        let u = (self.k.adjoint() * self.k).dist(&Mat2C::identity());
        u.max((self.k.det() - Complex::one()).norm())
    }
}

/// Intermediate invariants of the decomposition, exposed for checking the
/// hyperbolic identity `cosh² 2|β| − sinh² 2|β| = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GramInvariants<T> {
    /// `|a|² + |c|²`
    pub first_column: T,
    /// `|b|² + |d|²`
    pub second_column: T,
    /// `āb + c̄d`
    pub cross: Complex<T>,
}

impl<T: Scalar> GramInvariants<T> {
    pub fn of(g: &Mat2C<T>) -> Self {
        Self {
            first_column: g.a11.norm_sqr() + g.a21.norm_sqr(),
            second_column: g.a12.norm_sqr() + g.a22.norm_sqr(),
            cross: g.a11.conj() * g.a12 + g.a21.conj() * g.a22,
        }
    }

    /// `cosh 2|β| = sqrt((|a|²+|c|²)(|b|²+|d|²))`
    pub fn cosh_2beta(&self) -> T {
        (self.first_column * self.second_column).sqrt()
    }

    /// `sinh 2|β| = |āb + c̄d|`
    pub fn sinh_2beta(&self) -> T {
        self.cross.norm()
    }
}

/// Decomposes `g ∈ SL(2,C)` as `k · f · e`.
///
/// `e = diag(λ, 1/λ)` with `λ = ((|a|²+|c|²)/(|b|²+|d|²))^{1/4}`: the fourth
/// root is what makes `e·f²·e = g†g` hold on the diagonal.
pub fn mostow_decompose<T: Scalar>(g: &Mat2C<T>) -> Result<MostowFactors<T>> {
    if !g.is_finite() {
        return Err(Error::NonFinite);
    }
    let deviation = (g.det() - Complex::one()).norm();
    if deviation > T::tol(1e-9) {
        return Err(Error::NotUnimodular { deviation: deviation.as_f64() });
    }
    let inv = GramInvariants::of(g);
    let c2 = inv.cosh_2beta();
    let s2 = inv.sinh_2beta();
    let beta = if s2 <= T::tol(1e-14) {
        Complex::zero()
    } else {
        let modulus = (c2 + s2).ln() * T::c(0.5);
        inv.cross.unscale(s2) * modulus
    };
    let lambda = (inv.first_column / inv.second_column).sqrt().sqrt();
    let e = Mat2C::diag(Complex::new(lambda, T::zero()), Complex::new(lambda.recip(), T::zero()));
    let e_inv = Mat2C::diag(Complex::new(lambda.recip(), T::zero()), Complex::new(lambda, T::zero()));
    let f = exp_offdiag(beta);
    let k = *g * e_inv * exp_offdiag(-beta);
    Ok(MostowFactors { k, f, e, beta, mostow_alpha: lambda })
}

/// Polar factors `h = p · u` of an SU(1,1) element.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarSu11<T> {
    /// `exp_offdiag(beta)`
    pub p: Mat2C<T>,
    /// `diag(e^{iθ}, e^{−iθ})`
    pub u: Mat2C<T>,
    pub beta: Complex<T>,
    pub theta: T,
}

/// Distance of `h` from the SU(1,1) form `[[a, b], [b̄, ā]]`, `|a|² − |b|² = 1`.
pub fn su11_residual<T: Scalar>(h: &Mat2C<T>) -> T {
    let shape = (h.a21 - h.a12.conj()).norm().max((h.a22 - h.a11.conj()).norm());
    let norm = (h.a11.norm_sqr() - h.a12.norm_sqr() - T::one()).abs();
    shape.max(norm)
}

pub fn check_su11<T: Scalar>(h: &Mat2C<T>) -> Result<()> {
    if !h.is_finite() {
        return Err(Error::NonFinite);
    }
    let residual = su11_residual(h);
    if residual > T::tol(1e-9) {
        return Err(Error::NotSU11 { residual: residual.as_f64() });
    }
    Ok(())
}

/// Polar decomposition `SU(1,1) = exp(im) × U(1)`.
///
/// From `h = p·u`: `e^{iθ} = a/|a|`, `|β| = asinh|b|` and
/// `β/|β| = (b/|b|)·e^{iθ}`.
pub fn polar_su11<T: Scalar>(h: &Mat2C<T>) -> Result<PolarSu11<T>> {
    check_su11(h)?;
    let a = h.a11;
    let b = h.a12;
    let phase_u = a.unscale(a.norm());
    let theta = a.arg();
    let bn = b.norm();
    let beta = if bn == T::zero() {
        Complex::zero()
    } else {
        b.unscale(bn) * phase_u * bn.asinh()
    };
    Ok(PolarSu11 {
        p: exp_offdiag(beta),
        u: Mat2C::diag(phase_u, phase_u.conj()),
        beta,
        theta,
    })
}
