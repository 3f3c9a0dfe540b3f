//! sl(2,C) structure around the base point `x = diag(i, −i)`.
//!
//! The compact real form is su(2) = t ⊕ m with t the diagonal and m the
//! off-diagonal anti-Hermitian matrices; sl(2,C) = t ⊕ m ⊕ it ⊕ im.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::mat2::{bracket, Mat2C};
use crate::scalar::Scalar;

/// The constant with `ad_x² = −ALPHA_CURV²` on m.
pub const ALPHA_CURV: f64 = 2.0;

/// Base point `x = diag(i, −i)`.
pub fn base_point<T: Scalar>() -> Mat2C<T> {
    Mat2C::diag(Complex::i(), -Complex::i())
}

/// Element of m with parameter `c`: `[[0, −c̄], [c, 0]]`.
pub fn m_element<T: Scalar>(c: Complex<T>) -> Mat2C<T> {
    Mat2C::offdiag(-c.conj(), c)
}

/// Element of im with parameter `β`: `[[0, β], [β̄, 0]]`, the generator
/// whose exponential is [`crate::mat2::exp_offdiag`]`(β)`.
pub fn im_element<T: Scalar>(beta: Complex<T>) -> Mat2C<T> {
    Mat2C::offdiag(beta, beta.conj())
}

/// Real basis `(d₁, d₂) = ([[0, −1], [1, 0]], [[0, i], [i, 0]])` of m.
pub fn m_basis<T: Scalar>() -> [Mat2C<T>; 2] {
    [m_element(Complex::new(T::one(), T::zero())), m_element(Complex::i())]
}

/// Traceless 2×2 complex matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlgElement<T>(Mat2C<T>);

impl<T: Scalar> AlgElement<T> {
    pub fn new(value: Mat2C<T>) -> Result<Self> {
        if !value.is_finite() {
            return Err(Error::NonFinite);
        }
        let tr = value.trace().norm();
        if tr > T::tol(1e-12) * value.max_norm().max(T::one()) {
            return Err(Error::NotTraceless { trace: tr.as_f64() });
        }
        Ok(Self(value))
    }

    /// Drops the trace part instead of rejecting it.
    pub fn project(value: Mat2C<T>) -> Self {
        let half_tr = value.trace().scale(T::c(0.5));
        Self(value - Mat2C::identity().scale(half_tr))
    }

    pub fn zero() -> Self {
        Self(Mat2C::zero())
    }

    pub fn value(&self) -> &Mat2C<T> {
        &self.0
    }

    pub fn into_inner(self) -> Mat2C<T> {
        self.0
    }

    fn tol(&self) -> T {
        T::tol(1e-12) * self.0.max_norm().max(T::one())
    }

    fn is_antihermitian(&self) -> bool {
        (self.0 + self.0.adjoint()).max_norm() <= self.tol()
    }

    fn is_hermitian(&self) -> bool {
        (self.0 - self.0.adjoint()).max_norm() <= self.tol()
    }

    fn is_diagonal(&self) -> bool {
        self.0.a12.norm().max(self.0.a21.norm()) <= self.tol()
    }

    fn is_offdiagonal(&self) -> bool {
        self.0.a11.norm().max(self.0.a22.norm()) <= self.tol()
    }

    /// Diagonal anti-Hermitian.
    pub fn in_t(&self) -> bool {
        self.is_diagonal() && self.is_antihermitian()
    }

    /// Off-diagonal anti-Hermitian.
    pub fn in_m(&self) -> bool {
        self.is_offdiagonal() && self.is_antihermitian()
    }

    /// Real diagonal.
    pub fn in_it(&self) -> bool {
        self.is_diagonal() && self.is_hermitian()
    }

    /// Off-diagonal Hermitian.
    pub fn in_im(&self) -> bool {
        self.is_offdiagonal() && self.is_hermitian()
    }

    /// In su(2) = t ⊕ m.
    pub fn in_compact(&self) -> bool {
        self.is_antihermitian()
    }
}

/// Killing form of sl(2,C): `κ(a, b) = 4·tr(ab)`.
pub fn killing<T: Scalar>(a: &Mat2C<T>, b: &Mat2C<T>) -> Complex<T> {
    (*a * *b).trace().scale(T::c(4.0))
}

/// The involution `a* = −a` on su(2), `a* = a` on i·su(2).
///
/// Extended real-linearly over sl(2,C) = su(2) ⊕ i·su(2) this is the
/// conjugate transpose.
pub fn star<T: Scalar>(a: &Mat2C<T>) -> Mat2C<T> {
    a.hermitian_part() - a.antihermitian_part()
}

/// Hermitian product `⟨a, b⟩ = κ(a*, b)`, conjugate-linear in `a`.
pub fn pairing<T: Scalar>(a: &Mat2C<T>, b: &Mat2C<T>) -> Complex<T> {
    killing(&star(a), b)
}

/// Components of an element along t, m, it, im.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Split<T> {
    pub t: AlgElement<T>,
    pub m: AlgElement<T>,
    pub it: AlgElement<T>,
    pub im: AlgElement<T>,
}

impl<T: Scalar> Split<T> {
    pub fn sum(&self) -> Mat2C<T> {
        *self.t.value() + *self.m.value() + *self.it.value() + *self.im.value()
    }
}

pub fn split_components<T: Scalar>(xi: &AlgElement<T>) -> Split<T> {
    let anti = xi.value().antihermitian_part();
    let herm = xi.value().hermitian_part();
    Split {
        t: AlgElement(anti.diagonal_part()),
        m: AlgElement(anti.offdiagonal_part()),
        it: AlgElement(herm.diagonal_part()),
        im: AlgElement(herm.offdiagonal_part()),
    }
}

/// `ad_x(ξ) = [x, ξ]`.
pub fn ad_x_apply<T: Scalar>(xi: &AlgElement<T>) -> AlgElement<T> {
    AlgElement(bracket(&base_point(), xi.value()))
}

/// Recovers the curvature constant from `ad_x²` acting on the m-basis.
///
/// Returns `sqrt(−⟨d, ad_x² d⟩ / ⟨d, d⟩)` averaged over the basis; equals 2.
pub fn curvature_constant<T: Scalar>() -> T {
    let x = base_point::<T>();
    let mut acc = T::zero();
    for d in m_basis::<T>() {
        let dd = bracket(&x, &bracket(&x, &d));
        acc = acc + (-pairing(&d, &dd).re / pairing(&d, &d).re).sqrt();
    }
    acc * T::c(0.5)
}

/// Max-norm residual of `ad_x² + α²` on the m-basis, for a self-test.
pub fn curvature_residual<T: Scalar>(alpha: T) -> T {
    let x = base_point::<T>();
    m_basis::<T>().iter().fold(T::zero(), |acc, d| {
        let dd = bracket(&x, &bracket(&x, d));
        acc.max((dd + d.scale_re(alpha * alpha)).max_norm())
    })
}
