use num_complex::Complex;

use crate::error::{Error, Result};
use crate::lie::m_basis;
use crate::mat2::Mat2C;
use crate::orbit::{projection, OrbitPoint, TangentVec};
use crate::scalar::Scalar;

/// Condition number above which the generator solve is refused.
pub const MAX_CONDITION: f64 = 1e8;

/// Tangent frame `{X^{D₁}, X^{D₂}, X^{iD₁}, X^{iD₂}}` at `y`, where
/// `D_j = Ad(k)(d_j)` spans the copy of m at `π(y) = Ad(k)(x)`.
#[derive(Debug, Clone, Copy)]
pub struct GeneratorFrame<T> {
    pub base: OrbitPoint<T>,
    pub projection: OrbitPoint<T>,
    /// `(D₁, D₂)`.
    pub m_frame: [Mat2C<T>; 2],
    /// `‖R‖_F·‖R⁻¹‖_F` of the QR factor.
    pub condition: T,
    q: [[T; 8]; 4],
    r_inv: [[T; 4]; 4],
}

/// Generator of a tangent vector split as `𝔠 + i𝔠′` with `𝔠, 𝔠′` in the
/// transported m.
#[derive(Debug, Clone, Copy)]
pub struct SplitGenerator<T> {
    pub coeffs: [T; 4],
    pub real: Mat2C<T>,
    pub imag: Mat2C<T>,
}

impl<T: Scalar> GeneratorFrame<T> {
    pub fn at(y: &OrbitPoint<T>) -> Result<Self> {
        let pr = projection(y)?;
        let k = pr.factors.k;
        let [d1, d2] = m_basis::<T>();
        let m_frame = [d1.conjugated_by(&k), d2.conjugated_by(&k)];
        let gens = generators(&m_frame);
        let cols = gens.map(|g| TangentVec::new(*y, g).value.to_real_vec());

        // modified Gram–Schmidt
        let mut q = [[T::zero(); 8]; 4];
        let mut r = [[T::zero(); 4]; 4];
        for j in 0..4 {
            let mut v = cols[j];
            for i in 0..j {
                let rij = dot(&q[i], &v);
                r[i][j] = rij;
                for (vk, qk) in v.iter_mut().zip(q[i].iter()) {
                    *vk = *vk - rij * *qk;
                }
            }
            let n = dot(&v, &v).sqrt();
            r[j][j] = n;
            if n == T::zero() {
                return Err(Error::BasisDegenerate { condition: f64::INFINITY });
            }
            q[j] = v.map(|vk| vk / n);
        }
        let r_inv = upper_inverse(&r);
        let condition = frobenius(&r) * frobenius(&r_inv);
        if !(condition <= T::c(MAX_CONDITION)) {
            return Err(Error::BasisDegenerate { condition: condition.as_f64() });
        }
        Ok(Self { base: *y, projection: pr.point, m_frame, condition, q, r_inv })
    }

    /// `(D₁, D₂, iD₁, iD₂)`.
    pub fn generators(&self) -> [Mat2C<T>; 4] {
        generators(&self.m_frame)
    }

    pub fn basis(&self) -> [TangentVec<T>; 4] {
        self.generators().map(|g| TangentVec::new(self.base, g))
    }

    /// Least-squares coordinates of `v` in the frame.
    pub fn coordinates(&self, v: &TangentVec<T>) -> Result<[T; 4]> {
        v.same_base(&TangentVec::zero(self.base))?;
        let b = v.value.to_real_vec();
        let qtb: [T; 4] = std::array::from_fn(|i| dot(&self.q[i], &b));
        Ok(std::array::from_fn(|i| (0..4).fold(T::zero(), |acc, j| acc + self.r_inv[i][j] * qtb[j])))
    }

    pub fn split(&self, v: &TangentVec<T>) -> Result<SplitGenerator<T>> {
        let coeffs = self.coordinates(v)?;
        let [d1, d2] = self.m_frame;
        Ok(SplitGenerator {
            coeffs,
            real: d1.scale_re(coeffs[0]) + d2.scale_re(coeffs[1]),
            imag: d1.scale_re(coeffs[2]) + d2.scale_re(coeffs[3]),
        })
    }

    /// The tangent vector with the given frame coordinates.
    pub fn vector(&self, coeffs: &[T; 4]) -> TangentVec<T> {
        let g = self
            .generators()
            .iter()
            .zip(coeffs)
            .fold(Mat2C::zero(), |acc, (g, c)| acc + g.scale_re(*c));
        TangentVec::new(self.base, g)
    }
}

fn generators<T: Scalar>(m: &[Mat2C<T>; 2]) -> [Mat2C<T>; 4] {
    let i = Complex::i();
    [m[0], m[1], m[0].scale(i), m[1].scale(i)]
}

fn dot<T: Scalar, const N: usize>(a: &[T; N], b: &[T; N]) -> T {
    a.iter().zip(b).fold(T::zero(), |acc, (x, y)| acc + *x * *y)
}

fn frobenius<T: Scalar>(m: &[[T; 4]; 4]) -> T {
    m.iter().flatten().fold(T::zero(), |acc, v| acc + *v * *v).sqrt()
}

fn upper_inverse<T: Scalar>(r: &[[T; 4]; 4]) -> [[T; 4]; 4] {
    let mut inv = [[T::zero(); 4]; 4];
    for col in 0..4 {
        for i in (0..=col).rev() {
            let mut s = if i == col { T::one() } else { T::zero() };
            for j in i + 1..=col {
                s = s - r[i][j] * inv[j][col];
            }
            inv[i][col] = s / r[i][i];
        }
    }
    inv
}
