//! The complex orbit `O_x^C = {g x g⁻¹ : g ∈ SL(2,C)}`, its compact part
//! `O_x ≅ CP(1)`, the projection `π : O_x^C → O_x`, the diffeomorphism
//! `Φ : T O_x → O_x^C`, and disc coordinates on the fiber `π⁻¹(x)`.

use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lie::{base_point, im_element};
use crate::mat2::{bracket, eigenlines, exp_offdiag, log_offdiag, Mat2C};
use crate::mostow::{check_su11, mostow_decompose, MostowFactors};
use crate::scalar::Scalar;

/// `Ad(g)(x) = g x g⁻¹`.
pub fn ad_x<T: Scalar>(g: &Mat2C<T>) -> Mat2C<T> {
    base_point::<T>().conjugated_by(g)
}

/// Traceless matrix with spectrum `{+i, −i}` (equivalently `y² = −I`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrbitPoint<T> {
    value: Mat2C<T>,
}

impl<T: Scalar> OrbitPoint<T> {
    pub fn new(value: Mat2C<T>) -> Result<Self> {
        crate::mat2::check_pm_i_spectrum(&value)?;
        Ok(Self { value })
    }

    /// The base point `x`.
    pub fn base() -> Self {
        Self { value: base_point() }
    }

    /// `Ad(g)(x)`.
    pub fn from_group(g: &Mat2C<T>) -> Result<Self> {
        Self::new(ad_x(g))
    }

    pub fn value(&self) -> &Mat2C<T> {
        &self.value
    }

    /// `Ad(g)(self)`.
    pub fn conjugate(&self, g: &Mat2C<T>) -> Result<Self> {
        Self::new(self.value.conjugated_by(g))
    }

    /// `‖y + y†‖_max`; zero exactly on the compact orbit.
    pub fn compact_residual(&self) -> T {
        (self.value + self.value.adjoint()).max_norm()
    }

    pub fn is_compact(&self) -> bool {
        self.compact_residual() <= T::tol(1e-9)
    }

    pub fn dist(&self, other: &Self) -> T {
        self.value.dist(&other.value)
    }
}

/// Tangent vector `X^ξ(y) = [ξ, y]` at an orbit point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TangentVec<T> {
    pub base: OrbitPoint<T>,
    pub generator: Mat2C<T>,
    pub value: Mat2C<T>,
}

impl<T: Scalar> TangentVec<T> {
    /// Fundamental vector field of `generator` at `base`. The trace part of
    /// the generator is central and dropped.
    pub fn new(base: OrbitPoint<T>, generator: Mat2C<T>) -> Self {
        let half_tr = generator.trace().scale(T::c(0.5));
        let generator = generator - Mat2C::identity().scale(half_tr);
        let value = bracket(&generator, base.value());
        Self { base, generator, value }
    }

    /// Tangent vector with matrix value `value`, using the generator
    /// `½·y·V`, which satisfies `[½yV, y] = V` whenever `yV = −Vy`.
    /// Non-tangent input is projected onto the tangent space.
    pub fn from_value(base: OrbitPoint<T>, value: Mat2C<T>) -> Self {
        let generator = (*base.value() * value).scale_re(T::c(0.5));
        Self::new(base, generator)
    }

    pub fn zero(base: OrbitPoint<T>) -> Self {
        Self { base, generator: Mat2C::zero(), value: Mat2C::zero() }
    }

    pub fn scale(&self, s: T) -> Self {
        Self {
            base: self.base,
            generator: self.generator.scale_re(s),
            value: self.value.scale_re(s),
        }
    }

    /// Sum of two vectors at the same base point (base of `self` kept).
    pub fn add(&self, other: &Self) -> Self {
        Self {
            base: self.base,
            generator: self.generator + other.generator,
            value: self.value + other.value,
        }
    }

    /// Multiplication by i, the natural complex structure of the orbit.
    pub fn times_i(&self) -> Self {
        Self {
            base: self.base,
            generator: self.generator.times_i(),
            value: self.value.times_i(),
        }
    }

    /// `‖value − [generator, base]‖_max`.
    pub fn consistency_residual(&self) -> T {
        self.value.dist(&bracket(&self.generator, self.base.value()))
    }

    pub fn same_base(&self, other: &Self) -> Result<()> {
        let d = self.base.dist(&other.base);
        if d > T::tol(1e-12) * self.base.value().max_norm().max(T::one()) {
            return Err(Error::BaseMismatch { distance: d.as_f64() });
        }
        Ok(())
    }
}

/// Point of the open unit disc.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiscPoint<T> {
    z: Complex<T>,
}

impl<T: Scalar> DiscPoint<T> {
    pub fn new(z: Complex<T>) -> Result<Self> {
        let r = z.norm();
        if r < T::one() {
            Ok(Self { z })
        } else {
            Err(Error::OutsideDisc { modulus: r.as_f64() })
        }
    }

    pub fn from_polar(r: T, theta: T) -> Result<Self> {
        Self::new(Complex::from_polar(r, theta))
    }

    pub fn origin() -> Self {
        Self { z: Complex::zero() }
    }

    pub fn z(&self) -> Complex<T> {
        self.z
    }

    pub fn r(&self) -> T {
        self.z.norm()
    }

    pub fn theta(&self) -> T {
        self.z.arg()
    }
}

/// `g ∈ SL(2,C)` with `Ad(g)(x) = y`: normalized eigenvectors of `y` (`+i`
/// first) as columns, divided by the principal square root of their
/// determinant.
pub fn realize<T: Scalar>(y: &OrbitPoint<T>) -> Result<Mat2C<T>> {
    let lines = eigenlines(y.value())?;
    let g = lines.as_columns();
    Ok(g.scale(g.det().sqrt().inv()))
}

/// Projection together with the Mostow factors it was computed from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Projection<T> {
    pub point: OrbitPoint<T>,
    pub factors: MostowFactors<T>,
}

/// `π` computed through an arbitrary realization `g` of `y`: `Ad(k)(x)`
/// where `g = k·f·e`.
pub fn project_via<T: Scalar>(g: &Mat2C<T>) -> Result<Projection<T>> {
    let factors = mostow_decompose(g)?;
    let point = OrbitPoint::new(ad_x(&factors.k))?;
    Ok(Projection { point, factors })
}

pub fn projection<T: Scalar>(y: &OrbitPoint<T>) -> Result<Projection<T>> {
    project_via(&realize(y)?)
}

/// `π(Ad(k·f·e)(x)) = Ad(k)(x)`.
pub fn project_pi<T: Scalar>(y: &OrbitPoint<T>) -> Result<OrbitPoint<T>> {
    Ok(projection(y)?.point)
}

/// `‖π(y) − x‖_max`.
pub fn fiber_distance<T: Scalar>(y: &OrbitPoint<T>) -> Result<T> {
    Ok(project_pi(y)?.value().dist(&base_point()))
}

/// `Φ(z, v) = Ad(g·exp(i𝔞))(x)` where `z = Ad(g)(x)`, `g ∈ SU(2)`, and
/// `v = g·𝔞·g⁻¹` with `𝔞 ∈ m`.
pub fn phi<T: Scalar>(z: &OrbitPoint<T>, v: &TangentVec<T>) -> Result<OrbitPoint<T>> {
    let residual = z.compact_residual();
    if residual > T::tol(1e-9) {
        return Err(Error::NotCompactPoint { residual: residual.as_f64() });
    }
    v.same_base(&TangentVec::zero(*z))?;
    let g = realize(z)?;
    let a = g.adjoint() * v.generator * g;
    let a_m = a.antihermitian_part().offdiagonal_part();
    let off = a.dist(&a_m);
    if off > T::tol(1e-9) * v.generator.max_norm().max(T::one()) {
        return Err(Error::GeneratorNotInM { residual: off.as_f64() });
    }
    // i𝔞 = [[0, β], [β̄, 0]] with β = i·𝔞₁₂
    let beta = a_m.a12 * Complex::<T>::i();
    OrbitPoint::from_group(&(g * exp_offdiag(beta)))
}

/// Inverse of [`phi`]: `(z, v) = (Ad(k)(x), k·𝔞·k⁻¹)` where
/// `realize(y) = k·f·e` and `f = exp(i𝔞)`.
pub fn phi_inv<T: Scalar>(y: &OrbitPoint<T>) -> Result<(OrbitPoint<T>, TangentVec<T>)> {
    let Projection { point: z, factors } = projection(y)?;
    let beta = log_offdiag(&factors.f);
    // 𝔞 = −i·[[0, β], [β̄, 0]]
    let a = im_element(beta).scale(-Complex::i());
    let k = factors.k;
    let generator = k * a * k.adjoint();
    Ok((z, TangentVec::new(z, generator)))
}

/// Disc coordinate `Z = (β/|β|)·tanh|β|` of `y = Ad(exp_offdiag(β))(x)`.
pub fn fiber_to_disc<T: Scalar>(y: &OrbitPoint<T>) -> Result<DiscPoint<T>> {
    let Projection { point, factors } = projection(y)?;
    let distance = point.value().dist(&base_point());
    if distance > T::tol(1e-8) {
        return Err(Error::NotInFiber { distance: distance.as_f64() });
    }
    // k lies in the stabilizer U(1); moving it across f puts the fiber
    // point in the form Ad(exp_offdiag(β))(x).
    let f_fiber = factors.k * factors.f * factors.k.adjoint();
    let beta = log_offdiag(&f_fiber);
    let m = beta.norm();
    if m == T::zero() {
        return Ok(DiscPoint::origin());
    }
    DiscPoint::new(beta.unscale(m) * m.tanh())
}

/// `β = e^{iθ}·½·ln((1+r)/(1−r))` for `Z = r·e^{iθ}`.
pub fn disc_beta<T: Scalar>(z: &DiscPoint<T>) -> Complex<T> {
    let r = z.r();
    if r == T::zero() {
        return Complex::zero();
    }
    z.z().unscale(r) * r.atanh()
}

/// `Ad(exp_offdiag(β))(x)` with β from [`disc_beta`].
pub fn disc_to_fiber<T: Scalar>(z: &DiscPoint<T>) -> OrbitPoint<T> {
    let beta = disc_beta(z);
    let value = exp_offdiag(beta) * base_point() * exp_offdiag(-beta);
    OrbitPoint { value }
}

/// Möbius action `Z ↦ (aZ + b)/(b̄Z + ā)` of SU(1,1) on the disc.
pub fn moebius<T: Scalar>(h: &Mat2C<T>, z: &DiscPoint<T>) -> Result<DiscPoint<T>> {
    check_su11(h)?;
    let w = (h.a11 * z.z() + h.a12) / (h.a21 * z.z() + h.a22);
    // |w| < 1 holds analytically; rounding at the rim is clamped back inside.
    let r = w.norm();
    if r >= T::one() {
        let inside = T::one() - T::epsilon();
        return DiscPoint::new(w.unscale(r) * inside);
    }
    DiscPoint::new(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::m_element;
    use crate::sample;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    type C = Complex<f64>;

    fn c(re: f64, im: f64) -> C {
        C::new(re, im)
    }

    fn x() -> OrbitPoint<f64> {
        OrbitPoint::base()
    }

    #[test]
    fn orbit_point_admission() {
        assert!(OrbitPoint::new(Mat2C::<f64>::diag(c(0.0, 2.0), c(0.0, -2.0))).is_err());
        assert!(OrbitPoint::new(Mat2C::<f64>::diag(c(0.0, 1.0), c(0.0, -1.0))).is_ok());
        assert!(x().is_compact());
        let y = disc_to_fiber(&DiscPoint::new(c(0.5, 0.0)).unwrap());
        assert!(!y.is_compact());
    }

    #[test]
    fn realize_base_point_is_identity() {
        assert_eq!(realize(&x()).unwrap(), Mat2C::identity());
    }

    #[test]
    fn realize_conjugates_back() {
        let y = OrbitPoint::from_group(&exp_offdiag(c(1.0, 0.0))).unwrap();
        let g = realize(&y).unwrap();
        assert!(ad_x(&g).dist(y.value()) < 1e-10);
        assert!((g.det() - 1.0).norm() < 1e-12);

        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..100 {
            let g0 = sample::sl2c::<f64, _>(&mut rng);
            let y = OrbitPoint::from_group(&g0).unwrap();
            let g = realize(&y).unwrap();
            assert!(ad_x(&g).dist(y.value()) < 1e-10 * y.value().max_norm().max(1.0));
        }
    }

    #[test]
    fn projection_of_base_and_fiber() {
        assert!(project_pi(&x()).unwrap().dist(&x()) < 1e-15);
        for beta in [c(0.3, 0.0), c(1.0, 1.0), c(0.0, -2.0)] {
            let y = OrbitPoint::from_group(&exp_offdiag(beta)).unwrap();
            assert!(project_pi(&y).unwrap().dist(&x()) < 1e-10, "beta = {beta}");
        }
    }

    #[test]
    fn projection_is_identity_on_compact_orbit() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..50 {
            let z = OrbitPoint::from_group(&sample::su2::<f64, _>(&mut rng)).unwrap();
            assert!(project_pi(&z).unwrap().dist(&z) < 1e-12);
            assert!(project_pi(&z).unwrap().is_compact());
        }
    }

    #[test]
    fn projection_is_su2_equivariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..100 {
            let y = OrbitPoint::from_group(&sample::sl2c::<f64, _>(&mut rng)).unwrap();
            let u = sample::su2::<f64, _>(&mut rng);
            let lhs = project_pi(&y.conjugate(&u).unwrap()).unwrap();
            let rhs = project_pi(&y).unwrap().conjugate(&u).unwrap();
            assert!(lhs.dist(&rhs) < 1e-9);
        }
    }

    #[test]
    fn projection_is_gauge_independent() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..50 {
            let y = OrbitPoint::from_group(&sample::sl2c::<f64, _>(&mut rng)).unwrap();
            let g = realize(&y).unwrap();
            let phi_angle: f64 = rng.random_range(-3.0..3.0);
            let rho: f64 = rng.random_range(0.3..3.0);
            let s = Mat2C::diag(C::from_polar(rho, phi_angle), C::from_polar(1.0 / rho, -phi_angle));
            let via = project_via(&(g * s)).unwrap().point;
            assert!(via.dist(&project_pi(&y).unwrap()) < 1e-9);
        }
    }

    #[test]
    fn projection_shares_plus_i_line_with_k() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..30 {
            let y = OrbitPoint::from_group(&sample::sl2c::<f64, _>(&mut rng)).unwrap();
            let pr = projection(&y).unwrap();
            let l_pi = eigenlines(pr.point.value()).unwrap().l1;
            let k_e1 = pr.factors.k.column(0);
            assert!(crate::mat2::line_distance(&l_pi, &k_e1) < 1e-10);
        }
    }

    #[test]
    fn phi_zero_section_and_example() {
        let z = x();
        assert!(phi(&z, &TangentVec::zero(z)).unwrap().dist(&z) < 1e-15);

        let a = m_element(c(1.0, 0.0));
        let y = phi(&z, &TangentVec::new(z, a)).unwrap();
        // i𝔞 = [[0, −i], [i, 0]] is the im-element with β = −i
        let expect = OrbitPoint::from_group(&exp_offdiag(c(0.0, -1.0))).unwrap();
        assert!(y.dist(&expect) < 1e-14);
        assert!(fiber_distance(&y).unwrap() < 1e-10);
    }

    #[test]
    fn phi_rejects_bad_input() {
        let y = disc_to_fiber(&DiscPoint::new(c(0.3, 0.2)).unwrap());
        let v = TangentVec::new(y, m_element(c(1.0, 0.0)));
        assert!(matches!(phi(&y, &v), Err(Error::NotCompactPoint { .. })));
        let v = TangentVec::new(x(), base_point());
        assert!(matches!(phi(&x(), &v), Err(Error::GeneratorNotInM { .. })));
    }

    #[test]
    fn phi_maps_fibers_and_roundtrips() {
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        for _ in 0..100 {
            let u = sample::su2::<f64, _>(&mut rng);
            let z = OrbitPoint::from_group(&u).unwrap();
            let a = m_element(sample::complex_normal::<f64, _>(&mut rng));
            let v = TangentVec::new(z, u * a * u.adjoint());
            let y = phi(&z, &v).unwrap();
            assert!(project_pi(&y).unwrap().dist(&z) < 1e-9);

            let (z2, v2) = phi_inv(&y).unwrap();
            assert!(z2.dist(&z) < 1e-9);
            assert!(v2.generator.dist(&v.generator) < 1e-9);
            assert!(phi(&z2, &v2).unwrap().dist(&y) < 1e-9);
        }
    }

    #[test]
    fn phi_inv_examples() {
        let (z, v) = phi_inv(&x()).unwrap();
        assert!(z.dist(&x()) < 1e-15);
        assert!(v.generator.max_norm() < 1e-15);

        let beta = c(0.4, -0.9);
        let y = OrbitPoint::from_group(&exp_offdiag(beta)).unwrap();
        let (z, v) = phi_inv(&y).unwrap();
        assert!(z.dist(&x()) < 1e-10);
        let ia = v.generator.times_i();
        assert!(ia.dist(&im_element(beta)) < 1e-10);
    }

    #[test]
    fn phi_is_su2_equivariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..30 {
            let g = sample::su2::<f64, _>(&mut rng);
            let z = OrbitPoint::from_group(&g).unwrap();
            let v = TangentVec::new(z, g * m_element(sample::complex_normal(&mut rng)) * g.adjoint());
            let u = sample::su2::<f64, _>(&mut rng);
            let zu = z.conjugate(&u).unwrap();
            let vu = TangentVec::new(zu, u * v.generator * u.adjoint());
            let lhs = phi(&zu, &vu).unwrap();
            let rhs = phi(&z, &v).unwrap().conjugate(&u).unwrap();
            assert!(lhs.dist(&rhs) < 1e-9);
        }
    }

    #[test]
    fn disc_examples() {
        assert_eq!(fiber_to_disc(&x()).unwrap(), DiscPoint::origin());
        assert_eq!(disc_to_fiber(&DiscPoint::<f64>::origin()), x());

        let beta = c(0.5 * 3f64.ln(), 0.0);
        let y = OrbitPoint::from_group(&exp_offdiag(beta)).unwrap();
        let z = fiber_to_disc(&y).unwrap();
        assert!((z.z() - c(0.5, 0.0)).norm() < 1e-12);

        let half = DiscPoint::new(c(0.5, 0.0)).unwrap();
        let b = disc_beta(&half);
        assert!((b - beta).norm() < 1e-15);
        assert!((exp_offdiag(b).a11.re - 2.0 / 3f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn disc_roundtrip_grid() {
        for i in 0..50 {
            let r = 0.95 * (i as f64 + 0.5) / 50.0;
            let theta = i as f64 * 2.399963;
            let z = DiscPoint::from_polar(r, theta).unwrap();
            let back = fiber_to_disc(&disc_to_fiber(&z)).unwrap();
            assert!((back.z() - z.z()).norm() < 1e-12, "r = {r}");
        }
    }

    #[test]
    fn fiber_to_disc_rejects_off_fiber() {
        let y = OrbitPoint::from_group(&sample::su2::<f64, _>(&mut ChaCha8Rng::seed_from_u64(1))).unwrap();
        assert!(matches!(fiber_to_disc(&y), Err(Error::NotInFiber { .. })));
    }

    #[test]
    fn disc_rejects_boundary() {
        assert!(matches!(DiscPoint::new(c(1.0, 0.0)), Err(Error::OutsideDisc { .. })));
        assert!(DiscPoint::new(c(0.6, 0.79)).is_ok());
    }

    #[test]
    fn moebius_examples() {
        let z = DiscPoint::new(c(0.3, -0.4)).unwrap();
        assert_eq!(moebius(&Mat2C::identity(), &z).unwrap(), z);

        let h = exp_offdiag(c(0.6, 0.2));
        let w = moebius(&h, &DiscPoint::origin()).unwrap();
        assert!((w.z() - h.a12 / h.a11.conj()).norm() < 1e-15);

        assert!(matches!(moebius(&Mat2C::from_real(2.0, 0.0, 0.0, 0.5), &z), Err(Error::NotSU11 { .. })));
    }

    #[test]
    fn moebius_is_an_action() {
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        for _ in 0..50 {
            let h1 = sample::su11::<f64, _>(&mut rng, 1.5);
            let h2 = sample::su11::<f64, _>(&mut rng, 1.5);
            let z = DiscPoint::new(sample::disc::<f64, _>(&mut rng, 0.9)).unwrap();
            let lhs = moebius(&(h1 * h2), &z).unwrap();
            let rhs = moebius(&h1, &moebius(&h2, &z).unwrap()).unwrap();
            assert!((lhs.z() - rhs.z()).norm() < 1e-10);
        }
    }

    #[test]
    fn disc_map_intertwines_on_im_slice() {
        let mut rng = ChaCha8Rng::seed_from_u64(15);
        for _ in 0..50 {
            let h = exp_offdiag(sample::beta::<f64, _>(&mut rng, 2.0));
            let lhs = fiber_to_disc(&x().conjugate(&h).unwrap()).unwrap();
            let rhs = moebius(&h, &fiber_to_disc(&x()).unwrap()).unwrap();
            assert!((lhs.z() - rhs.z()).norm() < 1e-10);
        }
    }

    #[test]
    fn disc_map_intertwines_full_su11() {
        let mut rng = ChaCha8Rng::seed_from_u64(16);
        for _ in 0..50 {
            let h = sample::su11::<f64, _>(&mut rng, 1.2);
            let z = DiscPoint::new(sample::disc::<f64, _>(&mut rng, 0.8)).unwrap();
            let y = disc_to_fiber(&z);
            let lhs = fiber_to_disc(&y.conjugate(&h).unwrap()).unwrap();
            let rhs = moebius(&h, &z).unwrap();
            assert!((lhs.z() - rhs.z()).norm() < 1e-9);
        }
    }

    #[test]
    fn tangent_from_value_recovers_generator_action() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..20 {
            let y = OrbitPoint::from_group(&sample::sl2c::<f64, _>(&mut rng)).unwrap();
            let xi = Mat2C::new(
                sample::complex_normal(&mut rng),
                sample::complex_normal(&mut rng),
                sample::complex_normal(&mut rng),
                sample::complex_normal(&mut rng),
            );
            let v = TangentVec::new(y, xi);
            assert!(v.consistency_residual() < 1e-12);
            let w = TangentVec::from_value(y, v.value);
            assert!(w.value.dist(&v.value) < 1e-10 * v.value.max_norm().max(1.0));
        }
    }
}
