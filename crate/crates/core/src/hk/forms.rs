use num_complex::Complex;

use crate::error::{Error, Result};
use crate::lie::{killing, pairing};
use crate::mat2::{bracket, exp_traceless, Mat2C};
use crate::orbit::{fiber_distance, project_pi, OrbitPoint, TangentVec};
use crate::scalar::Scalar;

use super::config::StructureConfig;
use super::frame::GeneratorFrame;

/// One of the three complex structures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Structure {
    I1,
    I2,
    I3,
}

impl Structure {
    pub const ALL: [Structure; 3] = [Structure::I1, Structure::I2, Structure::I3];

    pub fn index(self) -> u8 {
        match self {
            Structure::I1 => 1,
            Structure::I2 => 2,
            Structure::I3 => 3,
        }
    }

    pub fn from_index(k: u8) -> Option<Self> {
        match k {
            1 => Some(Structure::I1),
            2 => Some(Structure::I2),
            3 => Some(Structure::I3),
            _ => None,
        }
    }
}

/// `π_*X` by a central difference of `t ↦ π(Ad(exp(tξ))y)` with one
/// Richardson level, step `cfg.fd_step`.
pub fn pushforward_pi<T: Scalar>(v: &TangentVec<T>, cfg: &StructureConfig<T>) -> Result<TangentVec<T>> {
    pushforward_pi_step(v, cfg.fd_step())
}

pub fn pushforward_pi_step<T: Scalar>(v: &TangentVec<T>, h: T) -> Result<TangentVec<T>> {
    let y = v.base;
    let xi = v.generator;
    let pi_at = |t: T| -> Result<Mat2C<T>> {
        let g = exp_traceless(&xi.scale_re(t));
        Ok(*project_pi(&y.conjugate(&g)?)?.value())
    };
    let central = |s: T| -> Result<Mat2C<T>> { Ok((pi_at(s)? - pi_at(-s)?).scale_re(T::one() / (s + s))) };
    let two = T::c(2.0);
    let coarse = central(h)?;
    let fine = central(h / two)?;
    let d = (fine.scale_re(T::c(4.0)) - coarse).scale_re(T::one() / T::c(3.0));
    Ok(TangentVec::from_value(project_pi(&y)?, d))
}

/// `α·Im(⟨X^{i𝔠′}(y), π_*X^𝔡⟩ − ⟨X^{i𝔡′}(y), π_*X^𝔠⟩)` for `X = X^{𝔠+i𝔠′}`,
/// `Y = X^{𝔡+i𝔡′}`.
pub fn omega1_explicit<T: Scalar>(x: &TangentVec<T>, y: &TangentVec<T>, cfg: &StructureConfig<T>) -> Result<T> {
    x.same_base(y)?;
    let frame = GeneratorFrame::at(&x.base)?;
    omega1_in(&frame, x, y, cfg)
}

fn omega1_in<T: Scalar>(
    frame: &GeneratorFrame<T>,
    x: &TangentVec<T>,
    y: &TangentVec<T>,
    cfg: &StructureConfig<T>,
) -> Result<T> {
    let base = frame.base;
    let sx = frame.split(x)?;
    let sy = frame.split(y)?;
    let i = Complex::i();
    let push_d = pushforward_pi(&TangentVec::new(base, sy.real), cfg)?;
    let push_c = pushforward_pi(&TangentVec::new(base, sx.real), cfg)?;
    let ic1 = TangentVec::new(base, sx.imag.scale(i));
    let id1 = TangentVec::new(base, sy.imag.scale(i));
    let w = pairing(&ic1.value, &push_d.value) - pairing(&id1.value, &push_c.value);
    Ok(cfg.alpha_potential() * w.im)
}

/// `g(X^𝔠, X^𝔡) = g(X^{i𝔠}, X^{i𝔡}) = c·Re⟨X^𝔠(y), X^𝔡(π(y))⟩`, mixed terms
/// zero, extended bilinearly.
pub fn metric_g<T: Scalar>(x: &TangentVec<T>, y: &TangentVec<T>, cfg: &StructureConfig<T>) -> Result<T> {
    x.same_base(y)?;
    let frame = GeneratorFrame::at(&x.base)?;
    metric_in(&frame, x, y, cfg)
}

fn metric_in<T: Scalar>(
    frame: &GeneratorFrame<T>,
    x: &TangentVec<T>,
    y: &TangentVec<T>,
    cfg: &StructureConfig<T>,
) -> Result<T> {
    let sx = frame.split(x)?;
    let sy = frame.split(y)?;
    let at_y = |g: &Mat2C<T>| bracket(g, frame.base.value());
    let at_p = |g: &Mat2C<T>| bracket(g, frame.projection.value());
    let re = pairing(&at_y(&sx.real), &at_p(&sy.real)).re + pairing(&at_y(&sx.imag), &at_p(&sy.imag)).re;
    Ok(cfg.metric_c() * re)
}

/// `I_k X` at a point of the fiber over `x`.
pub fn apply_i<T: Scalar>(k: Structure, v: &TangentVec<T>) -> Result<TangentVec<T>> {
    if k != Structure::I1 {
        let distance = fiber_distance(&v.base)?;
        if distance > T::tol(1e-8) {
            return Err(Error::NotFiberPoint { distance: distance.as_f64() });
        }
    }
    apply_i_equivariant(k, v)
}

/// `I_k X` anywhere, with `I₂` carried off the fiber over `x` by the SU(2)
/// action.
pub fn apply_i_equivariant<T: Scalar>(k: Structure, v: &TangentVec<T>) -> Result<TangentVec<T>> {
    match k {
        Structure::I1 => Ok(v.times_i()),
        Structure::I2 => i2(&GeneratorFrame::at(&v.base)?, v),
        Structure::I3 => Ok(i2(&GeneratorFrame::at(&v.base)?, v)?.times_i()),
    }
}

// 𝔡 ↦ ½[p, 𝔡] and i𝔡 ↦ −½[p, i𝔡] on the transported m at p = π(y)
fn i2<T: Scalar>(frame: &GeneratorFrame<T>, v: &TangentVec<T>) -> Result<TangentVec<T>> {
    let c = frame.coordinates(v)?;
    let gens = frame.generators();
    let p = frame.projection.value();
    let half = T::c(0.5);
    let mut out = Mat2C::zero();
    for j in 0..2 {
        out = out + bracket(p, &gens[j]).scale_re(half * c[j]);
        out = out - bracket(p, &gens[j + 2]).scale_re(half * c[j + 2]);
    }
    Ok(TangentVec::new(frame.base, out))
}

/// `ω_k(X, Y) = g(X, I_k Y)`.
pub fn omega_k<T: Scalar>(
    k: Structure,
    x: &TangentVec<T>,
    y: &TangentVec<T>,
    cfg: &StructureConfig<T>,
) -> Result<T> {
    x.same_base(y)?;
    let frame = GeneratorFrame::at(&x.base)?;
    let iy = match k {
        Structure::I1 => y.times_i(),
        Structure::I2 => i2(&frame, y)?,
        Structure::I3 => i2(&frame, y)?.times_i(),
    };
    metric_in(&frame, x, &iy, cfg)
}

/// `ω_C = ω₂ + i·ω₃`.
pub fn omega_c<T: Scalar>(x: &TangentVec<T>, y: &TangentVec<T>, cfg: &StructureConfig<T>) -> Result<Complex<T>> {
    Ok(Complex::new(omega_k(Structure::I2, x, y, cfg)?, omega_k(Structure::I3, x, y, cfg)?))
}

/// Kirillov–Kostant–Souriau form `κ(y, [ξ_X, ξ_Y])`.
pub fn kks<T: Scalar>(x: &TangentVec<T>, y: &TangentVec<T>) -> Result<Complex<T>> {
    x.same_base(y)?;
    Ok(killing(x.base.value(), &bracket(&x.generator, &y.generator)))
}

/// Least-squares `c` with `ω₁(X, −I₁Y) = c·g₁(X, Y)` over the frame at `x`,
/// `g₁` being the metric with unit constant.
pub(crate) fn calibrate_metric_c<T: Scalar>(cfg: &StructureConfig<T>) -> Result<T> {
    let unit = cfg.with_unit_metric();
    let frame = GeneratorFrame::at(&OrbitPoint::base())?;
    let basis = frame.basis();
    let (mut num, mut den) = (T::zero(), T::zero());
    for a in &basis {
        for b in &basis {
            let w = omega1_in(&frame, a, &b.times_i().scale(-T::one()), &unit)?;
            let g = metric_in(&frame, a, b, &unit)?;
            num = num + w * g;
            den = den + g * g;
        }
    }
    Ok(num / den)
}
