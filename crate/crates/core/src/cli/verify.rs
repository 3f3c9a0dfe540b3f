//! The invariant suite behind `hkorbit verify`.

use std::fmt::Write;

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::hk::{
    apply_i, frame_by_curves, frame_through_quotient, induced_j, kahler_potential, kks, metric_g, omega1_explicit,
    omega1_numeric_in, omega_c, omega_k, pushforward_pi_step, tilde_frame, EigenChart, GeneratorFrame, Structure,
    StructureConfig,
};
use crate::lie::{
    ad_x_apply, base_point, curvature_constant, m_element, pairing, split_components, AlgElement, ALPHA_CURV,
};
use crate::mat2::{bracket, eigenlines, exp_offdiag, line_distance, svd2, Mat2C, Mat2R};
use crate::mostow::{mostow_decompose, polar_su11, GramInvariants};
use crate::orbit::{
    disc_to_fiber, fiber_to_disc, moebius, phi, phi_inv, project_pi, project_via, projection, realize, DiscPoint,
    OrbitPoint, TangentVec,
};
use crate::sample;

use super::figure::{emit_svg, FigureSpec};
use super::json::{matrix_from_json, matrix_to_json, JsonMatrix};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Bound {
    AtMost(f64),
    AtLeast(f64),
    /// Printed for information, never fails.
    Report,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub module: &'static str,
    pub property: String,
    pub value: f64,
    pub bound: Bound,
    pub passed: bool,
    pub note: Option<String>,
}

pub struct SuiteOptions {
    pub seed: u64,
    pub tolerance_scale: f64,
    pub config: StructureConfig<f64>,
}

struct Suite {
    opts: SuiteOptions,
    results: Vec<CheckResult>,
}

impl Suite {
    fn check<F>(&mut self, module: &'static str, property: &str, bound: Bound, f: F)
    where
        F: FnOnce(&mut ChaCha8Rng, &StructureConfig<f64>) -> Result<f64>,
    {
        let stream = self.results.len() as u64;
        let mut rng = ChaCha8Rng::seed_from_u64(self.opts.seed.wrapping_add(stream.wrapping_mul(0x9E37_79B9)));
        let bound = match bound {
            Bound::AtMost(t) => Bound::AtMost(t * self.opts.tolerance_scale),
            b => b,
        };
        let (value, note) = match f(&mut rng, &self.opts.config) {
            Ok(v) => (v, None),
            Err(e) => (f64::NAN, Some(e.to_string())),
        };
        let passed = note.is_none()
            && match bound {
                Bound::AtMost(t) => value <= t,
                Bound::AtLeast(t) => value >= t,
                Bound::Report => true,
            };
        self.results.push(CheckResult { module, property: property.to_string(), value, bound, passed, note });
    }
}

fn max_of<I: IntoIterator<Item = Result<f64>>>(it: I) -> Result<f64> {
    let mut m = 0.0f64;
    for v in it {
        m = m.max(v?);
    }
    Ok(m)
}

fn sl2c(rng: &mut ChaCha8Rng) -> Mat2C<f64> {
    sample::sl2c(rng)
}

fn orbit_point(rng: &mut ChaCha8Rng) -> Result<OrbitPoint<f64>> {
    OrbitPoint::from_group(&sl2c(rng))
}

fn fiber_point(rng: &mut ChaCha8Rng) -> OrbitPoint<f64> {
    disc_to_fiber(&DiscPoint::new(sample::disc(rng, 0.8)).expect("sampled inside the disc"))
}

fn traceless(rng: &mut ChaCha8Rng) -> Mat2C<f64> {
    let m = Mat2C::new(
        sample::complex_normal(rng),
        sample::complex_normal(rng),
        sample::complex_normal(rng),
        sample::complex_normal(rng),
    );
    m - Mat2C::identity().scale(m.trace() * 0.5)
}

/// Frame at `y` rescaled to unit max-norm tangent values.
fn unit_basis(y: &OrbitPoint<f64>) -> Result<[TangentVec<f64>; 4]> {
    Ok(GeneratorFrame::at(y)?.basis().map(|v| v.scale(1.0 / v.value.max_norm())))
}

/// Direction pair `(u, iu + w)`: `ω₁(u, iu)` is definite, so the ratio
/// of the two forms stays away from 0/0.
fn ddc_pair(rng: &mut ChaCha8Rng) -> ([Complex<f64>; 2], [Complex<f64>; 2]) {
    let u = [sample::complex_normal(rng), sample::complex_normal(rng)];
    let w: [Complex<f64>; 2] = [sample::complex_normal(rng), sample::complex_normal(rng)];
    (u, [u[0] * Complex::i() + w[0] * 0.5, u[1] * Complex::i() + w[1] * 0.5])
}

fn figure_grid() -> Vec<DiscPoint<f64>> {
    FigureSpec::default().grid()
}

fn min_cholesky_pivot(g: &[[f64; 4]; 4]) -> f64 {
    let mut l = [[0.0; 4]; 4];
    let mut min_pivot = f64::INFINITY;
    for i in 0..4 {
        for j in 0..=i {
            let s: f64 = (0..j).map(|k| l[i][k] * l[j][k]).sum();
            if i == j {
                let d = g[i][i] - s;
                min_pivot = min_pivot.min(d);
                if d <= 0.0 {
                    return d;
                }
                l[i][j] = d.sqrt();
            } else {
                l[i][j] = (g[i][j] - s) / l[j][j];
            }
        }
    }
    min_pivot
}

fn spread(values: &[f64]) -> (f64, f64) {
    let mean = values.iter().sum::<f64>() / values.len() as f64;
    let dev = values.iter().map(|v| (v - mean).abs()).fold(0.0, f64::max);
    (mean, dev / mean.abs())
}

pub fn run_suite(opts: SuiteOptions) -> Vec<CheckResult> {
    let mut s = Suite { opts, results: Vec::new() };
    mat2_checks(&mut s);
    lie_checks(&mut s);
    mostow_checks(&mut s);
    orbit_checks(&mut s);
    hk_checks(&mut s);
    cli_checks(&mut s);
    s.results
}

fn mat2_checks(s: &mut Suite) {
    s.check("mat2", "exp_offdiag(b)exp_offdiag(-b) = I, |b| <= 5, residual / cosh^2|b|", Bound::AtMost(1e-15), |rng, _| {
        max_of((0..200).map(|_| {
            let b = sample::beta::<f64, _>(rng, 5.0);
            Ok((exp_offdiag(b) * exp_offdiag(-b)).dist(&Mat2C::identity()) / b.norm().cosh().powi(2))
        }))
    });
    s.check("mat2", "det exp_offdiag(b) = 1, |b| <= 5, residual / cosh^2|b|", Bound::AtMost(1e-15), |rng, _| {
        max_of((0..200).map(|_| {
            let b = sample::beta::<f64, _>(rng, 5.0);
            Ok((exp_offdiag(b).det() - 1.0).norm() / b.norm().cosh().powi(2))
        }))
    });
    s.check("mat2", "eigenlines(Ad(u)y) = u.eigenlines(y), u in SU(2)", Bound::AtMost(1e-10), |rng, _| {
        max_of((0..100).map(|_| {
            let y = orbit_point(rng)?;
            let u = sample::su2::<f64, _>(rng);
            let before = eigenlines(y.value())?;
            let after = eigenlines(&y.value().conjugated_by(&u))?;
            Ok(line_distance(&after.l1, &u.mul_vec(&before.l1)).max(line_distance(&after.l2, &u.mul_vec(&before.l2))))
        }))
    });
    s.check("mat2", "svd2 reconstruction, 1e4 matrices in [-10,10]", Bound::AtMost(1e-12), |rng, _| {
        max_of((0..10_000).map(|_| {
            let m = Mat2R::new(
                rng.random_range(-10.0..10.0),
                rng.random_range(-10.0..10.0),
                rng.random_range(-10.0..10.0),
                rng.random_range(-10.0..10.0),
            );
            Ok(svd2(&m).reconstruct().dist(&m))
        }))
    });
}

fn lie_checks(s: &mut Suite) {
    s.check("lie", "curvature constant alpha_curv = 2", Bound::AtMost(1e-12), |_, _| {
        Ok((curvature_constant::<f64>() - ALPHA_CURV).abs())
    });
    s.check("lie", "((1/2) ad_x)^2 = -id on m", Bound::AtMost(1e-12), |rng, _| {
        max_of((0..50).map(|_| {
            let m = AlgElement::new(m_element(sample::complex_normal(rng)))?;
            let twice = ad_x_apply(&ad_x_apply(&m));
            Ok((twice.value().scale_re(0.25) + *m.value()).max_norm() / m.value().max_norm())
        }))
    });
    s.check("lie", "split_components idempotent and linear", Bound::AtMost(1e-12), |rng, _| {
        max_of((0..50).map(|_| {
            let a = AlgElement::new(traceless(rng))?;
            let b = AlgElement::new(traceless(rng))?;
            let t: f64 = rng.random_range(-3.0..3.0);
            let sa = split_components(&a);
            let again = split_components(&sa.m);
            let idem = again.m.value().dist(sa.m.value())
                .max(again.t.value().max_norm())
                .max(again.it.value().max_norm())
                .max(again.im.value().max_norm());
            let sum = split_components(&AlgElement::new(*a.value() + b.value().scale_re(t))?);
            let sb = split_components(&b);
            let lin = sum.sum().dist(&(sa.sum() + sb.sum().scale_re(t)))
                .max(sum.im.value().dist(&(*sa.im.value() + sb.im.value().scale_re(t))));
            Ok(idem.max(lin).max(sa.sum().dist(a.value())))
        }))
    });
    s.check("lie", "pairing(a,b) = conj(pairing(b,a))", Bound::AtMost(1e-12), |rng, _| {
        max_of((0..50).map(|_| {
            let (a, b) = (traceless(rng), traceless(rng));
            let ab = pairing(&a, &b);
            Ok((ab - pairing(&b, &a).conj()).norm() / ab.norm().max(1.0))
        }))
    });
    s.check("lie", "pairing(x, x) = 8", Bound::AtMost(1e-15), |_, _| {
        let x = base_point::<f64>();
        Ok((pairing(&x, &x) - 8.0).norm())
    });
}

fn mostow_checks(s: &mut Suite) {
    s.check("mostow", "||k f e - g||_max, 1e3 samples", Bound::AtMost(1e-10), |rng, _| {
        max_of((0..1000).map(|_| {
            let g = sl2c(rng);
            Ok(mostow_decompose(&g)?.reconstruction_residual(&g))
        }))
    });
    s.check("mostow", "||e f^2 e - g^H g||_max, 1e3 samples", Bound::AtMost(1e-10), |rng, _| {
        max_of((0..1000).map(|_| {
            let g = sl2c(rng);
            Ok(mostow_decompose(&g)?.gram_residual(&g))
        }))
    });
    s.check("mostow", "k in SU(2), f Hermitian unimodular, e positive diagonal", Bound::AtMost(1e-10), |rng, _| {
        max_of((0..1000).map(|_| {
            let m = mostow_decompose(&sl2c(rng))?;
            let f_res = m.f.dist(&m.f.adjoint()).max((m.f.det() - 1.0).norm()).max((m.f.a11 - m.f.a22).norm());
            let e_res = (m.e.a11.re - m.mostow_alpha).abs() + m.e.a11.im.abs() + m.e.a12.norm() + m.e.a21.norm();
            let alpha_ok = if m.mostow_alpha > 0.0 { 0.0 } else { 1.0 };
            Ok(m.unitarity_residual().max(f_res).max(e_res).max(alpha_ok))
        }))
    });
    s.check("mostow", "cosh^2 2|b| - sinh^2 2|b| = 1 (relative)", Bound::AtMost(1e-10), |rng, _| {
        max_of((0..1000).map(|_| {
            let inv = GramInvariants::of(&sl2c(rng));
            let c = inv.cosh_2beta();
            Ok((c * c - inv.sinh_2beta().powi(2) - 1.0).abs() / (c * c))
        }))
    });
    s.check("mostow", "decompose(k f e) returns the same factors", Bound::AtMost(1e-9), |rng, _| {
        max_of((0..200).map(|_| {
            let m = mostow_decompose(&sl2c(rng))?;
            let again = mostow_decompose(&m.product())?;
            Ok(again.k.dist(&m.k).max(again.f.dist(&m.f)).max(again.e.dist(&m.e)))
        }))
    });
    s.check("mostow", "decompose(u g).k = u decompose(g).k", Bound::AtMost(1e-10), |rng, _| {
        max_of((0..100).map(|_| {
            let g = sl2c(rng);
            let u = sample::su2::<f64, _>(rng);
            Ok(mostow_decompose(&(u * g))?.k.dist(&(u * mostow_decompose(&g)?.k)))
        }))
    });
    s.check("mostow", "polar_su11 recovers (b, theta)", Bound::AtMost(1e-10), |rng, _| {
        max_of((0..50).map(|_| {
            let b = sample::beta::<f64, _>(rng, 2.0);
            let th: f64 = rng.random_range(-3.0..3.0);
            let h = exp_offdiag(b) * Mat2C::diag(Complex::from_polar(1.0, th), Complex::from_polar(1.0, -th));
            let pd = polar_su11(&h)?;
            Ok((pd.beta - b).norm().max((pd.theta - th).abs()).max((pd.p * pd.u).dist(&h)))
        }))
    });
}

fn orbit_checks(s: &mut Suite) {
    s.check("orbit", "pi is the identity on the zero section", Bound::AtMost(1e-9), |rng, _| {
        max_of((0..50).map(|_| {
            let z = OrbitPoint::from_group(&sample::su2::<f64, _>(rng))?;
            Ok(project_pi(&z)?.dist(&z))
        }))
    });
    s.check("orbit", "pi(Ad(exp_offdiag(b))x) = x, 50 b", Bound::AtMost(1e-9), |rng, _| {
        max_of((0..50).map(|_| {
            let y = OrbitPoint::from_group(&exp_offdiag(sample::beta::<f64, _>(rng, 2.5)))?;
            Ok(project_pi(&y)?.dist(&OrbitPoint::base()))
        }))
    });
    s.check("orbit", "pi(Ad(u)y) = Ad(u)pi(y), 100 samples", Bound::AtMost(1e-9), |rng, _| {
        max_of((0..100).map(|_| {
            let y = orbit_point(rng)?;
            let u = sample::su2::<f64, _>(rng);
            Ok(project_pi(&y.conjugate(&u)?)?.dist(&project_pi(&y)?.conjugate(&u)?))
        }))
    });
    s.check("orbit", "pi independent of the realization gauge", Bound::AtMost(1e-9), |rng, _| {
        max_of((0..50).map(|_| {
            let y = orbit_point(rng)?;
            let ph: f64 = rng.random_range(-3.0..3.0);
            let sg = Mat2C::diag(Complex::from_polar(1.0, ph), Complex::from_polar(1.0, -ph));
            Ok(project_via(&(realize(&y)? * sg))?.point.dist(&project_pi(&y)?))
        }))
    });
    s.check("orbit", "pi(y) has the +i eigenline k e1", Bound::AtMost(1e-10), |rng, _| {
        max_of((0..50).map(|_| {
            let pr = projection(&orbit_point(rng)?)?;
            Ok(line_distance(&eigenlines(pr.point.value())?.l1, &pr.factors.k.column(0)))
        }))
    });
    s.check("orbit", "phi(phi_inv(y)) = y, 100 samples", Bound::AtMost(1e-9), |rng, _| {
        max_of((0..100).map(|_| {
            let y = orbit_point(rng)?;
            let (z, v) = phi_inv(&y)?;
            Ok(phi(&z, &v)?.dist(&y))
        }))
    });
    s.check("orbit", "pi(phi(z, v)) = z, 100 samples", Bound::AtMost(1e-9), |rng, _| {
        max_of((0..100).map(|_| {
            let g = sample::su2::<f64, _>(rng);
            let z = OrbitPoint::from_group(&g)?;
            let v = TangentVec::new(z, m_element(sample::complex_normal::<f64, _>(rng)).conjugated_by(&g));
            Ok(project_pi(&phi(&z, &v)?)?.dist(&z))
        }))
    });
    s.check("orbit", "phi(Ad(u)z, Ad(u)v) = Ad(u)phi(z, v)", Bound::AtMost(1e-9), |rng, _| {
        max_of((0..50).map(|_| {
            let g = sample::su2::<f64, _>(rng);
            let z = OrbitPoint::from_group(&g)?;
            let v = TangentVec::new(z, m_element(sample::complex_normal::<f64, _>(rng)).conjugated_by(&g));
            let u = sample::su2::<f64, _>(rng);
            let zu = z.conjugate(&u)?;
            let vu = TangentVec::new(zu, v.generator.conjugated_by(&u));
            Ok(phi(&zu, &vu)?.dist(&phi(&z, &v)?.conjugate(&u)?))
        }))
    });
    s.check("orbit", "fiber_to_disc(disc_to_fiber(Z)) = Z, 50 points", Bound::AtMost(1e-12), |rng, _| {
        max_of((0..50).map(|_| {
            let z = DiscPoint::new(sample::disc::<f64, _>(rng, 0.9))?;
            Ok((fiber_to_disc(&disc_to_fiber(&z))?.z() - z.z()).norm())
        }))
    });
    s.check("orbit", "b = (1/2) ln 3 maps to Z = 0.5", Bound::AtMost(1e-12), |_, _| {
        let y = OrbitPoint::from_group(&exp_offdiag(Complex::new(0.5 * 3f64.ln(), 0.0)))?;
        Ok((fiber_to_disc(&y)?.z() - 0.5).norm())
    });
    s.check("orbit", "fiber_to_disc(Ad(h)x) = moebius(h, 0), h in exp(im)", Bound::AtMost(1e-10), |rng, _| {
        max_of((0..50).map(|_| {
            let h = exp_offdiag(sample::beta::<f64, _>(rng, 2.0));
            let lhs = fiber_to_disc(&OrbitPoint::from_group(&h)?)?;
            Ok((lhs.z() - moebius(&h, &DiscPoint::origin())?.z()).norm())
        }))
    });
    s.check("orbit", "fiber_to_disc(Ad(h)y) = moebius(h, Z), h in SU(1,1)", Bound::AtMost(1e-9), |rng, _| {
        max_of((0..50).map(|_| {
            let h = sample::su11::<f64, _>(rng, 1.2);
            let z = DiscPoint::new(sample::disc::<f64, _>(rng, 0.8))?;
            let lhs = fiber_to_disc(&disc_to_fiber(&z).conjugate(&h)?)?;
            Ok((lhs.z() - moebius(&h, &z)?.z()).norm())
        }))
    });
}

fn hk_checks(s: &mut Suite) {
    s.check("hk", "K(x) = 8 alpha (relative)", Bound::AtMost(1e-12), |_, cfg| {
        let a = cfg.alpha_potential();
        Ok((kahler_potential(&OrbitPoint::base(), cfg)? - 8.0 * a).abs() / (8.0 * a))
    });
    s.check("hk", "K on the fiber = 8 alpha cosh 2|b| (relative)", Bound::AtMost(1e-9), |rng, cfg| {
        max_of((0..50).map(|_| {
            let b = sample::beta::<f64, _>(rng, 2.0);
            let want = 8.0 * cfg.alpha_potential() * (2.0 * b.norm()).cosh();
            Ok((kahler_potential(&OrbitPoint::from_group(&exp_offdiag(b))?, cfg)? - want).abs() / want)
        }))
    });
    s.check("hk", "K(Ad(u)y) = K(y) (relative)", Bound::AtMost(1e-9), |rng, cfg| {
        max_of((0..50).map(|_| {
            let y = orbit_point(rng)?;
            let u = sample::su2::<f64, _>(rng);
            let k = kahler_potential(&y, cfg)?;
            Ok((kahler_potential(&y.conjugate(&u)?, cfg)? - k).abs() / k.abs())
        }))
    });
    s.check("hk", "pushforward_pi: error ratio on halving a large step", Bound::AtLeast(4.0), |rng, _| {
        let mut worst = f64::INFINITY;
        for _ in 0..10 {
            let y = orbit_point(rng)?;
            let d = m_element(sample::complex_normal::<f64, _>(rng));
            let exact = bracket(&d, project_pi(&y)?.value());
            let v = TangentVec::new(y, d);
            let e1 = pushforward_pi_step(&v, 0.2)?.value.dist(&exact);
            let e2 = pushforward_pi_step(&v, 0.1)?.value.dist(&exact);
            worst = worst.min(e1 / e2);
        }
        Ok(worst)
    });

    let quaternion = |s: &mut Suite, name: &str, f: fn(&TangentVec<f64>) -> Result<Mat2C<f64>>| {
        s.check("hk", name, Bound::AtMost(1e-10), |rng, _| {
            let mut worst = 0.0f64;
            for _ in 0..20 {
                for v in unit_basis(&fiber_point(rng))? {
                    worst = worst.max(f(&v)?.max_norm());
                }
            }
            Ok(worst)
        });
    };
    quaternion(s, "I2^2 = -id at fiber points", |v| {
        Ok(apply_i(Structure::I2, &apply_i(Structure::I2, v)?)?.value + v.value)
    });
    quaternion(s, "I3^2 = -id at fiber points", |v| {
        Ok(apply_i(Structure::I3, &apply_i(Structure::I3, v)?)?.value + v.value)
    });
    quaternion(s, "I1 I2 + I2 I1 = 0 at fiber points", |v| {
        Ok(apply_i(Structure::I1, &apply_i(Structure::I2, v)?)?.value
            + apply_i(Structure::I2, &apply_i(Structure::I1, v)?)?.value)
    });
    quaternion(s, "I1 I2 I3 = -id at fiber points", |v| {
        let i3 = apply_i(Structure::I3, v)?;
        Ok(apply_i(Structure::I1, &apply_i(Structure::I2, &i3)?)?.value + v.value)
    });

    s.check("hk", "omega_k(X, X) = 0, k = 1,2,3", Bound::AtMost(1e-8), |rng, cfg| {
        let mut worst = 0.0f64;
        for _ in 0..20 {
            for v in unit_basis(&fiber_point(rng))? {
                for k in Structure::ALL {
                    worst = worst.max(omega_k(k, &v, &v, cfg)?.abs());
                }
            }
        }
        Ok(worst)
    });
    s.check("hk", "omega1 = g(., I1 .) at fiber points", Bound::AtMost(1e-8), |rng, cfg| {
        let mut worst = 0.0f64;
        for _ in 0..20 {
            let basis = unit_basis(&fiber_point(rng))?;
            for a in &basis {
                for b in &basis {
                    let w = omega1_explicit(a, b, cfg)?;
                    worst = worst.max((w - omega_k(Structure::I1, a, b, cfg)?).abs());
                }
            }
        }
        Ok(worst)
    });
    s.check("hk", "metric_c in use", Bound::Report, |_, cfg| Ok(cfg.metric_c()));
    s.check("hk", "metric_g definite: min Cholesky pivot of sign(c) Gram", Bound::AtLeast(1e-9), |rng, cfg| {
        let sign = cfg.metric_c().signum();
        let mut worst = f64::INFINITY;
        for _ in 0..20 {
            let basis = unit_basis(&fiber_point(rng))?;
            let mut g = [[0.0; 4]; 4];
            for i in 0..4 {
                for j in 0..4 {
                    g[i][j] = sign * metric_g(&basis[i], &basis[j], cfg)?;
                }
            }
            worst = worst.min(min_cholesky_pivot(&g));
        }
        Ok(worst)
    });
    s.check("hk", "omega_C(I1 X, Y) = i omega_C(X, Y)", Bound::AtMost(1e-8), |rng, cfg| {
        let mut worst = 0.0f64;
        for _ in 0..20 {
            let y = fiber_point(rng);
            let a = TangentVec::new(y, traceless(rng));
            let b = TangentVec::new(y, traceless(rng));
            let (a, b) = (a.scale(1.0 / a.value.max_norm()), b.scale(1.0 / b.value.max_norm()));
            let lhs = omega_c(&a.times_i(), &b, cfg)?;
            worst = worst.max((lhs - omega_c(&a, &b, cfg)? * Complex::i()).norm());
        }
        Ok(worst)
    });
    let mut kks_ratios = Vec::new();
    s.check("hk", "KKS / omega_C relative spread over 20 pairs", Bound::Report, |rng, cfg| {
        for _ in 0..20 {
            let y = fiber_point(rng);
            let a = TangentVec::new(y, traceless(rng));
            let b = TangentVec::new(y, traceless(rng));
            kks_ratios.push(kks(&a, &b)? / omega_c(&a, &b, cfg)?);
        }
        let mean = kks_ratios.iter().sum::<Complex<f64>>() / kks_ratios.len() as f64;
        Ok(kks_ratios.iter().map(|r| (r - mean).norm()).fold(0.0, f64::max) / mean.norm())
    });
    let mut ddc_ratios = Vec::new();
    s.check("hk", "omega1_numeric / omega1_explicit relative spread, |Z| <= 0.8", Bound::AtMost(1e-3), |rng, cfg| {
        for _ in 0..20 {
            let y = fiber_point(rng).conjugate(&sample::su2(rng))?;
            let chart = EigenChart::at(&y)?;
            let (u, v) = ddc_pair(rng);
            let num = omega1_numeric_in(&chart, &u, &v, cfg)?;
            ddc_ratios.push(num / omega1_explicit(&chart.tangent(&u)?, &chart.tangent(&v)?, cfg)?);
        }
        Ok(spread(&ddc_ratios).1)
    });
    let ddc_mean = if ddc_ratios.is_empty() { f64::NAN } else { spread(&ddc_ratios).0 };
    s.check("hk", "omega1_numeric / omega1_explicit constant", Bound::Report, |_, _| Ok(ddc_mean));

    s.check("hk", "tilde_frame vs curve derivatives, 20 Z", Bound::AtMost(1e-6), |rng, _| {
        max_of((0..20).map(|_| {
            let z = DiscPoint::new(sample::disc::<f64, _>(rng, 0.9))?;
            let (a, b) = tilde_frame(&z);
            let (ca, cb) = frame_by_curves(&z, 1e-3);
            Ok((a - ca).norm().max((b - cb).norm()))
        }))
    });
    s.check("hk", "tilde_frame vs pushforward through fiber_to_disc", Bound::AtMost(1e-6), |rng, _| {
        max_of((0..20).map(|_| {
            let z = DiscPoint::new(sample::disc::<f64, _>(rng, 0.9))?;
            let (a, b) = tilde_frame(&z);
            let (qa, qb) = frame_through_quotient(&z, 1e-4)?;
            Ok((a - qa).norm().max((b - qb).norm()))
        }))
    });
    s.check("hk", "tilde_frame(0) = (i, 1)", Bound::AtMost(1e-15), |_, _| {
        let (a, b) = tilde_frame(&DiscPoint::<f64>::origin());
        Ok((a - Complex::i()).norm().max((b - 1.0).norm()))
    });
    s.check("hk", "J^2 = -id on the figure grid", Bound::AtMost(1e-10), |_, _| {
        max_of(figure_grid().iter().map(|z| Ok(induced_j(z).square_residual())))
    });
    s.check("hk", "J(0) = [[0,1],[-1,0]]", Bound::AtMost(1e-15), |_, _| {
        Ok(induced_j(&DiscPoint::<f64>::origin()).j_matrix.dist(&Mat2R::new(0.0, 1.0, -1.0, 0.0)))
    });
    s.check("hk", "min ||J(Z) - J0||_max on the figure grid", Bound::AtLeast(0.1), |_, _| {
        Ok(figure_grid().iter().map(|z| induced_j(z).distance_from_standard()).fold(f64::INFINITY, f64::min))
    });
}

fn cli_checks(s: &mut Suite) {
    s.check("cli", "decompose JSON roundtrip reproduces factors", Bound::AtMost(1e-9), |rng, _| {
        max_of((0..50).map(|_| {
            let m = mostow_decompose(&sl2c(rng))?;
            let text = serde_json::to_string(&[matrix_to_json(&m.k), matrix_to_json(&m.f), matrix_to_json(&m.e)])
                .expect("finite matrices serialize");
            let back: [JsonMatrix; 3] = serde_json::from_str(&text).expect("own output parses");
            let [k, f, e] = [matrix_from_json(&back[0])?, matrix_from_json(&back[1])?, matrix_from_json(&back[2])?];
            let again = mostow_decompose(&(k * f * e))?;
            Ok(again.k.dist(&m.k).max(again.f.dist(&m.f)).max(again.e.dist(&m.e)))
        }))
    });
    s.check("cli", "figure defaults: ellipse count - 49", Bound::AtMost(0.0), |_, _| {
        let spec = FigureSpec::default();
        let svg = emit_svg(&spec.glyphs(), &spec);
        Ok((svg.matches("<ellipse ").count() as f64 - 49.0).abs())
    });
    s.check("cli", "figure output identical across runs (differing bytes)", Bound::AtMost(0.0), |_, _| {
        let spec = FigureSpec::default();
        let a = emit_svg(&spec.glyphs(), &spec);
        let b = emit_svg(&spec.glyphs(), &spec);
        Ok(a.bytes().zip(b.bytes()).filter(|(x, y)| x != y).count() as f64 + (a.len() as f64 - b.len() as f64).abs())
    });
    s.check("cli", "figure axis ratio (1+r^2)/(1-r^2) along theta = 0", Bound::AtMost(1e-10), |_, _| {
        let spec = FigureSpec::default();
        max_of(spec.glyphs().iter().filter(|g| g.center.z().im == 0.0 && g.center.z().re >= 0.0).map(|g| {
            let r = g.center.r();
            Ok((g.aspect_ratio() - (1.0 + r * r) / (1.0 - r * r)).abs())
        }))
    });
}

pub fn all_passed(results: &[CheckResult]) -> bool {
    results.iter().all(|r| r.passed)
}

pub fn render_table(results: &[CheckResult]) -> String {
    let width = results.iter().map(|r| r.property.len()).max().unwrap_or(8).max(8);
    let mut out = String::new();
    let _ = writeln!(out, "{:<7} {:<width$} {:>12} {:>12}  status", "module", "property", "value", "bound");
    for r in results {
        let bound = match r.bound {
            Bound::AtMost(t) => format!("<= {t:.1e}"),
            Bound::AtLeast(t) => format!(">= {t:.1e}"),
            Bound::Report => "-".to_string(),
        };
        let status = match (r.bound, r.passed) {
            (Bound::Report, true) => "info",
            (_, true) => "PASS",
            (_, false) => "FAIL",
        };
        let _ = write!(out, "{:<7} {:<width$} {:>12.4e} {:>12}  {status}", r.module, r.property, r.value, bound);
        if let Some(n) = &r.note {
            let _ = write!(out, "  ({n})");
        }
        out.push('\n');
    }
    let checked: Vec<_> = results.iter().filter(|r| r.bound != Bound::Report).collect();
    let passed = checked.iter().filter(|r| r.passed).count();
    let _ = writeln!(out, "{passed}/{} checks passed", checked.len());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts(seed: u64, tolerance_scale: f64) -> SuiteOptions {
        SuiteOptions { seed, tolerance_scale, config: StructureConfig::standard() }
    }

    #[test]
    fn default_suite_passes_and_is_seeded() {
        let a = run_suite(opts(3, 1.0));
        assert!(all_passed(&a), "{}", render_table(&a));
        assert_eq!(a, run_suite(opts(3, 1.0)));
        for module in ["mat2", "lie", "mostow", "orbit", "hk", "cli"] {
            assert!(a.iter().any(|r| r.module == module));
        }
    }

    #[test]
    fn tolerance_scale_tightens_upper_bounds_only() {
        let r = run_suite(opts(0, 0.0));
        assert!(!all_passed(&r));
        assert!(r.iter().filter(|c| matches!(c.bound, Bound::AtLeast(_) | Bound::Report)).all(|c| c.passed));
        let table = render_table(&r);
        assert!(table.contains("FAIL") && table.lines().last().unwrap().ends_with("checks passed"));
    }
}
