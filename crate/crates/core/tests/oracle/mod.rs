//! Reference computations for the integration tests. Matrices are plain
//! `[[Complex; 2]; 2]` arrays and every formula is written out here, so the
//! checks share no code path with the library beyond type conversion.

#![allow(dead_code)]

use hkorbit::mat2::Mat2C;
use num_complex::Complex;

pub type C = Complex<f64>;
pub type M = [[C; 2]; 2];

pub const fn c(re: f64, im: f64) -> C {
    C::new(re, im)
}

pub const I: M = [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]];
pub const X: M = [[c(0.0, 1.0), c(0.0, 0.0)], [c(0.0, 0.0), c(0.0, -1.0)]];

pub fn mul(a: &M, b: &M) -> M {
    let mut r = [[c(0.0, 0.0); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    r
}

pub fn add(a: &M, b: &M) -> M {
    [[a[0][0] + b[0][0], a[0][1] + b[0][1]], [a[1][0] + b[1][0], a[1][1] + b[1][1]]]
}

pub fn sub(a: &M, b: &M) -> M {
    add(a, &scale(b, c(-1.0, 0.0)))
}

pub fn scale(a: &M, s: C) -> M {
    [[a[0][0] * s, a[0][1] * s], [a[1][0] * s, a[1][1] * s]]
}

pub fn adj(a: &M) -> M {
    [[a[0][0].conj(), a[1][0].conj()], [a[0][1].conj(), a[1][1].conj()]]
}

pub fn det(a: &M) -> C {
    a[0][0] * a[1][1] - a[0][1] * a[1][0]
}

pub fn inv(a: &M) -> M {
    let d = det(a);
    [[a[1][1] / d, -a[0][1] / d], [-a[1][0] / d, a[0][0] / d]]
}

pub fn max_abs(a: &M) -> f64 {
    a.iter().flatten().map(|z| z.norm()).fold(0.0, f64::max)
}

pub fn dist(a: &M, b: &M) -> f64 {
    max_abs(&sub(a, b))
}

/// `g·a·g⁻¹`.
pub fn ad(g: &M, a: &M) -> M {
    mul(&mul(g, a), &inv(g))
}

/// Matrix exponential by scaling and squaring of a 20-term Taylor series.
pub fn expm(a: &M) -> M {
    let n = max_abs(a);
    let mut s = 0;
    while n / f64::from(1u32 << s) > 0.25 {
        s += 1;
    }
    let b = scale(a, c(1.0 / f64::from(1u32 << s), 0.0));
    let mut term = I;
    let mut sum = I;
    for k in 1..=20 {
        term = scale(&mul(&term, &b), c(1.0 / k as f64, 0.0));
        sum = add(&sum, &term);
    }
    for _ in 0..s {
        sum = mul(&sum, &sum);
    }
    sum
}

/// `[[0, β], [β̄, 0]]`.
pub fn im_elem(beta: C) -> M {
    [[c(0.0, 0.0), beta], [beta.conj(), c(0.0, 0.0)]]
}

/// `[[0, −c̄], [c, 0]]`.
pub fn m_elem(z: C) -> M {
    [[c(0.0, 0.0), -z.conj()], [z, c(0.0, 0.0)]]
}

pub fn to_lib(a: &M) -> Mat2C<f64> {
    Mat2C::new(a[0][0], a[0][1], a[1][0], a[1][1])
}

pub fn from_lib(a: &Mat2C<f64>) -> M {
    [[a.a11, a.a12], [a.a21, a.a22]]
}

/// `SL(2,C) ∋ g = k·f·e` computed from `H = g†g`: `λ⁴ = H₁₁/H₂₂`,
/// `f = √(e⁻¹He⁻¹)` by the 2×2 formula `√A = (A + I)/√(tr A + 2)` for
/// positive unimodular `A`, then `k = g·e⁻¹·f⁻¹`.
pub struct Factors {
    pub k: M,
    pub f: M,
    pub e: M,
    pub lambda: f64,
}

pub fn factor(g: &M) -> Factors {
    let h = mul(&adj(g), g);
    let lambda = (h[0][0].re / h[1][1].re).powf(0.25);
    let e = [[c(lambda, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0 / lambda, 0.0)]];
    let e_inv = inv(&e);
    let f2 = mul(&mul(&e_inv, &h), &e_inv);
    let t = (f2[0][0] + f2[1][1]).re;
    let f = scale(&add(&f2, &I), c(1.0 / (t + 2.0).sqrt(), 0.0));
    let k = mul(&mul(g, &e_inv), &inv(&f));
    Factors { k, f, e, lambda }
}

/// Projection of `Ad(g)(x)` onto the compact orbit: `Ad(k)(x)`.
pub fn project(g: &M) -> M {
    let k = factor(g).k;
    ad(&k, &X)
}

/// Disc coordinate to fiber parameter: `β = (Z/|Z|)·artanh|Z|`.
pub fn disc_beta(z: C) -> C {
    let r = z.norm();
    if r == 0.0 {
        c(0.0, 0.0)
    } else {
        z / r * r.atanh()
    }
}

/// Haar-distributed SU(2) element from a normalized Gaussian quaternion.
pub fn su2<R: rand::Rng>(rng: &mut R) -> M {
    use rand_distr::{Distribution, StandardNormal};
    let q: [f64; 4] = std::array::from_fn(|_| StandardNormal.sample(rng));
    let n = q.iter().map(|v| v * v).sum::<f64>().sqrt();
    let a = c(q[0] / n, q[1] / n);
    let b = c(q[2] / n, q[3] / n);
    [[a, -b.conj()], [b, a.conj()]]
}

/// Standard complex Gaussian.
pub fn normal<R: rand::Rng>(rng: &mut R) -> C {
    use rand_distr::{Distribution, StandardNormal};
    c(StandardNormal.sample(rng), StandardNormal.sample(rng))
}

/// Uniform point of the disc of radius `rmax`.
pub fn disc<R: rand::Rng>(rng: &mut R, rmax: f64) -> C {
    let r = rmax * rng.random::<f64>().sqrt();
    let t = rng.random_range(0.0..std::f64::consts::TAU);
    C::from_polar(r, t)
}

/// SL(2,C) element with Gaussian entries, normalized by a square root of
/// its determinant.
pub fn sl2c<R: rand::Rng>(rng: &mut R) -> M {
    loop {
        let g = [[normal(rng), normal(rng)], [normal(rng), normal(rng)]];
        let d = det(&g);
        if d.norm() > 1e-2 {
            return scale(&g, d.sqrt().inv());
        }
    }
}
