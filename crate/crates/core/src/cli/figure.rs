//! The ellipse field of the induced structure on the disc, as SVG.

use std::f64::consts::PI;
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hk::{ellipse_glyph, EllipseGlyph};
use crate::orbit::DiscPoint;

pub const DEFAULT_RADII: [f64; 7] = [0.0, 0.2, 0.35, 0.5, 0.65, 0.8, 0.9];

/// Grid and canvas of the figure. Radius 0 is drawn once; every other
/// radius gets `angle_count` glyphs at `θ = 2πk/angle_count`, `k < angle_count`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct FigureSpec {
    pub radii: Vec<f64>,
    pub angle_count: usize,
    /// Glyph half-axes are `glyph_scale·s_j` in disc units.
    pub glyph_scale: f64,
    /// Width and height of the square canvas in pixels.
    pub canvas: f64,
}

impl Default for FigureSpec {
    fn default() -> Self {
        Self { radii: DEFAULT_RADII.to_vec(), angle_count: 8, glyph_scale: 0.035, canvas: 600.0 }
    }
}

impl FigureSpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidConfig(m));
        if self.radii.iter().any(|r| !(r.is_finite() && *r >= 0.0 && *r < 1.0)) {
            return bad(format!("radii must lie in [0, 1): {:?}", self.radii));
        }
        if self.radii.windows(2).any(|w| w[0] >= w[1]) {
            return bad(format!("radii must be strictly increasing: {:?}", self.radii));
        }
        if self.angle_count == 0 {
            return bad("angle_count must be at least 1".into());
        }
        if !(self.glyph_scale.is_finite() && self.glyph_scale > 0.0) {
            return bad(format!("glyph_scale must be > 0, got {}", self.glyph_scale));
        }
        if !(self.canvas.is_finite() && self.canvas >= 64.0) {
            return bad(format!("canvas must be at least 64 px, got {}", self.canvas));
        }
        Ok(())
    }

    pub fn grid(&self) -> Vec<DiscPoint<f64>> {
        let mut pts = Vec::new();
        for &r in &self.radii {
            if r == 0.0 {
                pts.push(DiscPoint::origin());
                continue;
            }
            for k in 0..self.angle_count {
                let theta = 2.0 * PI * k as f64 / self.angle_count as f64;
                pts.push(DiscPoint::from_polar(r, theta).expect("validated radius"));
            }
        }
        pts
    }

    pub fn glyphs(&self) -> Vec<EllipseGlyph<f64>> {
        self.grid().iter().map(|z| ellipse_glyph(z, self.glyph_scale)).collect()
    }

    fn disc_radius_px(&self) -> f64 {
        0.45 * self.canvas
    }

    /// Disc point to canvas pixel (y axis pointing down).
    pub fn to_canvas(&self, x: f64, y: f64) -> (f64, f64) {
        let c = 0.5 * self.canvas;
        let r = self.disc_radius_px();
        (c + r * x, c - r * y)
    }

    /// Canvas pixel back to disc coordinates.
    pub fn from_canvas(&self, px: f64, py: f64) -> (f64, f64) {
        let c = 0.5 * self.canvas;
        let r = self.disc_radius_px();
        ((px - c) / r, (c - py) / r)
    }
}

// shortest round-trip decimal; folds −0 into 0
fn num(v: f64) -> String {
    format!("{}", v + 0.0)
}

/// Deterministic SVG 1.1 document: the unit circle and one rotated ellipse
/// per glyph.
pub fn emit_svg(glyphs: &[EllipseGlyph<f64>], spec: &FigureSpec) -> String {
    let w = num(spec.canvas);
    let (cx, cy) = spec.to_canvas(0.0, 0.0);
    let r = spec.disc_radius_px();
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{w}\" viewBox=\"0 0 {w} {w}\">"
    );
    out.push_str("<title>Complex structure induced by I2 on the disc fiber</title>\n");
    let _ = writeln!(
        out,
        "<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.5\"/>",
        num(cx),
        num(cy),
        num(r)
    );
    out.push_str("<g fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1\">\n");
    for g in glyphs {
        let z = g.center.z();
        let (px, py) = spec.to_canvas(z.re, z.im);
        let (a, b) = g.half_axes();
        // SVG rotation is clockwise on screen, i.e. minus the disc angle
        let deg = -g.angle().to_degrees();
        let _ = writeln!(
            out,
            "<ellipse cx=\"{}\" cy=\"{}\" rx=\"{}\" ry=\"{}\" transform=\"rotate({} {} {})\"/>",
            num(px),
            num(py),
            num(a * r),
            num(b * r),
            num(deg),
            num(px),
            num(py)
        );
    }
    out.push_str("</g>\n</svg>\n");
    out
}
