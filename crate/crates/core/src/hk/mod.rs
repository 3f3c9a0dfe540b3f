//! Hyperkähler package on the complex orbit: the potential
//! `K(y) = α·Re⟨y, π(y)⟩`, the forms ω₁ (explicit and as `dd^c K`), the
//! metric, the structures I₁, I₂, I₃, and the structure induced by I₂ on
//! the disc fiber.

mod config;
mod disc;
mod forms;
mod frame;
mod potential;

pub use config::{MetricC, StructureConfig, DC_CONVENTION, DDC_STEP, DEFAULT_FD_STEP};
pub use disc::{
    ellipse_glyph, frame_by_curves, frame_through_quotient, induced_j, tilde_frame, EllipseGlyph, JFrame,
};
pub use forms::{
    apply_i, apply_i_equivariant, kks, metric_g, omega1_explicit, omega_c, omega_k, pushforward_pi,
    pushforward_pi_step, Structure,
};
pub use frame::{GeneratorFrame, SplitGenerator, MAX_CONDITION};
pub use potential::{kahler_potential, omega1_numeric, omega1_numeric_in, EigenChart, CHART_MIN_DET};
