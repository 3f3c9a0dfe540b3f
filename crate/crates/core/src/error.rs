use thiserror::Error;

/// Failure modes of the orbit geometry operations.
///
/// Numeric payloads are reported in `f64` whatever the scalar type.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix has non-finite entries")]
    NonFinite,
    #[error("spectrum is not {{+i, -i}}: |tr| = {trace:e}, |det - 1| = {det:e}")]
    DegenerateSpectrum { trace: f64, det: f64 },
    #[error("eigenlines are not complementary: |det| = {det:e}")]
    DegenerateLines { det: f64 },
    #[error("algebra element is not traceless: |tr| = {trace:e}")]
    NotTraceless { trace: f64 },
    #[error("matrix is not in SL(2,C): |det - 1| = {deviation:e}")]
    NotUnimodular { deviation: f64 },
    #[error("matrix is not in SU(1,1): residual {residual:e}")]
    NotSU11 { residual: f64 },
    #[error("orbit point is not in the compact orbit (not anti-Hermitian): residual {residual:e}")]
    NotCompactPoint { residual: f64 },
    #[error("generator is not in the transported m-subspace: residual {residual:e}")]
    GeneratorNotInM { residual: f64 },
    #[error("orbit point is not in the fiber over x: |pi(y) - x| = {distance:e}")]
    NotInFiber { distance: f64 },
    #[error("structure I2/I3 requested off the fiber over x: |pi(y) - x| = {distance:e}")]
    NotFiberPoint { distance: f64 },
    #[error("tangent basis is degenerate: condition number {condition:e}")]
    BasisDegenerate { condition: f64 },
    #[error("tangent vectors have different base points: distance {distance:e}")]
    BaseMismatch { distance: f64 },
    #[error("eigenline chart is singular: |det| = {det:e}")]
    ChartSingular { det: f64 },
    #[error("point is outside the open unit disc: |z| = {modulus}")]
    OutsideDisc { modulus: f64 },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

impl Error {
    /// Stable snake-case name of the variant.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NonFinite => "non_finite",
            Error::DegenerateSpectrum { .. } => "degenerate_spectrum",
            Error::DegenerateLines { .. } => "degenerate_lines",
            Error::NotTraceless { .. } => "not_traceless",
            Error::NotUnimodular { .. } => "not_unimodular",
            Error::NotSU11 { .. } => "not_su11",
            Error::NotCompactPoint { .. } => "not_compact_point",
            Error::GeneratorNotInM { .. } => "generator_not_in_m",
            Error::NotInFiber { .. } => "not_in_fiber",
            Error::NotFiberPoint { .. } => "not_fiber_point",
            Error::BasisDegenerate { .. } => "basis_degenerate",
            Error::BaseMismatch { .. } => "base_mismatch",
            Error::ChartSingular { .. } => "chart_singular",
            Error::OutsideDisc { .. } => "outside_disc",
            Error::InvalidConfig(_) => "invalid_config",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
