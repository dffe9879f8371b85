use thiserror::Error;

/// Failure modes shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("singular matrix (|det| = {det:e})")]
    SingularMatrix { det: f64 },
    #[error("line has a vanishing third coordinate")]
    LineAtInfinity,
    #[error("line lies in the degenerate cone (|2bc-1| = {gap:e})")]
    LineInCone { gap: f64 },
    #[error("spectral parameter within {distance:e} of a pole")]
    PoleProximity { distance: f64 },
    #[error("spectral parameter must be nonzero")]
    ZeroLambda,
    #[error("six-pole denominator vanishes")]
    DegenerateDenominator,
    #[error("Psi <= 0 (Psi = {psi})")]
    NonPositivePsi { psi: f64 },
    #[error("coordinate singularity at x = 0")]
    CoordinateSingularity,
    #[error("degenerate jacobian (|det| = {det:e})")]
    DegenerateJacobian { det: f64 },
    #[error("denominator vanishes at this spectral parameter")]
    DenominatorPole,
    #[error("scale solution vanishes")]
    PhiZero,
    #[error("2|b|^2-1 <= 0 (radicand = {radicand})")]
    NonPositiveGauge { radicand: f64 },
    #[error("tau-function vanishes")]
    TauZero,
    #[error("degenerate soliton parameters")]
    DegenerateParameters,
    #[error("grid specifications differ")]
    SpecMismatch,
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("twist case does not match the base surface")]
    TwistMismatch,
}

pub type Result<T> = std::result::Result<T, Error>;
