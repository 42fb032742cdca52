use thiserror::Error;

use crate::fivp::CaseTag;

/// Errors produced by the fuzzy-calculus library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("alpha {0} outside [0, 1]")]
    AlphaOutOfRange(f64),

    #[error("time {t} outside domain [0, {t_end}]")]
    TimeOutOfDomain { t: f64, t_end: f64 },

    #[error("alpha grids differ between operands")]
    GridMismatch,

    #[error("envelope has {got} samples but the grid has {expected} levels")]
    LengthMismatch { expected: usize, got: usize },

    #[error("envelope sample at index {0} is not finite")]
    NonFiniteSample(usize),

    #[error("triangular parameters out of order: ({left}, {peak}, {right})")]
    TriangularOrder { left: f64, peak: f64, right: f64 },

    #[error("alpha grid must rise strictly from 0 to 1 with at least two levels")]
    InvalidGrid,

    #[error("finite-difference step must be positive, got {0}")]
    NonPositiveStep(f64),

    #[error("need at least 2 samples per axis, got {0}")]
    TooFewSamples(usize),

    #[error("no analytic time derivative and t = {t} cannot be differenced on this field")]
    DerivativeUnavailable { t: f64 },

    #[error("time grid is empty")]
    EmptyTimeGrid,

    #[error("sampled field needs at least two time points")]
    ShortTimeGrid,

    #[error("coefficient is classified {found}, operation requires {expected}")]
    WrongCase { expected: CaseTag, found: CaseTag },

    #[error("initial envelope is negative: c1({alpha}) = {value}")]
    NegativeInitial { alpha: f64, value: f64 },

    #[error("decay ratio is singular: k2({alpha}) = {k2} is too close to zero")]
    SingularRatio { alpha: f64, k2: f64 },

    #[error("integration diverged; last finite state at t = {t}")]
    Divergence { t: f64 },

    #[error("invalid model: {0}")]
    InvalidModel(String),
}

pub type Result<T> = std::result::Result<T, Error>;
