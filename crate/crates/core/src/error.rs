use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("degenerate window [{lo}, {hi}]: need lo < 0 < hi")]
    DegenerateWindow { lo: i64, hi: i64 },

    #[error("stationary density must lie in (0, 1), got {0}")]
    InvalidDensity(f64),

    #[error("site {site} outside window [{lo}, {hi}]")]
    SiteOutsideWindow { site: i64, lo: i64, hi: i64 },

    #[error("no particle can move: the window is jammed")]
    Jammed,

    #[error("cannot evolve backwards from t = {now} to t = {target}")]
    TimeReversed { now: f64, target: f64 },

    #[error("{what} = {value} outside supported range [{lo}, {hi}]")]
    OutOfRange {
        what: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },

    #[error("non-finite value: {0}")]
    NonFinite(String),

    #[error("invalid kernel cut: {0}")]
    InvalidCut(String),

    #[error("quadrature grid inadequate: {0}")]
    GridInadequate(String),

    #[error("matrix dimension must be at least 1")]
    EmptyMatrix,

    #[error("time increment must be nonnegative, got {0}")]
    NegativeTimeStep(f64),

    #[error("sample is empty")]
    EmptySample,

    #[error("need at least {needed} samples, got {got}")]
    TooFewSamples { needed: usize, got: usize },

    #[error("invalid u grid: {0}")]
    InvalidGrid(String),

    #[error("malformed snapshot: {0}")]
    Snapshot(String),
}

pub type Result<T> = std::result::Result<T, Error>;
