use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("argument within {radius:e} of pole at {pole}")]
    PoleProximity { pole: Complex64, radius: f64 },

    #[error("pole at {0}")]
    Pole(Complex64),

    #[error("series not converged after {terms} terms (tail bound {achieved:e})")]
    Truncation { terms: usize, achieved: f64 },

    #[error("remainder bound {achieved:e} exceeds target {target:e}")]
    Accuracy { achieved: f64, target: f64 },

    #[error("zero search incomplete: found {found}, expected {expected}, gap near [{gap_lo}, {gap_hi}]")]
    Incomplete {
        found: usize,
        expected: usize,
        gap_lo: f64,
        gap_hi: f64,
    },

    #[error("|zeta'(rho)| = {abs_zeta_prime:e} below simplicity floor at gamma = {gamma}")]
    NearMultipleZero { gamma: f64, abs_zeta_prime: f64 },

    #[error("|zeta| lower bound reaches 0 on sigma in [{sigma_lo}, {sigma_hi}] at height {t}")]
    PotentialZeroOnLine { sigma_lo: f64, sigma_hi: f64, t: f64 },

    #[error("zero table is incomplete or missing residues")]
    TableNotReady,

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("outside domain: {0}")]
    Domain(String),

    #[error("out of range: {0}")]
    Range(String),

    #[error("segment of {requested} entries exceeds budget {budget}")]
    Segmentation { requested: u64, budget: u64 },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
