use thiserror::Error;

/// Crate-wide error type. Variants carry the subsystem name so the CLI can
/// surface module-qualified codes.
#[derive(Debug, Error)]
pub enum Error {
    #[error("exactalg: ring mismatch: {0}")]
    RingMismatch(String),
    #[error("exactalg: parse error: {0}")]
    Parse(String),
    #[error("exactalg: variable {0} has zero weight")]
    ZeroWeight(String),
    #[error("exactalg: interpolation produced non-integer coefficients")]
    NonIntegerInterpolation,
    #[error("exactalg: interpolation points are inconsistent with a polynomial count")]
    InconsistentInterpolation,
    #[error("tableaux: invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("tableaux: invalid Lusztig datum: {0}")]
    InvalidDatum(String),
    #[error("polytopes: edge inequality violated at {0}")]
    EdgeInequality(String),
    #[error("orbital: {0}")]
    Orbital(String),
    #[error("mvy: {0}")]
    Mvy(String),
    #[error("preproj: {0}")]
    Preproj(String),
    #[error("preproj: point counts are not polynomial in q: {0}")]
    NonPolynomialCount(String),
    #[error("measures: {0}")]
    Measures(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
