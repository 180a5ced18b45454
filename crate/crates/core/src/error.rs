use crate::exactalg::BigRational;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// Attempted to build a rational function with an identically zero denominator.
    #[error("zero denominator in rational function construction")]
    ZeroDenominator,

    /// Evaluation at a pole of the denominator.
    #[error("pole at x = {x} during rational function evaluation")]
    Pole { x: BigRational },

    /// No bound state exists at this index for the requested model.
    #[error("inadmissible level index n = {n} for seed index p = {p}")]
    InadmissibleIndex { p: u32, n: u32 },

    /// Half-line models carry no closed-form normalization constant;
    /// callers must normalize numerically.
    #[error("no closed-form normalization for odd seed index p = {p}; use numerical quadrature")]
    NoClosedFormNorm { p: u32 },

    /// Adaptive quadrature hit the subdivision depth limit. Carries the
    /// worst offending subinterval and its local error estimate.
    #[error("quadrature failed to converge on [{lo}, {hi}] (local error {err:.3e})")]
    QuadratureDepthExceeded { lo: f64, hi: f64, err: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
