use thiserror::Error;

/// Errors raised by the kaon algebra and the bound solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum KaonError {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("degenerate mixing: p and q must both be non-zero (p = {p}, q = {q})")]
    DegenerateMixing { p: String, q: String },

    #[error("cannot normalize a zero vector")]
    ZeroVector,

    #[error("no sign change of the Bell margin on zeta in [0, 1] (margin at 0: {at_zero:e}, at 1: {at_one:e})")]
    NoRoot { at_zero: f64, at_one: f64 },
}

pub type Result<T> = std::result::Result<T, KaonError>;

pub(crate) fn invalid(msg: impl Into<String>) -> KaonError {
    KaonError::InvalidInput(msg.into())
}

pub(crate) fn ensure_finite(name: &str, x: f64) -> Result<()> {
    if x.is_finite() {
        Ok(())
    } else {
        Err(invalid(format!("{name} must be finite, got {x}")))
    }
}
