use num_complex::Complex64;
use thiserror::Error;

/// Failure modes shared by every evaluation in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument was malformed or outside its admissible range.
    #[error("invalid input: {0}")]
    Validation(String),

    /// The argument lies outside the region where the function is defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// The argument sits within the guard radius of a pole.
    #[error("s = {s} is within {radius:e} of the pole at s = {pole}")]
    Pole {
        s: Complex64,
        pole: i64,
        radius: f64,
    },

    /// A series tail or quadrature failed to reach the requested accuracy.
    #[error("no convergence: achieved error estimate {achieved:e}, target {target:e}")]
    Convergence { achieved: f64, target: f64 },

    /// The result of an exponential would overflow; carries the logarithm.
    #[error("exp overflow: log-value {log_value} is not representable")]
    Overflow { log_value: Complex64 },
}

pub type Result<T> = std::result::Result<T, Error>;
