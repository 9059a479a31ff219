use thiserror::Error;

use crate::family::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("shifted factorial ({x})_{n} has a vanishing factor")]
    ZeroDivisor { x: String, n: i64 },

    #[error("factorial of negative integer {0}")]
    NegativeFactorial(i64),

    #[error("{0} is outside the open interval (0, 1)")]
    Domain(String),

    #[error("radicand {0} is not in the basis {{1, 2, 3, 5, 6, 10, 15, 30}}")]
    UnsupportedRadicand(u64),

    #[error("division by zero in the surd field")]
    SurdDivisionByZero,

    #[error("invalid series parameters: {}", join_violations(.0))]
    InvalidParams(Vec<Violation>),

    #[error("bracket polynomial does not cancel: coefficient of k^{degree} is {value}")]
    CancellationFailure { degree: usize, value: String },

    #[error("rounding error {rounding:e} dominates the truncation estimate {truncation:e}")]
    PrecisionExhausted { rounding: f64, truncation: f64 },

    #[error("extrapolation schedule needs base >= 4 and levels >= 2 (got base {base}, levels {levels})")]
    Schedule { base: u64, levels: usize },

    #[error("cannot parse rational {0:?}")]
    ParseRational(String),

    #[error("malformed catalog JSON: {0}")]
    Json(String),
}

fn join_violations(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}
