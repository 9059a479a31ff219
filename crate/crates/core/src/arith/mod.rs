//! Exact and multi-precision arithmetic.

mod constants;
mod pochhammer;
pub(crate) mod rational;
mod real;
mod surd;

pub use constants::{pi_reference, sin_pi_exact, sin_pi_numeric};
pub use pochhammer::{factorial, pochhammer};
pub use rational::{parse_rational, rational_string, ExactRational};
pub use real::BigReal;
pub use surd::{SurdExpr, RADICANDS};
