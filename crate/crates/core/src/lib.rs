//! Telescoping sine series for powers of π.
//!
//! Two parameterized families are provided. The first sums to
//! `∏ sin(π xᵢ) / π^m`, the second to `π^m / ∏ sin(π xᵢ)`. Every series term
//! is an exact rational; the partial sums collapse to a closed form
//! `τ_N − τ_{−1}`, which gives both an exact oracle for the summation code and
//! a fast route to the limit by extrapolating `τ_N`.
//!
//! The crate is split into:
//!
//! * [`arith`]: rationals, shifted factorials, the surd field `ℚ(√2, √3, √5)`,
//!   a binary multi-precision real and the independent reference constants.
//! * [`family`]: parameter validation, `τ_k`, the boundary term, series terms
//!   and the exact limit.
//! * [`evaluator`]: exact and floating summation, Richardson extrapolation and
//!   identity verification.
//! * [`catalog`]: every printed identity as data, with exact normalization
//!   checks, JSON and LaTeX emitters.

pub mod arith;
pub mod catalog;
pub mod error;
pub mod evaluator;
pub mod family;
pub mod poly;

pub use arith::{
    factorial, parse_rational, pi_reference, pochhammer, rational_string, sin_pi_exact,
    sin_pi_numeric, BigReal, ExactRational, SurdExpr,
};
pub use catalog::{all_entries, find_entry, CatalogEntry, PrintedTerm, PrintedValue, Shifted};
pub use error::{Error, Result};
pub use evaluator::{EvalReport, Method};
pub use family::{FamilyId, LimitSpec, SeriesInstance, SeriesParams, Violation};
