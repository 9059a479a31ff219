//! The two telescoping series families.
//!
//! For parameters `xᵢ ∈ (0,1)` and integers `pᵢ, qᵢ, rᵢ` (`i = 1..m`):
//!
//! * [`FamilyId::T1`] sums to `∏ sin(πxᵢ) / π^m`, with
//!   `τ_k = ∏ (xᵢ)_{k+pᵢ+1} (1−xᵢ)_{k+qᵢ+1} / ((k+rᵢ)! (k+pᵢ+qᵢ−rᵢ+1)!)`;
//! * [`FamilyId::T12`] sums to `π^m / ∏ sin(πxᵢ)`, with
//!   `τ_k = ∏ (k+pᵢ+1)! (k+qᵢ+1)! / ((xᵢ)_{k+rᵢ+1} (1−xᵢ)_{k+pᵢ+qᵢ−rᵢ+2})`.
//!
//! In both cases the series term is `τ_k − τ_{k−1}`, written as a prefactor
//! times a bracket polynomial in `k`, so `Σ_{k=0}^{N} term_k = τ_N − τ_{−1}`
//! and the series plus the boundary `τ_{−1}` equals `lim τ_N`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{
    factorial, pi_reference, pochhammer, sin_pi_exact, sin_pi_numeric, BigReal, ExactRational,
    SurdExpr,
};
use crate::error::{Error, Result};
use crate::poly::Poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyId {
    T1,
    T12,
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyId::T1 => "T1",
            FamilyId::T12 => "T12",
        })
    }
}

impl FromStr for FamilyId {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_uppercase().as_str() {
            "T1" => Ok(FamilyId::T1),
            "T12" => Ok(FamilyId::T12),
            _ => Err(format!("unknown family {s:?} (expected T1 or T12)")),
        }
    }
}

/// One constraint violated by a [`SeriesParams`]. Indices are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Empty,
    LengthMismatch { field: &'static str, len: usize, m: usize },
    XOutOfRange { i: usize, x: String },
    NegativeR { i: usize, r: i64 },
    NegativeUpper { i: usize, value: i64 },
    NegativeP { i: usize, p: i64 },
    NegativeQ { i: usize, q: i64 },
}

const T1_RULE: &str = "min{r_i, p_i+q_i-r_i+1} >= 0";
const T12_RULE: &str = "min{p_i, q_i} >= 0";

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Empty => write!(f, "m must be at least 1"),
            Violation::LengthMismatch { field, len, m } => {
                write!(f, "{field} has {len} entries but m = {m}")
            }
            Violation::XOutOfRange { i, x } => write!(f, "x_{i} = {x} is not in (0, 1)"),
            Violation::NegativeR { i, r } => write!(f, "r_{i} = {r} < 0 violates {T1_RULE}"),
            Violation::NegativeUpper { i, value } => {
                write!(f, "p_{i}+q_{i}-r_{i}+1 = {value} < 0 violates {T1_RULE}")
            }
            Violation::NegativeP { i, p } => write!(f, "p_{i} = {p} < 0 violates {T12_RULE}"),
            Violation::NegativeQ { i, q } => write!(f, "q_{i} = {q} < 0 violates {T12_RULE}"),
        }
    }
}

/// The tuple `(family, m, x, p, q, r)` defining one series.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SeriesParams {
    pub family: FamilyId,
    pub m: usize,
    pub x: Vec<ExactRational>,
    pub p: Vec<i64>,
    pub q: Vec<i64>,
    pub r: Vec<i64>,
}

impl SeriesParams {
    /// `m` is taken from the length of `x`.
    pub fn new(
        family: FamilyId,
        x: Vec<ExactRational>,
        p: Vec<i64>,
        q: Vec<i64>,
        r: Vec<i64>,
    ) -> SeriesParams {
        SeriesParams { family, m: x.len(), x, p, q, r }
    }

    /// The same `(x, p, q, r)` repeated `m` times.
    pub fn uniform(family: FamilyId, m: usize, x: ExactRational, p: i64, q: i64, r: i64) -> SeriesParams {
        SeriesParams::new(family, vec![x; m], vec![p; m], vec![q; m], vec![r; m])
    }

    /// Every violated constraint; empty when the parameters are valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.m == 0 {
            out.push(Violation::Empty);
        }
        for (field, len) in [
            ("x", self.x.len()),
            ("p", self.p.len()),
            ("q", self.q.len()),
            ("r", self.r.len()),
        ] {
            if len != self.m {
                out.push(Violation::LengthMismatch { field, len, m: self.m });
            }
        }
        if !out.is_empty() {
            return out;
        }
        for i in 0..self.m {
            let x = &self.x[i];
            if !(x.is_positive() && x < &ExactRational::one()) {
                out.push(Violation::XOutOfRange { i: i + 1, x: x.to_string() });
            }
            let (p, q, r) = (self.p[i], self.q[i], self.r[i]);
            match self.family {
                FamilyId::T1 => {
                    if r < 0 {
                        out.push(Violation::NegativeR { i: i + 1, r });
                    }
                    if p + q - r + 1 < 0 {
                        out.push(Violation::NegativeUpper { i: i + 1, value: p + q - r + 1 });
                    }
                }
                FamilyId::T12 => {
                    if p < 0 {
                        out.push(Violation::NegativeP { i: i + 1, p });
                    }
                    if q < 0 {
                        out.push(Violation::NegativeQ { i: i + 1, q });
                    }
                }
            }
        }
        out
    }

    pub fn instance(&self) -> Result<SeriesInstance> {
        SeriesInstance::new(self.clone())
    }
}

impl fmt::Display for SeriesParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[i64]| v.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(",");
        let xs = self.x.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(",");
        write!(
            f,
            "{} m={} x=[{}] p=[{}] q=[{}] r=[{}]",
            self.family,
            self.m,
            xs,
            join(&self.p),
            join(&self.q),
            join(&self.r)
        )
    }
}

/// The limit `∏ sin(πxᵢ) / π^m` (T1) or `π^m / ∏ sin(πxᵢ)` (T12), as
/// `surd_factor · π^pi_exponent` when every sine is a known surd.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LimitSpec {
    pub family: FamilyId,
    pub pi_exponent: i32,
    pub surd_factor: Option<SurdExpr>,
    x: Vec<ExactRational>,
}

impl LimitSpec {
    /// Numeric value, through the surd factor when present and the Taylor
    /// sines otherwise.
    pub fn numeric(&self, prec: u32) -> BigReal {
        match &self.surd_factor {
            Some(s) => {
                let work = prec + 16;
                (&s.eval(work) * &pi_reference(work).powi(self.pi_exponent)).with_precision(prec)
            }
            None => self.numeric_via_sines(prec),
        }
    }

    pub fn numeric_via_sines(&self, prec: u32) -> BigReal {
        let work = prec + 16;
        let sines = self
            .x
            .iter()
            .map(|x| sin_pi_numeric(x, work).expect("x validated in (0,1)"))
            .fold(BigReal::from_int(1, work), |acc, s| &acc * &s);
        let pim = pi_reference(work).powi(self.x.len() as i32);
        let v = match self.family {
            FamilyId::T1 => &sines / &pim,
            FamilyId::T12 => &pim / &sines,
        };
        v.with_precision(prec)
    }
}

/// A validated [`SeriesParams`] with the exact term machinery.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesInstance {
    params: SeriesParams,
}

fn poch(x: &ExactRational, n: i64) -> ExactRational {
    pochhammer(x, n).expect("shifted factorials of non-integers never vanish")
}

fn fact(n: i64) -> ExactRational {
    ExactRational::from_integer(factorial(n).expect("index kept non-negative by validation"))
}

fn int(n: i64) -> ExactRational {
    ExactRational::from_integer(n.into())
}

impl SeriesInstance {
    pub fn new(params: SeriesParams) -> Result<SeriesInstance> {
        let violations = params.validate();
        if violations.is_empty() {
            Ok(SeriesInstance { params })
        } else {
            Err(Error::InvalidParams(violations))
        }
    }

    pub fn params(&self) -> &SeriesParams {
        &self.params
    }

    pub fn family(&self) -> FamilyId {
        self.params.family
    }

    pub fn m(&self) -> usize {
        self.params.m
    }

    fn factors(&self) -> impl Iterator<Item = (&ExactRational, i64, i64, i64)> {
        let p = &self.params;
        (0..p.m).map(move |i| (&p.x[i], p.p[i], p.q[i], p.r[i]))
    }

    /// `τ_k` straight from its definition.
    pub fn tau(&self, k: u64) -> ExactRational {
        let k = k as i64;
        self.factors().fold(ExactRational::one(), |acc, (x, p, q, r)| {
            let y = ExactRational::one() - x;
            acc * match self.family() {
                FamilyId::T1 => {
                    poch(x, k + p + 1) * poch(&y, k + q + 1) / (fact(k + r) * fact(k + p + q - r + 1))
                }
                FamilyId::T12 => {
                    fact(k + p + 1) * fact(k + q + 1)
                        / (poch(x, k + r + 1) * poch(&y, k + p + q - r + 2))
                }
            }
        })
    }

    /// `τ_{−1}` in the closed form carrying the explicit `rᵢ(pᵢ+qᵢ−rᵢ+1)`
    /// factor (T1), which is zero as soon as some `rᵢ = 0`.
    pub fn boundary(&self) -> ExactRational {
        self.factors().fold(ExactRational::one(), |acc, (x, p, q, r)| {
            let y = ExactRational::one() - x;
            acc * match self.family() {
                FamilyId::T1 => {
                    let upper = p + q - r + 1;
                    poch(x, p) * poch(&y, q) / (fact(r) * fact(upper)) * int(r * upper)
                }
                FamilyId::T12 => fact(p) * fact(q) / (poch(x, r) * poch(&y, p + q - r + 1)),
            }
        })
    }

    /// The shifted-factorial part of the `k`-th term.
    pub fn prefactor(&self, k: u64) -> ExactRational {
        let k = k as i64;
        self.factors().fold(ExactRational::one(), |acc, (x, p, q, r)| {
            let y = ExactRational::one() - x;
            acc * match self.family() {
                FamilyId::T1 => {
                    poch(x, k + p) * poch(&y, k + q) / (fact(k + r) * fact(k + p + q - r + 1))
                }
                FamilyId::T12 => {
                    fact(k + p) * fact(k + q) / (poch(x, k + r + 1) * poch(&y, k + p + q - r + 2))
                }
            }
        })
    }

    /// The bracket difference of the `k`-th term, for any rational `k`.
    pub fn bracket(&self, k: &ExactRational) -> ExactRational {
        let mut plus = ExactRational::one();
        let mut minus = ExactRational::one();
        for (x, p, q, r) in self.factors() {
            let (p, q, r) = (int(p), int(q), int(r));
            match self.family() {
                FamilyId::T1 => {
                    plus *= (k + x + &p) * (k - x + &q + int(1));
                    minus *= (k + &r) * (k + &p + &q - &r + int(1));
                }
                FamilyId::T12 => {
                    plus *= (k + &p + int(1)) * (k + &q + int(1));
                    minus *= (k + x + &r) * (k - x + &p + &q - &r + int(2));
                }
            }
        }
        plus - minus
    }

    /// The `k`-th series term, `prefactor(k) · bracket(k)`.
    pub fn summand(&self, k: u64) -> ExactRational {
        self.prefactor(k) * self.bracket(&int(k as i64))
    }

    /// `prefactor(k+1) / prefactor(k)` as an unreduced integer pair.
    pub fn prefactor_ratio_parts(&self, k: u64) -> (BigInt, BigInt) {
        self.ratio_parts(k as i64, 1)
    }

    /// `τ_k / τ_{k−1}` for `k ≥ 1` as an unreduced integer pair.
    pub fn tau_ratio_parts(&self, k: u64) -> (BigInt, BigInt) {
        assert!(k >= 1, "τ ratio starts at k = 1");
        self.ratio_parts(k as i64, 0)
    }

    // Both ratios are products of the same linear forms; `lift` = 1 gives the
    // prefactor ratio at k, `lift` = 0 the τ ratio at k.
    fn ratio_parts(&self, k: i64, lift: i64) -> (BigInt, BigInt) {
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for (x, p, q, r) in self.factors() {
            let a = x.numer();
            let b = x.denom();
            let b2 = b * b;
            match self.family() {
                FamilyId::T1 => {
                    num *= (a + b * (k + p)) * (b * (k + q + 1) - a);
                    den *= b2 * (k + r + lift) * (k + p + q - r + 1 + lift);
                }
                FamilyId::T12 => {
                    num *= b2 * (k + p + 1) * (k + q + 1);
                    den *= (a + b * (k + r + lift)) * (b * (k + p + q - r + 1 + lift + 1) - a);
                }
            }
        }
        (num, den)
    }

    pub fn prefactor_ratio(&self, k: u64) -> ExactRational {
        let (n, d) = self.prefactor_ratio_parts(k);
        ExactRational::new(n, d)
    }

    /// The full bracket polynomial, recovered by exact interpolation through
    /// `k = 0..=2m`.
    pub fn bracket_poly(&self) -> Poly {
        let values: Vec<_> = (0..=2 * self.m() as i64).map(|k| self.bracket(&int(k))).collect();
        Poly::interpolate_at_naturals(&values)
    }

    /// Bracket coefficients in ascending order, degree at most `2m − 2`.
    /// The degree `2m` and `2m − 1` coefficients must cancel exactly.
    pub fn bracket_coefficients(&self) -> Result<Vec<ExactRational>> {
        let poly = self.bracket_poly();
        let top = 2 * self.m();
        for degree in [top, top - 1] {
            let c = poly.coefficient(degree);
            if !c.is_zero() {
                return Err(Error::CancellationFailure { degree, value: c.to_string() });
            }
        }
        Ok((0..top - 1).map(|i| poly.coefficient(i)).collect())
    }

    pub fn limit_value(&self) -> LimitSpec {
        let m = self.m() as i32;
        let product = self
            .params
            .x
            .iter()
            .map(|x| sin_pi_exact(x).expect("x validated in (0,1)"))
            .try_fold(SurdExpr::one(), |acc, s| s.map(|s| &acc * &s));
        let (pi_exponent, surd_factor) = match self.family() {
            FamilyId::T1 => (-m, product),
            FamilyId::T12 => (m, product.map(|s| s.inverse().expect("sines in (0,1) are nonzero"))),
        };
        LimitSpec { family: self.family(), pi_exponent, surd_factor, x: self.params.x.clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::ratio;

    fn t1(x: ExactRational, p: i64, q: i64, r: i64) -> SeriesInstance {
        SeriesParams::uniform(FamilyId::T1, 1, x, p, q, r).instance().unwrap()
    }

    fn t12(x: ExactRational, p: i64, q: i64, r: i64) -> SeriesInstance {
        SeriesParams::uniform(FamilyId::T12, 1, x, p, q, r).instance().unwrap()
    }

    #[test]
    fn validation() {
        let ok = SeriesParams::uniform(FamilyId::T1, 1, ratio(1, 2), 0, 0, 0);
        assert!(ok.validate().is_empty());
        let bad = SeriesParams::uniform(FamilyId::T1, 1, ratio(1, 2), 0, 0, 2);
        let v = bad.validate();
        assert_eq!(v, vec![Violation::NegativeUpper { i: 1, value: -1 }]);
        assert!(v[0].to_string().contains("p_1+q_1-r_1+1 = -1"));
        let bad = SeriesParams::uniform(FamilyId::T12, 1, ratio(1, 2), -1, 0, 0);
        assert_eq!(bad.validate(), vec![Violation::NegativeP { i: 1, p: -1 }]);
        assert!(bad.validate()[0].to_string().contains("min{p_i, q_i} >= 0"));
        // T12 leaves r free
        assert!(SeriesParams::uniform(FamilyId::T12, 2, ratio(1, 3), 0, 1, -5).validate().is_empty());
        let mut lopsided = SeriesParams::uniform(FamilyId::T1, 2, ratio(1, 2), 0, 0, 0);
        lopsided.q.pop();
        assert_eq!(
            lopsided.validate(),
            vec![Violation::LengthMismatch { field: "q", len: 1, m: 2 }]
        );
        let outside = SeriesParams::uniform(FamilyId::T1, 1, ratio(3, 2), 0, 0, -1);
        assert_eq!(outside.validate().len(), 2);
        assert!(matches!(outside.instance(), Err(Error::InvalidParams(_))));
    }

    #[test]
    fn tau_values() {
        let s = t1(ratio(1, 2), 0, 0, 0);
        assert_eq!(s.tau(0), ratio(1, 4));
        assert_eq!(s.tau(1), ratio(9, 32));
        assert_eq!(t12(ratio(1, 2), 0, 0, 0).tau(0), ratio(8, 3));
    }

    #[test]
    fn boundary_values() {
        assert_eq!(t1(ratio(1, 3), 2, 1, 0).boundary(), ratio(0, 1));
        assert_eq!(t1(ratio(1, 2), 1, 0, 1).boundary(), ratio(1, 2));
        // 0!0!/((1/2)_0 (1/2)_1) = 2
        assert_eq!(t12(ratio(1, 2), 0, 0, 0).boundary(), ratio(2, 1));
    }

    #[test]
    fn summand_values() {
        let s = t1(ratio(1, 2), 0, 0, 0);
        assert_eq!(s.summand(0), ratio(1, 4));
        assert_eq!(s.summand(1), ratio(1, 32));
        let two = SeriesParams::uniform(FamilyId::T1, 2, ratio(1, 2), 0, 0, 0).instance().unwrap();
        // half of the printed k² + k + 1/8 at k = 0
        assert_eq!(two.summand(0), ratio(1, 16));
    }

    #[test]
    fn ratios_match_direct_products() {
        for s in [t1(ratio(1, 3), -1, 2, 0), t12(ratio(2, 5), 1, 0, -2), t12(ratio(1, 2), 0, 3, 5)] {
            for k in 0..6 {
                assert_eq!(s.prefactor_ratio(k), s.prefactor(k + 1) / s.prefactor(k));
                let (n, d) = s.tau_ratio_parts(k + 1);
                assert_eq!(ExactRational::new(n, d), s.tau(k + 1) / s.tau(k));
            }
        }
    }

    #[test]
    fn bracket_constants() {
        assert_eq!(t1(ratio(1, 2), 0, 0, 0).bracket_coefficients().unwrap(), vec![ratio(1, 4)]);
        let x = ratio(2, 7);
        let s = t1(x.clone(), 3, 1, 2);
        let expect = (int(3 - 2) + &x) * (int(1 + 1 - 2) - &x);
        assert_eq!(s.bracket_coefficients().unwrap(), vec![expect]);
        let e29 = SeriesParams::uniform(FamilyId::T12, 2, ratio(1, 2), 0, 0, 0).instance().unwrap();
        assert_eq!(e29.bracket_coefficients().unwrap(), vec![ratio(7, 16), int(1), ratio(1, 2)]);
    }

    #[test]
    fn limits() {
        let l = t1(ratio(1, 2), 0, 0, 0).limit_value();
        assert_eq!((l.pi_exponent, l.surd_factor), (-1, Some(SurdExpr::one())));
        let l = SeriesParams::uniform(FamilyId::T1, 2, ratio(1, 2), 0, 0, 0)
            .instance()
            .unwrap()
            .limit_value();
        assert_eq!((l.pi_exponent, l.surd_factor), (-2, Some(SurdExpr::one())));
        let l = t12(ratio(1, 4), 0, 0, 0).limit_value();
        assert_eq!((l.pi_exponent, l.surd_factor.clone()), (1, Some(SurdExpr::sqrt(2).unwrap())));
        let v = l.numeric(128);
        let w = l.numeric_via_sines(128);
        assert!((&v - &w).abs().magnitude_exp() < -120);
        assert!(v.to_string().starts_with("4.442882938158366"));
        assert_eq!(t1(ratio(1, 7), 0, 0, 0).limit_value().surd_factor, None);
    }
}
