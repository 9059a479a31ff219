//! Printed identities as data.
//!
//! Each [`CatalogEntry`] ties a generic [`SeriesParams`] instance to the way
//! the identity is usually written: a printed series term, a printed value
//! for its sum, and the exact factor `rho` with
//! `generic summand(k) = rho · printed term(k)`.

mod data;
mod json;
mod latex;

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_traits::{One, Signed, Zero};
use web_time::Instant;

use crate::arith::{pi_reference, pochhammer, BigReal, ExactRational, SurdExpr};
use crate::error::{Error, Result};
use crate::evaluator::{verify_identity, EvalReport};
use crate::family::SeriesParams;
use crate::poly::Poly;

pub use json::{emit_json, parse_json};
pub use latex::{emit_latex, identity_line, latex_value};

/// The factor `(base)_{k+shift}`; `k!` is `(1)_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Shifted {
    pub base: ExactRational,
    pub shift: i64,
}

impl Shifted {
    pub fn new(base: ExactRational, shift: i64) -> Shifted {
        Shifted { base, shift }
    }

    pub fn factorial(shift: i64) -> Shifted {
        Shifted { base: ExactRational::one(), shift }
    }

    pub fn eval(&self, k: u64) -> Result<ExactRational> {
        pochhammer(&self.base, k as i64 + self.shift)
    }
}

/// A printed series term `∏ numer / ∏ denom · bracket(k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PrintedTerm {
    pub numer: Vec<Shifted>,
    pub denom: Vec<Shifted>,
    /// Ascending coefficients of the bracket polynomial in `k`.
    pub bracket: Vec<ExactRational>,
}

impl PrintedTerm {
    pub fn eval(&self, k: u64) -> Result<ExactRational> {
        let mut v = Poly(self.bracket.clone()).eval(&ExactRational::from_integer(k.into()));
        for f in &self.numer {
            v *= f.eval(k)?;
        }
        for f in &self.denom {
            let d = f.eval(k)?;
            if d.is_zero() {
                return Err(Error::ZeroDivisor { x: f.base.to_string(), n: k as i64 + f.shift });
            }
            v /= d;
        }
        Ok(v)
    }
}

/// `Σ coeff · π^e` with surd coefficients, keyed by the exponent.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PrintedValue {
    pub terms: BTreeMap<i32, SurdExpr>,
}

impl PrintedValue {
    pub fn zero() -> PrintedValue {
        PrintedValue::default()
    }

    pub fn pi_power(coeff: SurdExpr, pi_exp: i32) -> PrintedValue {
        PrintedValue::zero().plus(coeff, pi_exp)
    }

    pub fn rational(c: ExactRational) -> PrintedValue {
        PrintedValue::pi_power(SurdExpr::rational(c), 0)
    }

    /// Adds `coeff · π^pi_exp`, dropping exponents whose coefficient cancels.
    pub fn plus(mut self, coeff: SurdExpr, pi_exp: i32) -> PrintedValue {
        let sum = match self.terms.remove(&pi_exp) {
            Some(c) => &c + &coeff,
            None => coeff,
        };
        if !sum.is_zero() {
            self.terms.insert(pi_exp, sum);
        }
        self
    }

    pub fn add(&self, rhs: &PrintedValue) -> PrintedValue {
        rhs.terms.iter().fold(self.clone(), |acc, (e, c)| acc.plus(c.clone(), *e))
    }

    pub fn scale(&self, c: &SurdExpr) -> PrintedValue {
        self.terms.iter().fold(PrintedValue::zero(), |acc, (e, v)| acc.plus(v * c, *e))
    }

    pub fn numeric(&self, prec: u32) -> BigReal {
        let work = prec + 16;
        let pi = pi_reference(work);
        self.terms
            .iter()
            .fold(BigReal::zero(work), |acc, (e, c)| &acc + &(&c.eval(work) * &pi.powi(*e)))
            .with_precision(prec)
    }
}

/// One printed identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CatalogEntry {
    pub id: String,
    pub params: SeriesParams,
    pub rho: ExactRational,
    /// Value of the printed series, i.e. the printed left side with any
    /// printed boundary term moved across.
    pub printed_lhs: PrintedValue,
    pub printed_term: PrintedTerm,
    pub provenance: String,
}

static ENTRIES: OnceLock<Vec<CatalogEntry>> = OnceLock::new();

pub fn all_entries() -> &'static [CatalogEntry] {
    ENTRIES.get_or_init(data::build)
}

pub fn find_entry(id: &str) -> Option<&'static CatalogEntry> {
    all_entries().iter().find(|e| e.id == id)
}

/// `generic summand(k) / printed term(k)` when it is the same rational for
/// `k = 0..=3`. Used to derive `rho` independently of the stored value.
pub fn derive_rho(params: &SeriesParams, term: &PrintedTerm) -> Option<ExactRational> {
    let series = params.instance().ok()?;
    let mut rho: Option<ExactRational> = None;
    for k in 0..4 {
        let printed = term.eval(k).ok()?;
        if printed.is_zero() {
            return None;
        }
        let ratio = series.summand(k) / printed;
        match &rho {
            Some(r) if *r != ratio => return None,
            Some(_) => {}
            None => rho = Some(ratio),
        }
    }
    rho
}

/// The exact value `limit − boundary` of the generic series, when the limit
/// has a surd closed form.
pub fn generic_value(params: &SeriesParams) -> Option<PrintedValue> {
    let series = params.instance().ok()?;
    let limit = series.limit_value();
    let surd = limit.surd_factor?;
    Some(PrintedValue::pi_power(surd, limit.pi_exponent).plus(SurdExpr::rational(-series.boundary()), 0))
}

impl CatalogEntry {
    /// Summand-level check for `k = 0..=5`.
    pub fn summands_match(&self) -> bool {
        let Ok(series) = self.params.instance() else { return false };
        (0..6).all(|k| match self.printed_term.eval(k) {
            Ok(t) => series.summand(k) == &self.rho * t,
            Err(_) => false,
        })
    }

    /// Limit-level check: `rho · printed_lhs = limit − boundary`, exactly.
    pub fn value_matches(&self) -> bool {
        match generic_value(&self.params) {
            Some(v) => self.printed_lhs.scale(&SurdExpr::rational(self.rho.clone())) == v,
            None => false,
        }
    }
}

/// Both exact checks; `false` means the entry's data is inconsistent.
pub fn check_normalization(entry: &CatalogEntry) -> bool {
    entry.params.validate().is_empty() && entry.summands_match() && entry.value_matches()
}

/// Runs the Richardson verification of the generic identity, then compares
/// `series / rho` against the numeric printed value.
///
/// The returned report is in printed units: `approximation` is the scaled
/// series value and `target` the printed value.
pub fn verify_entry(entry: &CatalogEntry, prec: u32, tolerance: &BigReal) -> Result<EvalReport> {
    let started = Instant::now();
    let series = entry.params.instance()?;
    let generic = verify_identity(&series, prec, tolerance)?;
    if entry.rho.is_zero() {
        return Err(Error::Domain("rho = 0".into()));
    }
    let inv_rho = entry.rho.recip();
    let approximation = generic.approximation.mul_ratio(&inv_rho);
    let target = entry.printed_lhs.numeric(prec);
    let abs_error = (&approximation - &target).abs();
    let pass = generic.pass && abs_error <= *tolerance;
    Ok(EvalReport {
        params: entry.params.clone(),
        method: generic.method,
        work: generic.work,
        error_estimate: generic.error_estimate.mul_ratio(&inv_rho.abs()),
        tolerance: tolerance.clone(),
        pass,
        approximation,
        target,
        abs_error,
        wall_time: started.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::ratio;

    #[test]
    fn ids_unique_and_counted() {
        let entries = all_entries();
        let mut ids: Vec<_> = entries.iter().map(|e| e.id.as_str()).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), entries.len());
        assert_eq!(entries.len(), 140);
    }

    #[test]
    fn every_entry_normalizes() {
        for e in all_entries() {
            assert!(e.summands_match(), "{} summands", e.id);
            assert!(e.value_matches(), "{} value", e.id);
        }
    }

    #[test]
    fn stored_rho_matches_oracle() {
        for e in all_entries() {
            assert_eq!(derive_rho(&e.params, &e.printed_term).as_ref(), Some(&e.rho), "{}", e.id);
        }
    }

    #[test]
    fn spot_values() {
        let e9 = find_entry("t1.ex9").unwrap();
        assert_eq!(e9.rho, ratio(1, 2));
        assert_eq!(e9.printed_lhs, PrintedValue::pi_power(SurdExpr::integer(2), -2));
        let e14 = find_entry("t1.ex14").unwrap();
        assert_eq!(e14.printed_lhs, PrintedValue::pi_power(SurdExpr::rational(ratio(5, 6)), -2));
        let e29 = find_entry("t12.ex29").unwrap();
        assert_eq!(e29.rho, ratio(32, 9));
        let expected = PrintedValue::pi_power(SurdExpr::rational(ratio(9, 32)), 2)
            .plus(SurdExpr::rational(ratio(-9, 8)), 0);
        assert_eq!(e29.printed_lhs, expected);
        let e16 = find_entry("t1.ex16").unwrap();
        assert_eq!(e16.rho, ratio(7, 16));
        let scaled = e16.printed_lhs.scale(&SurdExpr::rational(e16.rho.clone()));
        assert_eq!(scaled, PrintedValue::pi_power(SurdExpr::from_terms(&[(2, 1, 2)]), -2));
    }

    #[test]
    fn corrupted_rho_fails() {
        let mut e = find_entry("t1.ex13").unwrap().clone();
        assert!(check_normalization(&e));
        e.rho *= ExactRational::from_integer(2.into());
        assert!(!check_normalization(&e));
    }

    #[test]
    fn printed_values_numeric() {
        let e9 = find_entry("t1.ex9").unwrap();
        assert!(e9.printed_lhs.numeric(128).to_string().starts_with("0.20264236728467554"));
        let c15 = find_entry("t12.cor15.m1").unwrap();
        assert!(c15.printed_lhs.numeric(128).to_string().starts_with("0.4280972450"));
    }
}
