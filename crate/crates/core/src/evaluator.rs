//! Summation of a [`SeriesInstance`]: exact partial sums, the telescoped
//! oracle, direct floating summation and Richardson extrapolation of `τ_n`.

use std::fmt;
use std::time::Duration;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use web_time::Instant;

use crate::arith::{BigReal, ExactRational};
use crate::error::{Error, Result};
use crate::family::{SeriesInstance, SeriesParams};
use crate::poly::Poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Direct,
    Telescoped,
    Richardson,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Direct => "direct",
            Method::Telescoped => "telescoped",
            Method::Richardson => "richardson",
        })
    }
}

/// Outcome of one numeric evaluation.
///
/// `work` counts terms for [`Method::Direct`] and extrapolation nodes for
/// [`Method::Richardson`]. `pass` is `abs_error ≤ tolerance`; when no
/// tolerance is supplied the error estimate stands in for it, so `pass`
/// then reads "the estimate was honest".
#[derive(Clone, Debug)]
pub struct EvalReport {
    pub params: SeriesParams,
    pub method: Method,
    pub work: u64,
    pub approximation: BigReal,
    pub target: BigReal,
    pub abs_error: BigReal,
    pub error_estimate: BigReal,
    pub tolerance: BigReal,
    pub pass: bool,
    pub wall_time: Duration,
}

impl EvalReport {
    fn new(
        params: &SeriesParams,
        method: Method,
        work: u64,
        approximation: BigReal,
        target: BigReal,
        error_estimate: BigReal,
        started: Instant,
    ) -> EvalReport {
        let abs_error = (&approximation - &target).abs();
        EvalReport {
            params: params.clone(),
            method,
            work,
            pass: abs_error <= error_estimate,
            tolerance: error_estimate.clone(),
            approximation,
            target,
            abs_error,
            error_estimate,
            wall_time: started.elapsed(),
        }
    }

    /// Re-judges the report against an explicit absolute tolerance.
    pub fn with_tolerance(mut self, tolerance: &BigReal) -> EvalReport {
        self.pass = self.abs_error <= *tolerance;
        self.tolerance = tolerance.clone();
        self
    }
}

/// Node schedule `n = base·2^t`, `t = 0..levels`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Schedule {
    pub base: u64,
    pub levels: usize,
}

impl Schedule {
    pub const DEFAULT_BASE: u64 = 16;

    /// Levels sufficient for an absolute error of `10^−digits` on the
    /// catalog at base 16. Measured over every entry, the worst error after
    /// `L` levels is about `10^−(0.13L² + 0.6L − 0.9)`; one digit of margin
    /// is added.
    pub fn for_digits(digits: u32) -> Schedule {
        let reach = |l: usize| {
            let l = l as f64;
            0.13 * l * l + 0.6 * l - 0.9
        };
        let levels = (4..40).find(|&l| reach(l) >= digits as f64 + 1.0).unwrap_or(40);
        Schedule { base: Schedule::DEFAULT_BASE, levels }
    }

    pub fn nodes(&self) -> impl Iterator<Item = u64> + '_ {
        (0..self.levels).map(|t| self.base << t)
    }

    fn check(&self) -> Result<()> {
        if self.levels < 2 || self.base < 4 {
            return Err(Error::Schedule { base: self.base, levels: self.levels });
        }
        Ok(())
    }

    /// Working precision: requested bits, 32 guard bits and the growth of the
    /// `O(n)` recurrence.
    pub fn working_precision(&self, prec: u32) -> u32 {
        let span = self.levels as f64 * self.base as f64 * 2f64.powi(self.levels as i32);
        prec + 32 + span.log2().ceil() as u32
    }
}

/// `Σ_{k=0}^{N} term_k`, built with the incremental prefactor ratio.
pub fn partial_sum_exact(series: &SeriesInstance, n: u64) -> ExactRational {
    let mut pre = series.prefactor(0);
    let mut sum = ExactRational::zero();
    for k in 0..=n {
        sum += &pre * series.bracket(&ExactRational::from_integer(k.into()));
        if k < n {
            let (num, den) = series.prefactor_ratio_parts(k);
            pre = pre * ExactRational::new(num, den);
        }
    }
    sum
}

/// `τ_N − τ_{−1}`: the closed form of the partial sum.
pub fn telescoped_partial_sum(series: &SeriesInstance, n: u64) -> ExactRational {
    series.tau(n) - series.boundary()
}

/// Series limit minus boundary, i.e. the value of the infinite sum.
pub fn series_target(series: &SeriesInstance, prec: u32) -> BigReal {
    let work = prec + 8;
    let limit = series.limit_value().numeric(work);
    (&limit - &BigReal::from_ratio(&series.boundary(), work)).with_precision(prec)
}

/// Integer coefficients over a common denominator.
fn integer_poly(poly: &Poly) -> (Vec<BigInt>, BigInt) {
    let den = poly.0.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let coeffs = poly.0.iter().map(|c| c.numer() * (&den / c.denom())).collect();
    (coeffs, den)
}

/// Floating summation of the first `max_terms` terms.
///
/// The terms fall off like `C/k²`, so the tail after `N` terms is close to
/// `C/N`; `C` is fitted over the last decade of terms.
pub fn sum_direct(series: &SeriesInstance, prec: u32, max_terms: u64) -> Result<EvalReport> {
    assert!(max_terms >= 1, "max_terms must be positive");
    let started = Instant::now();
    let mut pre = BigReal::from_ratio(&series.prefactor(0), prec);
    let mut sum = BigReal::zero(prec);
    let decade_start = (max_terms / 10).max(1);
    let (mut fit_terms, mut fit_weights) = (0f64, 0f64);
    let mut rounding = 0f64;
    let (bracket, bracket_den) = integer_poly(&series.bracket_poly());
    for k in 0..max_terms {
        let k_int = BigInt::from(k);
        let value = bracket.iter().rev().fold(BigInt::zero(), |acc, c| acc * &k_int + c);
        let term = pre.mul_div_int(&value, &bracket_den);
        let t = term.to_f64();
        rounding += t.abs() * (2 * k + 2) as f64;
        if k >= decade_start {
            fit_terms += t;
            fit_weights += 1.0 / (k as f64 * k as f64);
        }
        sum = &sum + &term;
        if k + 1 < max_terms {
            let (num, den) = series.prefactor_ratio_parts(k);
            pre = pre.mul_div_int(&num, &den);
        }
    }
    let truncation = if fit_weights > 0.0 {
        // C/N is the leading tail term only; the margin covers the O(1/N²) remainder
        1.25 * (fit_terms / fit_weights).abs() / max_terms as f64
    } else {
        pre.to_f64().abs().max(sum.to_f64().abs())
    };
    rounding = (rounding + max_terms as f64 * sum.to_f64().abs()) * 2f64.powi(-(prec as i32));
    if rounding >= truncation {
        return Err(Error::PrecisionExhausted { rounding, truncation });
    }
    let target = series_target(series, prec);
    Ok(EvalReport::new(
        series.params(),
        Method::Direct,
        max_terms,
        sum,
        target,
        BigReal::from_f64(truncation + rounding, prec),
        started,
    ))
}

/// `τ_n` at every node of the schedule, from one pass of the `τ` ratio
/// recurrence at the given precision.
pub fn tau_at_nodes(series: &SeriesInstance, schedule: &Schedule, prec: u32) -> Vec<BigReal> {
    let mut out = Vec::with_capacity(schedule.levels);
    let mut tau = BigReal::from_ratio(&series.tau(0), prec);
    let mut nodes = schedule.nodes().peekable();
    let last = schedule.base << (schedule.levels - 1);
    for k in 1..=last {
        let (num, den) = series.tau_ratio_parts(k);
        tau = tau.mul_div_int(&num, &den);
        if nodes.peek() == Some(&k) {
            out.push(tau.clone());
            nodes.next();
        }
    }
    out
}

/// Richardson table over values at `n, 2n, 4n, …` assuming an expansion in
/// integer powers of `1/n`. Returns the diagonal `R[t][t]`.
pub fn richardson_diagonal(values: &[BigReal]) -> Vec<BigReal> {
    let mut prev: Vec<BigReal> = Vec::new();
    let mut diagonal = Vec::with_capacity(values.len());
    for v in values {
        let mut row = vec![v.clone()];
        for j in 1..=prev.len() {
            let factor = BigReal::from_int((1u64 << j) - 1, v.precision());
            let step = &(&row[j - 1] - &prev[j - 1]) / &factor;
            row.push(&row[j - 1] + &step);
        }
        diagonal.push(row.last().unwrap().clone());
        prev = row;
    }
    diagonal
}

/// Sum of `|weights|` in the Richardson combination of `levels` values; bounds
/// how much node rounding errors are amplified.
fn richardson_amplification(levels: usize) -> f64 {
    (1..levels).map(|j| {
        let p = 2f64.powi(j as i32);
        (p + 1.0) / (p - 1.0)
    }).product()
}

/// Extrapolates `τ_n → lim` and subtracts the boundary: the value of the
/// infinite series. The error estimate is the gap between the last two
/// diagonal entries of the Richardson table.
pub fn richardson_limit(
    series: &SeriesInstance,
    base: u64,
    levels: usize,
    prec: u32,
) -> Result<EvalReport> {
    let schedule = Schedule { base, levels };
    schedule.check()?;
    let started = Instant::now();
    let work = schedule.working_precision(prec);
    let taus = tau_at_nodes(series, &schedule, work);
    let diagonal = richardson_diagonal(&taus);
    let best = &diagonal[levels - 1];
    let truncation = (best - &diagonal[levels - 2]).abs();
    let n_max = (base << (levels - 1)) as f64;
    let scale = taus.last().map(|t| t.abs().to_f64()).unwrap_or(1.0).max(1.0);
    let rounding = richardson_amplification(levels) * 2.0 * n_max * scale * 2f64.powi(-(work as i32));
    let truncation_f = truncation.to_f64();
    if rounding >= truncation_f && !truncation.is_zero() && rounding > 2f64.powi(-(prec as i32)) {
        return Err(Error::PrecisionExhausted { rounding, truncation: truncation_f });
    }
    let boundary = BigReal::from_ratio(&series.boundary(), work);
    let approximation = (best - &boundary).with_precision(prec);
    let estimate = (&truncation + &BigReal::from_f64(rounding, work)).with_precision(prec);
    let target = series_target(series, prec);
    Ok(EvalReport::new(
        series.params(),
        Method::Richardson,
        levels as u64,
        approximation,
        target,
        estimate,
        started,
    ))
}

/// Checks the full identity `series + boundary = limit` through the
/// Richardson path, with a schedule sized for the tolerance.
pub fn verify_identity(series: &SeriesInstance, prec: u32, tolerance: &BigReal) -> Result<EvalReport> {
    let digits = (-tolerance.log10_abs()).ceil().max(1.0) as u32;
    let schedule = Schedule::for_digits(digits);
    let report = richardson_limit(series, schedule.base, schedule.levels, prec)?;
    Ok(report.with_tolerance(tolerance))
}

/// Compares an externally computed series value with the target.
pub fn judge(series: &SeriesInstance, approximation: BigReal, prec: u32, tolerance: &BigReal) -> EvalReport {
    let target = series_target(series, prec);
    EvalReport::new(
        series.params(),
        Method::Telescoped,
        0,
        approximation,
        target,
        BigReal::zero(prec),
        Instant::now(),
    )
    .with_tolerance(tolerance)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::ratio;
    use crate::family::FamilyId;

    fn inst(family: FamilyId, m: usize, x: ExactRational, p: i64, q: i64, r: i64) -> SeriesInstance {
        SeriesParams::uniform(family, m, x, p, q, r).instance().unwrap()
    }

    #[test]
    fn exact_partial_sums() {
        let s = inst(FamilyId::T1, 1, ratio(1, 2), 0, 0, 0);
        assert_eq!(partial_sum_exact(&s, 0), ratio(1, 4));
        assert_eq!(partial_sum_exact(&s, 1), ratio(9, 32));
        assert_eq!(telescoped_partial_sum(&s, 1), ratio(9, 32));
        let b = inst(FamilyId::T1, 1, ratio(1, 2), 1, 0, 1);
        assert_eq!(telescoped_partial_sum(&b, 0), b.tau(0) - ratio(1, 2));
        assert_eq!(partial_sum_exact(&b, 0), b.summand(0));
        let c = inst(FamilyId::T12, 1, ratio(1, 2), 0, 0, 0);
        assert_eq!(telescoped_partial_sum(&c, 0), ratio(8, 3) - ratio(2, 1));
        assert_eq!(partial_sum_exact(&c, 0), ratio(2, 3));
    }

    #[test]
    fn schedule_for_digits() {
        assert_eq!(Schedule::for_digits(10).levels, 8);
        assert_eq!(Schedule::for_digits(15).levels, 10);
        assert!(Schedule::for_digits(1).levels >= 4);
        let s = Schedule { base: 16, levels: 3 };
        assert_eq!(s.nodes().collect::<Vec<_>>(), vec![16, 32, 64]);
    }

    #[test]
    fn direct_single_term() {
        let s = inst(FamilyId::T1, 1, ratio(1, 2), 0, 0, 0);
        let r = sum_direct(&s, 128, 1).unwrap();
        assert_eq!(r.approximation, BigReal::from_ratio(&ratio(1, 4), 128));
        assert_eq!(r.work, 1);
    }

    #[test]
    fn direct_reaches_one_over_pi() {
        let s = inst(FamilyId::T1, 1, ratio(1, 2), 0, 0, 0);
        let r = sum_direct(&s, 128, 10_000).unwrap();
        assert!(r.abs_error.to_f64() < 1e-3);
        assert!(r.target.to_string().starts_with("0.3183098861"));
        assert!(r.pass, "estimate {} error {}", r.error_estimate, r.abs_error);
    }

    #[test]
    fn direct_precision_exhausted() {
        let s = inst(FamilyId::T1, 1, ratio(1, 2), 0, 0, 0);
        assert!(matches!(sum_direct(&s, 16, 5_000), Err(Error::PrecisionExhausted { .. })));
    }

    #[test]
    fn richardson_one_over_pi() {
        let s = inst(FamilyId::T1, 1, ratio(1, 2), 0, 0, 0);
        let r = richardson_limit(&s, 16, 9, 256).unwrap();
        assert!(r.abs_error.to_f64() < 1e-12, "{}", r.abs_error);
        assert!(r.pass);
    }

    #[test]
    fn richardson_coarse_schedule() {
        let s = inst(FamilyId::T1, 2, ratio(1, 2), 0, 0, 0);
        let r = richardson_limit(&s, 4, 2, 128).unwrap();
        assert!(r.error_estimate.to_f64() > 1e-4);
        assert!(matches!(richardson_limit(&s, 2, 5, 128), Err(Error::Schedule { .. })));
        assert!(matches!(richardson_limit(&s, 16, 1, 128), Err(Error::Schedule { .. })));
    }

    #[test]
    fn corrupted_boundary_fails() {
        let s = inst(FamilyId::T1, 1, ratio(1, 2), 0, 0, 0);
        let tol = BigReal::pow10(-10, 64);
        let good = verify_identity(&s, 128, &tol).unwrap();
        assert!(good.pass);
        let shifted = &good.approximation + &BigReal::from_int(1, 128);
        assert!(!judge(&s, shifted, 128, &tol).pass);
    }
}
