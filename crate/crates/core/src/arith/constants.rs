use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

use super::{BigReal, ExactRational, SurdExpr};

/// `2^w · arctan(1/n)` truncated, by the alternating Taylor series in fixed
/// point. Returns the value and the number of terms summed; each term carries
/// at most two units of truncation error.
fn arctan_inv_fixed(n: u32, w: u64) -> (BigInt, u64) {
    let n = BigInt::from(n);
    let n2 = &n * &n;
    let mut power = (BigInt::one() << w) / &n;
    let mut sum = power.clone();
    let mut k: u64 = 1;
    loop {
        power /= &n2;
        if power.is_zero() {
            break;
        }
        let term = &power / (2 * k + 1);
        if k % 2 == 1 {
            sum -= term;
        } else {
            sum += term;
        }
        k += 1;
    }
    (sum, k)
}

/// π from Machin's formula `π/4 = 4 arctan(1/5) − arctan(1/239)`.
///
/// Kept independent of every series in this crate so it can act as the
/// reference for checking them. The fixed-point truncation error is at most
/// `2·(terms₅·16 + terms₂₃₉·4 + 20)` units of `2^−w`; the guard bits keep it
/// below `2^−(prec+8)`.
pub fn pi_reference(prec: u32) -> BigReal {
    let prec = prec.max(16);
    let guard = 8 + 8 + 64 - (prec as u64 + 64).leading_zeros() as u64;
    let w = prec as u64 + guard;
    let (a5, t5) = arctan_inv_fixed(5, w);
    let (a239, t239) = arctan_inv_fixed(239, w);
    let pi = (a5 * 16) - (a239 * 4);
    debug_assert!(2 * (16 * t5 + 4 * t239 + 20) < 1u64 << (guard - 8));
    BigReal::from_parts(pi, -(w as i64), prec)
}

fn half() -> ExactRational {
    ExactRational::new(1.into(), 2.into())
}

fn check_unit_interval(x: &ExactRational) -> Result<()> {
    if x.is_positive() && x < &ExactRational::one() {
        Ok(())
    } else {
        Err(Error::Domain(x.to_string()))
    }
}

/// Exact `sin(πx)` when it lies in `ℚ(√2, √3, √5)` with a denominator among
/// 2, 3, 4, 6, 10, 12. Other rationals in `(0, 1)` give `None`.
pub fn sin_pi_exact(x: &ExactRational) -> Result<Option<SurdExpr>> {
    check_unit_interval(x)?;
    let x = if x > &half() { ExactRational::one() - x } else { x.clone() };
    let s = SurdExpr::from_terms;
    let value = match (x.numer().to_i64(), x.denom().to_i64()) {
        (Some(1), Some(2)) => s(&[(1, 1, 1)]),
        (Some(1), Some(3)) => s(&[(3, 1, 2)]),
        (Some(1), Some(4)) => s(&[(2, 1, 2)]),
        (Some(1), Some(6)) => s(&[(1, 1, 2)]),
        (Some(1), Some(10)) => s(&[(5, 1, 4), (1, -1, 4)]),
        (Some(3), Some(10)) => s(&[(5, 1, 4), (1, 1, 4)]),
        (Some(1), Some(12)) => s(&[(6, 1, 4), (2, -1, 4)]),
        (Some(5), Some(12)) => s(&[(6, 1, 4), (2, 1, 4)]),
        _ => return Ok(None),
    };
    Ok(Some(value))
}

/// `sin(πx)` for rational `x ∈ (0, 1)`.
///
/// Reduces to `sin(πy)` or `cos(πy)` with `y ∈ [0, 1/4]` and sums the Taylor
/// series at 32 guard bits, using [`pi_reference`] for π.
pub fn sin_pi_numeric(x: &ExactRational, prec: u32) -> Result<BigReal> {
    check_unit_interval(x)?;
    let quarter = ExactRational::new(1.into(), 4.into());
    let x = if x > &half() { ExactRational::one() - x } else { x.clone() };
    let (y, use_cos) = if x <= quarter { (x, false) } else { (half() - x, true) };
    let work = prec + 32;
    if y.is_zero() {
        return Ok(BigReal::from_int(if use_cos { 1 } else { 0 }, prec));
    }
    let t = pi_reference(work).mul_ratio(&y);
    let t2 = &t * &t;
    let floor = -(work as i64) - 4;
    let (mut term, mut k) = if use_cos { (BigReal::from_int(1, work), 0u64) } else { (t, 1u64) };
    let mut sum = term.clone();
    loop {
        let d = BigInt::from((k + 1) * (k + 2));
        term = -(&t2 * &term).div_int(&d);
        k += 2;
        if term.is_zero() || term.magnitude_exp() < floor {
            break;
        }
        sum = &sum + &term;
    }
    Ok(sum.with_precision(prec))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::ratio;

    const PI_100: &str =
        "3.141592653589793238462643383279502884197169399375105820974944592307816406286208998628034825342117067";

    #[test]
    fn machin_digits() {
        let pi = pi_reference(64);
        assert!(pi.to_string().starts_with("3.141592653589793238"));
        let pi16 = pi_reference(16);
        assert!((pi16.to_f64() - std::f64::consts::PI).abs() < 2f64.powi(-14));
        let pi400 = pi_reference(400);
        assert_eq!(&pi400.to_string_digits(100), PI_100);
    }

    #[test]
    fn machin_self_consistent() {
        for p in [16u32, 53, 100, 256, 512] {
            let a = pi_reference(p).with_precision(4 * p);
            let b = pi_reference(2 * p).with_precision(4 * p);
            let diff = (&a - &b).abs();
            assert!(diff.is_zero() || diff.magnitude_exp() <= -(p as i64 - 8) + 2, "p={p}");
        }
    }

    #[test]
    fn exact_sines() {
        assert_eq!(sin_pi_exact(&ratio(1, 2)).unwrap(), Some(SurdExpr::one()));
        assert_eq!(
            sin_pi_exact(&ratio(1, 10)).unwrap(),
            Some(SurdExpr::from_terms(&[(5, 1, 4), (1, -1, 4)]))
        );
        assert_eq!(
            sin_pi_exact(&ratio(11, 12)).unwrap(),
            Some(SurdExpr::from_terms(&[(6, 1, 4), (2, -1, 4)]))
        );
        assert_eq!(sin_pi_exact(&ratio(1, 7)).unwrap(), None);
        assert!(matches!(sin_pi_exact(&ratio(3, 2)), Err(Error::Domain(_))));
        assert!(sin_pi_exact(&ratio(0, 1)).is_err());
    }

    #[test]
    fn numeric_sines() {
        assert_eq!(sin_pi_numeric(&ratio(1, 2), 64).unwrap().to_f64(), 1.0);
        let s6 = sin_pi_numeric(&ratio(1, 6), 128).unwrap();
        assert!((&s6 - &BigReal::from_ratio(&ratio(1, 2), 128)).abs().magnitude_exp() <= -124);
        let s5 = sin_pi_numeric(&ratio(1, 5), 64).unwrap();
        assert!(s5.to_string().starts_with("0.587785252292"));
        assert!(sin_pi_numeric(&ratio(1, 1), 64).is_err());
    }

    #[test]
    fn exact_and_numeric_agree() {
        for (a, b) in [
            (1, 2), (1, 3), (2, 3), (1, 4), (3, 4), (1, 6), (5, 6), (1, 10), (9, 10),
            (3, 10), (7, 10), (1, 12), (11, 12), (5, 12), (7, 12),
        ] {
            let x = ratio(a, b);
            let exact = sin_pi_exact(&x).unwrap().unwrap().eval(128);
            let numeric = sin_pi_numeric(&x, 128).unwrap();
            let diff = (&exact - &numeric).abs();
            assert!(diff.is_zero() || diff.magnitude_exp() <= -120, "x={x} diff={diff}");
        }
    }
}
