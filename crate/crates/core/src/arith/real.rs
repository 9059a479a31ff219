use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ExactRational;

/// Binary floating-point number with an arbitrary-precision mantissa.
///
/// The value is `mant · 2^exp` with `|mant| < 2^prec`. Every primitive rounds
/// its exact result to nearest, so a single operation is off by at most one
/// unit in the last place; composite routines carry their own guard bits.
/// Binary operations produce the larger of the two operand precisions.
#[derive(Clone, Debug)]
pub struct BigReal {
    mant: BigInt,
    exp: i64,
    prec: u32,
}

fn round_shift(m: &BigInt, shift: u64) -> BigInt {
    let half = BigInt::one() << (shift - 1);
    let mag = (m.magnitude().clone() + half.magnitude()) >> shift;
    BigInt::from_biguint(if m.is_negative() { Sign::Minus } else { Sign::Plus }, mag)
}

impl BigReal {
    fn normalized(mant: BigInt, exp: i64, prec: u32) -> BigReal {
        let prec = prec.max(2);
        if mant.is_zero() {
            return BigReal { mant, exp: 0, prec };
        }
        let bits = mant.bits();
        if bits <= prec as u64 {
            return BigReal { mant, exp, prec };
        }
        let shift = bits - prec as u64;
        let mut m = round_shift(&mant, shift);
        let mut e = exp + shift as i64;
        if m.bits() > prec as u64 {
            m >>= 1;
            e += 1;
        }
        BigReal { mant: m, exp: e, prec }
    }

    pub fn zero(prec: u32) -> BigReal {
        BigReal { mant: BigInt::zero(), exp: 0, prec: prec.max(2) }
    }

    pub fn from_int(n: impl Into<BigInt>, prec: u32) -> BigReal {
        BigReal::normalized(n.into(), 0, prec)
    }

    /// `mant · 2^exp`, rounded to `prec` bits.
    pub fn from_parts(mant: BigInt, exp: i64, prec: u32) -> BigReal {
        BigReal::normalized(mant, exp, prec)
    }

    pub fn from_ratio(r: &ExactRational, prec: u32) -> BigReal {
        BigReal::quotient(r.numer().clone(), 0, r.denom(), prec)
    }

    pub fn from_f64(v: f64, prec: u32) -> BigReal {
        if v == 0.0 || !v.is_finite() {
            return BigReal::zero(prec);
        }
        let bits = v.to_bits();
        let sign = if v < 0.0 { -1 } else { 1 };
        let raw_exp = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (m, e) = if raw_exp == 0 {
            (frac, -1074)
        } else {
            (frac | (1u64 << 52), raw_exp - 1075)
        };
        BigReal::normalized(BigInt::from(m) * sign, e, prec)
    }

    /// `10^k` at the given precision.
    pub fn pow10(k: i32, prec: u32) -> BigReal {
        let p = BigInt::from(10).pow(k.unsigned_abs());
        if k >= 0 {
            BigReal::from_int(p, prec)
        } else {
            BigReal::quotient(BigInt::one(), 0, &p, prec)
        }
    }

    /// `(num · 2^exp) / den` rounded to `prec` bits, `den` nonzero.
    fn quotient(num: BigInt, exp: i64, den: &BigInt, prec: u32) -> BigReal {
        assert!(!den.is_zero(), "BigReal division by zero");
        if num.is_zero() {
            return BigReal::zero(prec);
        }
        let want = prec as i64 + 3;
        let shift = (want + den.bits() as i64 - num.bits() as i64).max(0);
        let (q, r) = (num << shift as u64).div_rem(den);
        // sticky bit keeps round-to-nearest honest when the quotient is truncated
        let q = if r.is_zero() { q << 1u32 } else { (q << 1u32) + q_sign(&r, den) };
        BigReal::normalized(q, exp - shift - 1, prec)
    }

    /// The exact rational value.
    pub fn to_ratio(&self) -> ExactRational {
        let m = ExactRational::from_integer(self.mant.clone());
        let two = BigInt::from(2).pow(self.exp.unsigned_abs() as u32);
        if self.exp >= 0 {
            m * ExactRational::from_integer(two)
        } else {
            m / ExactRational::from_integer(two)
        }
    }

    pub fn precision(&self) -> u32 {
        self.prec
    }

    pub fn with_precision(&self, prec: u32) -> BigReal {
        BigReal::normalized(self.mant.clone(), self.exp, prec)
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn abs(&self) -> BigReal {
        BigReal { mant: self.mant.abs(), exp: self.exp, prec: self.prec }
    }

    /// Exponent of the leading bit plus one, i.e. `|x| ∈ [2^(e−1), 2^e)`.
    /// Zero reports `i64::MIN`.
    pub fn magnitude_exp(&self) -> i64 {
        if self.is_zero() {
            i64::MIN
        } else {
            self.exp + self.mant.bits() as i64
        }
    }

    /// One unit in the last place at the current precision.
    pub fn ulp(&self) -> BigReal {
        let e = if self.is_zero() { -(self.prec as i64) } else { self.magnitude_exp() - self.prec as i64 };
        BigReal { mant: BigInt::one(), exp: e, prec: self.prec }
    }

    pub fn mul_int(&self, n: &BigInt) -> BigReal {
        BigReal::normalized(&self.mant * n, self.exp, self.prec)
    }

    pub fn div_int(&self, n: &BigInt) -> BigReal {
        BigReal::quotient(self.mant.clone(), self.exp, n, self.prec)
    }

    /// `self · num / den` with a single rounding.
    pub fn mul_div_int(&self, num: &BigInt, den: &BigInt) -> BigReal {
        BigReal::quotient(&self.mant * num, self.exp, den, self.prec)
    }

    pub fn mul_ratio(&self, r: &ExactRational) -> BigReal {
        self.mul_div_int(r.numer(), r.denom())
    }

    pub fn mul_pow2(&self, k: i64) -> BigReal {
        BigReal { mant: self.mant.clone(), exp: self.exp + k, prec: self.prec }
    }

    pub fn powi(&self, n: i32) -> BigReal {
        let mut result = BigReal::from_int(1, self.prec);
        let mut base = self.clone();
        let mut k = n.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        if n < 0 {
            BigReal::from_int(1, self.prec) / result
        } else {
            result
        }
    }

    pub fn sqrt(&self) -> BigReal {
        assert!(!self.is_negative(), "square root of a negative BigReal");
        if self.is_zero() {
            return self.clone();
        }
        let want = 2 * self.prec as i64 + 4;
        let mut shift = (want - self.mant.bits() as i64).max(0);
        if (self.exp - shift).rem_euclid(2) != 0 {
            shift += 1;
        }
        let m = &self.mant << shift as u64;
        let root = m.sqrt();
        let exact = &root * &root == m;
        let root = if exact { root << 1u32 } else { (root << 1u32) + 1 };
        BigReal::normalized(root, (self.exp - shift) / 2 - 1, self.prec)
    }

    /// Real `n`-th root of a positive number by Newton iteration.
    pub fn nth_root(&self, n: u32) -> BigReal {
        assert!(n >= 1);
        assert!(!self.is_negative(), "root of a negative BigReal");
        if n == 1 || self.is_zero() {
            return self.clone();
        }
        if n == 2 {
            return self.sqrt();
        }
        let work = self.prec + 16;
        let x = self.with_precision(work);
        // seed from the leading bits: x ≈ f · 2^e with f in [0.5, 1)
        let e = x.magnitude_exp();
        let f = x.mul_pow2(-e).to_f64();
        let seed_exp = e.div_euclid(n as i64);
        let rest = e.rem_euclid(n as i64);
        let seed = (f * 2f64.powi(rest as i32)).powf(1.0 / n as f64);
        let mut y = BigReal::from_f64(seed, work).mul_pow2(seed_exp);
        let nn = BigInt::from(n);
        let n1 = BigInt::from(n - 1);
        for _ in 0..200 {
            let next = (&y.mul_int(&n1) + &(&x / &y.powi(n as i32 - 1))).div_int(&nn);
            let delta = (&next - &y).abs();
            y = next;
            if delta.is_zero() || delta.magnitude_exp() < y.magnitude_exp() - work as i64 + 2 {
                break;
            }
        }
        y.with_precision(self.prec)
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let bits = self.mant.bits() as i64;
        let (m, e) = if bits > 60 {
            (round_shift(&self.mant, (bits - 60) as u64), self.exp + bits - 60)
        } else {
            (self.mant.clone(), self.exp)
        };
        let m = m.to_f64().unwrap_or(f64::NAN);
        if e > 1000 {
            m * 2f64.powi(1000) * 2f64.powi((e - 1000).min(1000) as i32)
        } else if e < -1000 {
            m * 2f64.powi(-1000) * 2f64.powi((e + 1000).max(-1000) as i32)
        } else {
            m * 2f64.powi(e as i32)
        }
    }

    /// `log10 |x|` as a float, `-inf` for zero.
    pub fn log10_abs(&self) -> f64 {
        if self.is_zero() {
            return f64::NEG_INFINITY;
        }
        let e = self.magnitude_exp();
        let f = self.abs().mul_pow2(-e).to_f64();
        f.log10() + e as f64 * std::f64::consts::LOG10_2
    }

    /// The leading `n` significant decimal digits of `|x|`, truncated, with the
    /// decimal exponent of the first one: `x ≈ 0.d₁d₂… · 10^(e+1)`.
    pub fn decimal_digits(&self, n: usize) -> (String, i64) {
        if self.is_zero() {
            return ("0".repeat(n.max(1)), 0);
        }
        let n = n.max(1) as i64;
        let mut e10 = self.log10_abs().floor() as i64;
        loop {
            let digits = self.scaled_floor(n - 1 - e10);
            let len = digits.to_string().len() as i64;
            if len > n {
                e10 += 1;
            } else if len < n {
                e10 -= 1;
            } else {
                return (digits.to_string(), e10);
            }
        }
    }

    /// `floor(|x| · 10^k)`.
    fn scaled_floor(&self, k: i64) -> BigInt {
        let mut num = self.mant.abs();
        let mut den = BigInt::one();
        let ten = BigInt::from(10).pow(k.unsigned_abs() as u32);
        if k >= 0 {
            num *= ten;
        } else {
            den *= ten;
        }
        if self.exp >= 0 {
            num <<= self.exp as u64;
        } else {
            den <<= (-self.exp) as u64;
        }
        num / den
    }

    /// Positional or scientific rendering with `digits` significant digits
    /// (truncated, not rounded).
    pub fn to_string_digits(&self, digits: usize) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let (d, e) = self.decimal_digits(digits);
        let sign = if self.is_negative() { "-" } else { "" };
        if (-6..21).contains(&e) {
            if e < 0 {
                format!("{sign}0.{}{}", "0".repeat((-e - 1) as usize), d.trim_end_matches('0'))
                    .trim_end_matches('.')
                    .to_string()
            } else if (e as usize) + 1 >= d.len() {
                format!("{sign}{}{}", d, "0".repeat(e as usize + 1 - d.len()))
            } else {
                let (int, frac) = d.split_at(e as usize + 1);
                let frac = frac.trim_end_matches('0');
                if frac.is_empty() {
                    format!("{sign}{int}")
                } else {
                    format!("{sign}{int}.{frac}")
                }
            }
        } else {
            let (head, tail) = d.split_at(1);
            let tail = tail.trim_end_matches('0');
            if tail.is_empty() {
                format!("{sign}{head}e{e}")
            } else {
                format!("{sign}{head}.{tail}e{e}")
            }
        }
    }

    /// Number of decimal digits the binary precision supports.
    pub fn decimal_precision(&self) -> usize {
        ((self.prec as f64) * std::f64::consts::LOG10_2).floor().max(1.0) as usize
    }
}

fn q_sign(r: &BigInt, d: &BigInt) -> BigInt {
    // remainder has the sign of the dividend; push the sticky bit away from zero
    if r.is_negative() != d.is_negative() {
        BigInt::from(-1)
    } else {
        BigInt::one()
    }
}

impl fmt::Display for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or_else(|| self.decimal_precision());
        f.write_str(&self.to_string_digits(digits))
    }
}

impl PartialEq for BigReal {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for BigReal {}

impl PartialOrd for BigReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BigReal {
    fn cmp(&self, other: &Self) -> Ordering {
        let sa = self.mant.sign();
        let sb = other.mant.sign();
        if sa != sb || sa == Sign::NoSign {
            return sa.cmp(&sb);
        }
        let ta = self.magnitude_exp();
        let tb = other.magnitude_exp();
        let mag = if ta != tb {
            ta.cmp(&tb)
        } else {
            let e = self.exp.min(other.exp);
            let a = self.mant.magnitude() << (self.exp - e) as u64;
            let b = other.mant.magnitude() << (other.exp - e) as u64;
            a.cmp(&b)
        };
        if sa == Sign::Minus {
            mag.reverse()
        } else {
            mag
        }
    }
}

impl Neg for &BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal { mant: -&self.mant, exp: self.exp, prec: self.prec }
    }
}

impl Neg for BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        -&self
    }
}

impl Add for &BigReal {
    type Output = BigReal;
    fn add(self, rhs: &BigReal) -> BigReal {
        let prec = self.prec.max(rhs.prec);
        if rhs.is_zero() {
            return self.with_precision(prec);
        }
        if self.is_zero() {
            return rhs.with_precision(prec);
        }
        // an addend entirely below the rounding position only matters as a sticky bit
        let gap = prec as i64 + 3;
        let (big, small) = if self.magnitude_exp() >= rhs.magnitude_exp() { (self, rhs) } else { (rhs, self) };
        if small.magnitude_exp() < big.magnitude_exp() - gap {
            let floor = big.magnitude_exp() - gap - 2;
            let sticky = BigInt::from(small.mant.signum());
            let m = (&big.mant << (big.exp - floor) as u64) + sticky;
            return BigReal::normalized(m, floor, prec);
        }
        let e = self.exp.min(rhs.exp);
        let a = &self.mant << (self.exp - e) as u64;
        let b = &rhs.mant << (rhs.exp - e) as u64;
        BigReal::normalized(a + b, e, prec)
    }
}

impl Sub for &BigReal {
    type Output = BigReal;
    fn sub(self, rhs: &BigReal) -> BigReal {
        self + &(-rhs)
    }
}

impl Mul for &BigReal {
    type Output = BigReal;
    fn mul(self, rhs: &BigReal) -> BigReal {
        BigReal::normalized(&self.mant * &rhs.mant, self.exp + rhs.exp, self.prec.max(rhs.prec))
    }
}

impl Div for &BigReal {
    type Output = BigReal;
    fn div(self, rhs: &BigReal) -> BigReal {
        BigReal::quotient(self.mant.clone(), self.exp - rhs.exp, &rhs.mant, self.prec.max(rhs.prec))
    }
}

macro_rules! forward_owned {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for BigReal {
            type Output = BigReal;
            fn $f(self, rhs: BigReal) -> BigReal { (&self).$f(&rhs) }
        }
        impl $tr<&BigReal> for BigReal {
            type Output = BigReal;
            fn $f(self, rhs: &BigReal) -> BigReal { (&self).$f(rhs) }
        }
        impl $tr<BigReal> for &BigReal {
            type Output = BigReal;
            fn $f(self, rhs: BigReal) -> BigReal { self.$f(&rhs) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul, Div div);
