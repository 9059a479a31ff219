use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

use super::{BigReal, ExactRational};

/// Square-free divisors of 30; a basis of `ℚ(√2, √3, √5)` over `ℚ`.
pub const RADICANDS: [u32; 8] = [1, 2, 3, 5, 6, 10, 15, 30];

/// Exact element of `ℚ(√2, √3, √5)`, stored as `Σ c_d √d` over [`RADICANDS`].
///
/// Only nonzero coefficients are kept, so derived equality is equality of
/// field elements.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SurdExpr {
    coeffs: BTreeMap<u32, ExactRational>,
}

fn squarefree_split(n: u64) -> (u64, u64) {
    // n = f² · s with s square-free
    let mut f = 1;
    let mut s = 1;
    let mut rest = n;
    let mut p = 2;
    while p * p <= rest {
        let mut e = 0;
        while rest % p == 0 {
            rest /= p;
            e += 1;
        }
        f *= p.pow(e / 2);
        if e % 2 == 1 {
            s *= p;
        }
        p += 1;
    }
    (f, s * rest)
}

impl SurdExpr {
    pub fn zero() -> SurdExpr {
        SurdExpr::default()
    }

    pub fn one() -> SurdExpr {
        SurdExpr::rational(ExactRational::one())
    }

    pub fn rational(c: ExactRational) -> SurdExpr {
        SurdExpr::term(c, 1).expect("1 is a basis radicand")
    }

    pub fn integer(n: i64) -> SurdExpr {
        SurdExpr::rational(ExactRational::from_integer(n.into()))
    }

    /// `c · √n`. Square factors of `n` are pulled out; the remaining
    /// square-free part must be one of [`RADICANDS`].
    pub fn term(c: ExactRational, n: u64) -> Result<SurdExpr> {
        if n == 0 {
            return Ok(SurdExpr::zero());
        }
        let (f, s) = squarefree_split(n);
        if !RADICANDS.contains(&(s as u32)) || s > u32::MAX as u64 {
            return Err(Error::UnsupportedRadicand(n));
        }
        let mut coeffs = BTreeMap::new();
        let c = c * ExactRational::from_integer(f.into());
        if !c.is_zero() {
            coeffs.insert(s as u32, c);
        }
        Ok(SurdExpr { coeffs })
    }

    pub fn sqrt(n: u64) -> Result<SurdExpr> {
        SurdExpr::term(ExactRational::one(), n)
    }

    /// Builds `Σ (num/den) √d` from literal triples; panics on a bad radicand.
    pub fn from_terms(terms: &[(u64, i64, i64)]) -> SurdExpr {
        terms
            .iter()
            .map(|&(d, n, q)| {
                SurdExpr::term(ExactRational::new(n.into(), q.into()), d).expect("basis radicand")
            })
            .fold(SurdExpr::zero(), |acc, t| &acc + &t)
    }

    pub fn coefficient(&self, radicand: u32) -> ExactRational {
        self.coeffs.get(&radicand).cloned().unwrap_or_else(ExactRational::zero)
    }

    /// Nonzero `(radicand, coefficient)` pairs in increasing radicand order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &ExactRational)> {
        self.coeffs.iter().map(|(d, c)| (*d, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn as_rational(&self) -> Option<ExactRational> {
        match self.coeffs.len() {
            0 => Some(ExactRational::zero()),
            1 => self.coeffs.get(&1).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, c: &ExactRational) -> SurdExpr {
        if c.is_zero() {
            return SurdExpr::zero();
        }
        SurdExpr { coeffs: self.coeffs.iter().map(|(d, v)| (*d, v * c)).collect() }
    }

    pub fn pow(&self, n: u32) -> SurdExpr {
        (0..n).fold(SurdExpr::one(), |acc, _| &acc * self)
    }

    /// Image under the field automorphism flipping the signs of the chosen
    /// generators `√2`, `√3`, `√5`.
    fn conjugate(&self, flip: [bool; 3]) -> SurdExpr {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(d, c)| {
                let odd = [2, 3, 5]
                    .iter()
                    .zip(flip)
                    .filter(|(p, f)| *f && d % **p == 0)
                    .count();
                (*d, if odd % 2 == 1 { -c } else { c.clone() })
            })
            .collect();
        SurdExpr { coeffs }
    }

    /// Multiplicative inverse via the product of the seven nontrivial
    /// conjugates, whose product with `self` is the (rational) norm.
    pub fn inverse(&self) -> Result<SurdExpr> {
        if self.is_zero() {
            return Err(Error::SurdDivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(SurdExpr::rational(r.recip()));
        }
        let mut others = SurdExpr::one();
        for mask in 1..8u8 {
            let flip = [mask & 1 != 0, mask & 2 != 0, mask & 4 != 0];
            others = &others * &self.conjugate(flip);
        }
        let norm = (self * &others)
            .as_rational()
            .expect("norm of a field element is rational");
        Ok(others.scale(&norm.recip()))
    }

    pub fn checked_div(&self, rhs: &SurdExpr) -> Result<SurdExpr> {
        Ok(self * &rhs.inverse()?)
    }

    /// Numeric value; square roots come from an integer Newton square root with
    /// 16 guard bits.
    pub fn eval(&self, prec: u32) -> BigReal {
        let work = prec + 16;
        let mut acc = BigReal::zero(work);
        for (d, c) in &self.coeffs {
            let root = if *d == 1 {
                BigReal::from_int(1, work)
            } else {
                BigReal::from_int(*d, work).sqrt()
            };
            acc = &acc + &root.mul_ratio(c);
        }
        acc.with_precision(prec)
    }

    /// Common-denominator split `(Σ n_d √d, D)` with integer `n_d`.
    pub fn integer_form(&self) -> (Vec<(u32, BigInt)>, BigInt) {
        let den = self
            .coeffs
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let nums = self
            .coeffs
            .iter()
            .map(|(d, c)| (*d, c.numer() * (&den / c.denom())))
            .collect();
        (nums, den)
    }
}

impl fmt::Display for SurdExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (d, c)) in self.coeffs.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            match (*d, mag.is_one()) {
                (1, _) => write!(f, "{mag}")?,
                (d, true) => write!(f, "√{d}")?,
                (d, false) => write!(f, "{mag}·√{d}")?,
            }
        }
        Ok(())
    }
}

impl Add for &SurdExpr {
    type Output = SurdExpr;
    fn add(self, rhs: &SurdExpr) -> SurdExpr {
        let mut coeffs = self.coeffs.clone();
        for (d, c) in &rhs.coeffs {
            let v = coeffs.entry(*d).or_insert_with(ExactRational::zero);
            *v += c;
            if v.is_zero() {
                coeffs.remove(d);
            }
        }
        SurdExpr { coeffs }
    }
}

impl Neg for &SurdExpr {
    type Output = SurdExpr;
    fn neg(self) -> SurdExpr {
        SurdExpr { coeffs: self.coeffs.iter().map(|(d, c)| (*d, -c)).collect() }
    }
}

impl Sub for &SurdExpr {
    type Output = SurdExpr;
    fn sub(self, rhs: &SurdExpr) -> SurdExpr {
        self + &(-rhs)
    }
}

impl Mul for &SurdExpr {
    type Output = SurdExpr;
    /// `√a · √b = g · √(ab/g²)` with `g = gcd(a, b)` for square-free `a`, `b`.
    fn mul(self, rhs: &SurdExpr) -> SurdExpr {
        let mut out = SurdExpr::zero();
        for (a, ca) in &self.coeffs {
            for (b, cb) in &rhs.coeffs {
                let g = a.gcd(b);
                let d = a / g * (b / g);
                let c = ca * cb * ExactRational::from_integer(g.into());
                out = &out + &SurdExpr { coeffs: BTreeMap::from([(d, c)]) };
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for SurdExpr {
            type Output = SurdExpr;
            fn $f(self, rhs: SurdExpr) -> SurdExpr { (&self).$f(&rhs) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);
