use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};

/// Arbitrary-precision rational in lowest terms with a positive denominator.
pub type ExactRational = BigRational;

/// Parses `"a/b"` or `"a"` into lowest terms.
pub fn parse_rational(s: &str) -> Result<ExactRational> {
    let err = || Error::ParseRational(s.to_string());
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err())?;
    let den: BigInt = den.parse().map_err(|_| err())?;
    if den == BigInt::from(0) {
        return Err(err());
    }
    Ok(BigRational::new(num, den))
}

/// Canonical text form: `"-3/7"`, or just `"5"` for integers.
pub fn rational_string(r: &ExactRational) -> String {
    r.to_string()
}

#[cfg(test)]
pub(crate) fn ratio(n: i64, d: i64) -> ExactRational {
    BigRational::new(n.into(), d.into())
}

#[cfg(test)]
pub(crate) fn int(n: i64) -> ExactRational {
    BigRational::from_integer(n.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_reduces() {
        assert_eq!(parse_rational("6/-8").unwrap(), ratio(-3, 4));
        assert_eq!(rational_string(&parse_rational(" 4 / 2 ").unwrap()), "2");
        assert_eq!(rational_string(&ratio(-3, 7)), "-3/7");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1/2/3").is_err());
    }
}
