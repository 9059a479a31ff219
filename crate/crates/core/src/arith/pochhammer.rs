use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

use super::ExactRational;

/// Shifted factorial `(x)_n`.
///
/// For `n > 0` this is `x (x+1) ⋯ (x+n−1)`, for `n = 0` it is 1, and for
/// `n < 0` it is `(−1)^|n| / ∏_{k=1}^{|n|} (k − x)`, so that
/// `(x)_{n+1} = (x)_n (x + n)` holds for every integer `n`.
pub fn pochhammer(x: &ExactRational, n: i64) -> Result<ExactRational> {
    // x = a/b; every factor is (a + j b)/b, so work on integers and divide once.
    let a = x.numer();
    let b = x.denom();
    let len = n.unsigned_abs();
    let mut top = BigInt::one();
    if n >= 0 {
        for j in 0..n {
            top *= a + b * j;
        }
        Ok(BigRational::new(top, b.pow(len as u32)))
    } else {
        for k in 1..=len {
            let f = b * k - a;
            if f.is_zero() {
                return Err(Error::ZeroDivisor { x: x.to_string(), n });
            }
            top *= f;
        }
        let sign = if len % 2 == 0 { 1 } else { -1 };
        Ok(BigRational::new(b.pow(len as u32) * sign, top))
    }
}

pub fn factorial(n: i64) -> Result<BigInt> {
    if n < 0 {
        return Err(Error::NegativeFactorial(n));
    }
    Ok((2..=n).fold(BigInt::one(), |acc, k| acc * k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{int, ratio};
    use proptest::prelude::*;

    #[test]
    fn worked_values() {
        assert_eq!(pochhammer(&ratio(3, 7), 0).unwrap(), int(1));
        assert_eq!(pochhammer(&ratio(1, 2), 3).unwrap(), ratio(15, 8));
        assert_eq!(pochhammer(&ratio(1, 2), -2).unwrap(), ratio(4, 3));
        assert_eq!(pochhammer(&ratio(1, 3), 2).unwrap(), ratio(4, 9));
    }

    #[test]
    fn negative_index_hits_zero() {
        // (2)_{-3} needs 1/((1-2)(2-2)(3-2))
        let err = pochhammer(&int(2), -3).unwrap_err();
        assert!(matches!(err, Error::ZeroDivisor { n: -3, .. }));
        // only the first |n| factors matter
        assert!(pochhammer(&int(2), -1).is_ok());
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0).unwrap(), BigInt::one());
        assert_eq!(factorial(5).unwrap(), BigInt::from(120));
        assert_eq!(factorial(-1).unwrap_err(), Error::NegativeFactorial(-1));
    }

    fn non_integer() -> impl Strategy<Value = ExactRational> {
        (-40i64..40, 2i64..13)
            .prop_filter("non-integer", |(a, b)| a % b != 0)
            .prop_map(|(a, b)| ratio(a, b))
    }

    proptest! {
        #[test]
        fn shift_recurrence(x in non_integer(), n in -8i64..=8) {
            let lhs = pochhammer(&x, n + 1).unwrap();
            let rhs = pochhammer(&x, n).unwrap() * (&x + int(n));
            prop_assert_eq!(lhs, rhs);
            let inv = pochhammer(&x, -n).unwrap() * pochhammer(&(&x - int(n)), n).unwrap();
            prop_assert_eq!(inv, int(1));
        }

        #[test]
        fn additive_index(x in non_integer(), m in -6i64..=6, n in -6i64..=6) {
            let lhs = pochhammer(&x, m + n).unwrap();
            let rhs = pochhammer(&x, m).unwrap() * pochhammer(&(&x + int(m)), n).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
