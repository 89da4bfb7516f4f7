//! Exact rational scalars.
//!
//! Scalars are `num_rational::BigRational`, which keeps every value in lowest
//! terms with a positive denominator. Text form is `p/q`, or `p` when `q = 1`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// `(-1)^exponent` as a rational.
pub fn sign(exponent: u8) -> Rational {
    if exponent.is_multiple_of(2) {
        one()
    } else {
        -one()
    }
}

/// Parses `p/q` or `p` (optional leading sign on `p`). Rejects zero denominators,
/// signed denominators and surrounding whitespace.
pub fn parse(text: &str) -> Result<Rational> {
    let bad = || Error::MalformedRational(text.to_string());
    let parse_int = |s: &str, allow_sign: bool| -> Result<BigInt> {
        let digits = if allow_sign {
            s.strip_prefix('-').unwrap_or(s)
        } else {
            s
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        s.parse::<BigInt>().map_err(|_| bad())
    };
    match text.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(text, true)?)),
        Some((n, d)) => {
            let n = parse_int(n, true)?;
            let d = parse_int(d, false)?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
    }
}

pub fn render(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn render_vec(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(render).collect();
    format!("[{}]", parts.join(", "))
}

pub fn abs(q: &Rational) -> Rational {
    q.abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn renders_integers_without_denominator() {
        assert_eq!(render(&int(3)), "3");
        assert_eq!(render(&frac(-6, 4)), "-3/2");
        assert_eq!(render(&zero()), "0");
    }

    #[test]
    fn parse_rejects_zero_denominator() {
        assert!(matches!(parse("1/0"), Err(Error::MalformedRational(_))));
        assert!(parse("1/-2").is_err());
        assert!(parse(" 1").is_err());
        assert!(parse("").is_err());
        assert!(parse("-").is_err());
        assert!(parse("1/2/3").is_err());
    }

    #[test]
    fn parse_reduces() {
        assert_eq!(parse("2/4").unwrap(), frac(1, 2));
        assert_eq!(parse("-3").unwrap(), int(-3));
        assert_eq!(parse("0/7").unwrap(), zero());
    }

    proptest! {
        #[test]
        fn render_parse_round_trip(n in -1_000_000i64..1_000_000, d in 1i64..1_000_000) {
            let q = frac(n, d);
            prop_assert_eq!(parse(&render(&q)).unwrap(), q);
        }
    }
}
