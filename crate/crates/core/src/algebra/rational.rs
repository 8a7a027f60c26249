//! Arbitrary-precision rational scalars.
//!
//! [`Rational`] is `num_rational::BigRational`, which keeps every value reduced with a
//! positive denominator. This module adds the strict text form used by node-set
//! documents: an optional leading `-`, decimal digits, and an optional `/` followed by a
//! nonzero denominator.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::Error;

pub type Rational = num_rational::BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

fn parse_integer(s: &str, allow_sign: bool) -> Option<BigInt> {
    let digits = match s.strip_prefix('-') {
        Some(rest) if allow_sign => rest,
        Some(_) => return None,
        None => s,
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let value: BigInt = digits.parse().ok()?;
    Some(if s.starts_with('-') { -value } else { value })
}

/// Parses `"p"` or `"p/q"` exactly. Whitespace, `+` signs, decimals and signed
/// denominators are rejected.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let malformed = || Error::MalformedRational(s.to_string());
    match s.split_once('/') {
        None => parse_integer(s, true).map(Rational::from_integer).ok_or_else(malformed),
        Some((num, den)) => {
            let num = parse_integer(num, true).ok_or_else(malformed)?;
            let den = parse_integer(den, false).ok_or_else(malformed)?;
            if den.is_zero() {
                return Err(malformed());
            }
            Ok(Rational::new(num, den))
        }
    }
}

/// Canonical text form: `"p"` for integers, otherwise `"p/q"` in lowest terms.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Lossy conversion for drawing only.
pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Values beyond f64 range: fall back to a signed huge number.
        if r.is_negative() {
            f64::MIN
        } else {
            f64::MAX
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!(parse_rational("1/3").unwrap(), ratio(1, 3));
        assert_eq!(parse_rational("-4/6").unwrap(), ratio(-2, 3));
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert_eq!(parse_rational("0/5").unwrap(), int(0));
    }

    #[test]
    fn rejects_malformed() {
        for bad in ["", "1/0", "1.5", "+2", " 3", "1/-2", "a", "1/", "/2", "--1", "1/2/3"] {
            assert!(parse_rational(bad).is_err(), "{bad:?} should be rejected");
        }
    }

    #[test]
    fn canonical_format() {
        assert_eq!(format_rational(&ratio(4, -6)), "-2/3");
        assert_eq!(format_rational(&int(-12)), "-12");
        assert_eq!(format_rational(&int(0)), "0");
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-50i64..50, 1i64..20).prop_map(|(n, d)| ratio(n, d))
    }

    proptest! {
        #[test]
        fn field_axioms_hold_exactly(a in small_rational(), b in small_rational(), c in small_rational()) {
            prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            if !a.is_zero() {
                prop_assert_eq!(&a * a.recip(), Rational::one());
            }
        }

        #[test]
        fn text_form_round_trips(a in small_rational()) {
            prop_assert_eq!(parse_rational(&format_rational(&a)).unwrap(), a);
        }
    }
}
