//! Exact rational scalars and conversions.
//!
//! All symbolic computation in this crate runs over the rationals. The
//! scalar type is [`Rat`] (an arbitrary-precision reduced fraction with
//! positive denominator); floats appear only at evaluation time.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational number, always reduced, denominator >= 1.
pub type Rat = num_rational::BigRational;

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Shorthand for the fraction `n/d`. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses a rational literal: an optional sign, digits, and an optional
/// `/denominator` part, e.g. `"3"`, `"-7/2"`, `"1000000"`.
pub fn parse_rat(text: &str) -> Result<Rat, String> {
    let s = text.trim();
    if s.is_empty() {
        return Err("empty rational literal".into());
    }
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let numer: BigInt = num_str
        .parse()
        .map_err(|_| format!("invalid integer `{num_str}`"))?;
    let denom: BigInt = match den_str {
        Some(d) => d
            .parse()
            .map_err(|_| format!("invalid denominator `{d}`"))?,
        None => BigInt::from(1),
    };
    if denom.is_zero() {
        return Err("denominator must be nonzero".into());
    }
    if denom.is_negative() {
        return Err("denominator must be positive".into());
    }
    Ok(Rat::new(numer, denom))
}

/// Rounds to the nearest `f64`. Values far outside the double range
/// saturate to +-infinity.
pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        if r.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// Exact conversion of a finite float into a rational (every finite `f64`
/// is a dyadic rational).
pub fn f64_to_rat(x: f64) -> Option<Rat> {
    Rat::from_float(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_literals() {
        assert_eq!(parse_rat("3").unwrap(), rat(3));
        assert_eq!(parse_rat("-7/2").unwrap(), ratio(-7, 2));
        assert_eq!(parse_rat("1/100").unwrap(), ratio(1, 100));
        assert_eq!(parse_rat(" 4/6 ").unwrap(), ratio(2, 3));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("1/-2").is_err());
        assert!(parse_rat("x").is_err());
        assert!(parse_rat("").is_err());
    }

    #[test]
    fn float_round_trip() {
        let r = ratio(-3, 8);
        let x = rat_to_f64(&r);
        assert_eq!(f64_to_rat(x).unwrap(), r);
    }
}
