//! Exact rational scalars and their text forms.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Arbitrary-precision rational scalar. The backing type keeps values
/// gcd-reduced with a positive denominator, so equality and zero tests
/// are exact.
pub type Scalar = BigRational;

/// Error for malformed scalar literals.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarParseError {
    #[error("empty scalar literal")]
    Empty,
    #[error("malformed scalar literal `{0}`")]
    Malformed(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

/// Scalar from an integer.
pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// Scalar `num/den`. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Scalar {
    assert!(den != 0, "zero denominator");
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `n`, `n/d`, or a plain decimal such as `-2.625` (exactly).
pub fn parse_scalar(text: &str) -> Result<Scalar, ScalarParseError> {
    let s = text.trim();
    if s.is_empty() {
        return Err(ScalarParseError::Empty);
    }
    let malformed = || ScalarParseError::Malformed(s.to_owned());
    if let Some((n, d)) = s.split_once('/') {
        let numer: BigInt = n.trim().parse().map_err(|_| malformed())?;
        let denom: BigInt = d.trim().parse().map_err(|_| malformed())?;
        if denom.is_zero() {
            return Err(ScalarParseError::ZeroDenominator(s.to_owned()));
        }
        return Ok(BigRational::new(numer, denom));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        if !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(malformed());
        }
        let (negative, digits) = match whole.as_bytes().first() {
            Some(b'-') => (true, &whole[1..]),
            Some(b'+') => (false, &whole[1..]),
            _ => (false, whole),
        };
        if !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(malformed());
        }
        let all_digits = format!("{digits}{frac}");
        if all_digits.is_empty() {
            return Err(malformed());
        }
        let numer: BigInt = all_digits.parse().map_err(|_| malformed())?;
        let denom = BigInt::from(10u32).pow(frac.len() as u32);
        let value = BigRational::new(numer, denom);
        return Ok(if negative { -value } else { value });
    }
    let numer: BigInt = s.parse().map_err(|_| malformed())?;
    Ok(BigRational::from_integer(numer))
}

/// Canonical text form: `n` for integers, `n/d` otherwise.
pub fn format_scalar(value: &Scalar) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Conversion to `f64` that stays accurate even when numerator and
/// denominator exceed the `f64` range individually.
pub fn scalar_to_f64(value: &Scalar) -> f64 {
    if value.is_zero() {
        return 0.0;
    }
    let numer = value.numer();
    let denom = value.denom();
    let bits = numer.bits().max(denom.bits());
    if bits <= 900 {
        let n = numer.to_f64().unwrap_or(f64::NAN);
        let d = denom.to_f64().unwrap_or(f64::NAN);
        return n / d;
    }
    // Drop low-order bits of both; the induced relative error is ~2^-900.
    let shift = (bits - 900) as usize;
    let n = (numer >> shift).to_f64().unwrap_or(f64::NAN);
    let d = (denom >> shift).to_f64().unwrap_or(f64::NAN);
    if d == 0.0 {
        return if numer.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        };
    }
    n / d
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Pow;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_scalar("3/2").unwrap(), ratio(3, 2));
        assert_eq!(parse_scalar("-1").unwrap(), int(-1));
        assert_eq!(parse_scalar(" 7 ").unwrap(), int(7));
        assert_eq!(parse_scalar("4/6").unwrap(), ratio(2, 3));
        assert_eq!(parse_scalar("3/-2").unwrap(), ratio(-3, 2));
    }

    #[test]
    fn parses_decimals_exactly() {
        assert_eq!(parse_scalar("0.25").unwrap(), ratio(1, 4));
        assert_eq!(parse_scalar("-2.625").unwrap(), ratio(-21, 8));
        assert_eq!(parse_scalar(".5").unwrap(), ratio(1, 2));
        assert_eq!(parse_scalar("2.").unwrap(), int(2));
    }

    #[test]
    fn rejects_malformed_literals() {
        assert_eq!(parse_scalar(""), Err(ScalarParseError::Empty));
        assert!(matches!(
            parse_scalar("1/0"),
            Err(ScalarParseError::ZeroDenominator(_))
        ));
        assert!(matches!(
            parse_scalar("1.2.3"),
            Err(ScalarParseError::Malformed(_))
        ));
        assert!(matches!(
            parse_scalar("abc"),
            Err(ScalarParseError::Malformed(_))
        ));
        assert!(matches!(
            parse_scalar("1e3"),
            Err(ScalarParseError::Malformed(_))
        ));
    }

    #[test]
    fn format_round_trips() {
        for s in ["0", "-1", "3/2", "-21/8", "12345"] {
            let v = parse_scalar(s).unwrap();
            assert_eq!(format_scalar(&v), s);
            assert_eq!(parse_scalar(&format_scalar(&v)).unwrap(), v);
        }
    }

    #[test]
    fn f64_conversion_handles_huge_components() {
        let big = BigInt::from(3u32).pow(4000u32);
        let r = Scalar::new(big.clone() * 2, big);
        assert!((scalar_to_f64(&r) - 2.0).abs() < 1e-12);
        assert_eq!(scalar_to_f64(&int(0)), 0.0);
        assert!((scalar_to_f64(&ratio(-1, 3)) + 1.0 / 3.0).abs() < 1e-16);
    }
}
