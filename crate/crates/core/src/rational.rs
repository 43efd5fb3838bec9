//! The ambient scalar.
//!
//! [`Rational`] is `num_rational::BigRational`, which already keeps values in
//! lowest terms with a positive denominator, and whose `Display` is the
//! canonical text form: `p/q`, or `p` when `q = 1`, sign on the numerator.

use alloc::string::String;
use alloc::vec::Vec;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `num / den`, reduced. Panics when `den == 0`.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `[-]digits` or `[-]digits/digits`. Decimal points, exponents,
/// whitespace, a `+` sign and zero denominators are all rejected.
pub fn parse_rational(text: &str) -> Result<Rational> {
    fn integer(s: &str, allow_sign: bool) -> Result<BigInt> {
        let digits = match s.strip_prefix('-') {
            Some(rest) if allow_sign => rest,
            _ => s,
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse);
        }
        BigInt::from_str(s).map_err(|_| Error::Parse)
    }
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (integer(n, true)?, integer(d, false)?),
        None => (integer(text, true)?, BigInt::one()),
    };
    if den.is_zero() {
        return Err(Error::Parse);
    }
    Ok(Rational::new(num, den))
}

/// Parses a comma-separated list of rationals. The empty string is the empty list.
pub fn parse_list(text: &str) -> Result<Vec<Rational>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(|s| parse_rational(s.trim())).collect()
}

pub fn format_list(values: &[Rational]) -> String {
    let parts: Vec<String> = values.iter().map(|v| alloc::format!("{v}")).collect();
    parts.join(",")
}

/// The nonnegative rational square root of `q`, if it exists.
pub fn sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

pub fn pow(q: &Rational, exp: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..exp {
        acc *= q;
    }
    acc
}

/// `(-1)^k` as a rational.
pub fn sign(k: usize) -> Rational {
    if k.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

pub fn factorial(k: usize) -> Rational {
    (1..=k).fold(Rational::one(), |acc, i| acc * int(i as i64))
}

/// Product of `x_j - x_i` over all `i < j`.
pub fn vandermonde(points: &[Rational]) -> Rational {
    let mut acc = Rational::one();
    for j in 0..points.len() {
        for i in 0..j {
            acc *= &points[j] - &points[i];
        }
    }
    acc
}

pub fn all_distinct(points: &[Rational]) -> bool {
    (0..points.len()).all(|j| (0..j).all(|i| points[i] != points[j]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn canonical_text() {
        assert_eq!(frac(2, 4).to_string(), "1/2");
        assert_eq!(frac(3, -6).to_string(), "-1/2");
        assert_eq!(int(7).to_string(), "7");
        assert_eq!(Rational::zero().to_string(), "0");
    }

    #[test]
    fn parse_accepts_integers_and_fractions() {
        assert_eq!(parse_rational("-1").unwrap(), int(-1));
        assert_eq!(parse_rational("4/6").unwrap(), frac(2, 3));
        assert_eq!(parse_rational("-2/3").unwrap(), frac(-2, 3));
        assert_eq!(parse_rational("0/5").unwrap(), int(0));
    }

    #[test]
    fn parse_rejects_other_forms() {
        for bad in [
            "1.5", "1e3", "", "-", "1/0", "1/-2", "+1", " 1", "a", "1/", "/2", "--1",
        ] {
            assert_eq!(parse_rational(bad), Err(Error::Parse), "{bad:?}");
        }
    }

    #[test]
    fn square_roots() {
        assert_eq!(sqrt(&frac(9, 4)), Some(frac(3, 2)));
        assert_eq!(sqrt(&int(0)), Some(int(0)));
        assert_eq!(sqrt(&int(2)), None);
        assert_eq!(sqrt(&int(-4)), None);
    }

    #[test]
    fn vandermonde_values() {
        assert_eq!(vandermonde(&[int(0), int(1), int(-1)]), int(2));
        assert_eq!(vandermonde(&[]), int(1));
    }
}
