//! Exact rationals.
//!
//! [`Rational`] is `num_rational::BigRational`, which keeps numerator and
//! denominator coprime with a positive denominator. This module adds the
//! textual format used on the command line and in reports: always
//! `"num/den"`, e.g. `"-2/5"` or `"1/1"`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Canonical `num/den` string.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"n"`, `"n/d"` or a finite decimal such as `"-0.25"`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    let bad = || Error::Parse(format!("not a rational number: {text:?}"));
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {text:?}")));
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((whole, frac)) = t.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = whole.starts_with('-');
        let whole_digits = whole.trim_start_matches(['-', '+']);
        let whole: BigInt = if whole_digits.is_empty() {
            BigInt::zero()
        } else {
            whole_digits.parse().map_err(|_| bad())?
        };
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let frac: BigInt = frac.parse().map_err(|_| bad())?;
        let mag = Rational::new(whole * &scale + frac, scale);
        return Ok(if negative { -mag } else { mag });
    }
    let n: BigInt = t.parse().map_err(|_| bad())?;
    Ok(Rational::from_integer(n))
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// `p`-adic valuation of a nonzero rational.
pub fn rational_valuation(r: &Rational, p: u64) -> Option<i64> {
    if r.is_zero() {
        return None;
    }
    let p = BigInt::from(p);
    Some(int_valuation(r.numer(), &p) as i64 - int_valuation(r.denom(), &p) as i64)
}

pub(crate) fn int_valuation(n: &BigInt, p: &BigInt) -> u64 {
    let mut n = n.abs();
    let mut v = 0;
    while !n.is_zero() {
        let (q, r) = n.div_rem(p);
        if !r.is_zero() {
            break;
        }
        n = q;
        v += 1;
    }
    v
}

/// Integer power with negative exponents allowed.
pub fn rational_pow(r: &Rational, e: i64) -> Result<Rational> {
    if e >= 0 {
        Ok(num_traits::pow(r.clone(), e as usize))
    } else if r.is_zero() {
        Err(Error::Domain("zero raised to a negative power".into()))
    } else {
        Ok(num_traits::pow(r.recip(), e.unsigned_abs() as usize))
    }
}

pub(crate) fn sign(e: u64) -> Rational {
    if e.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn format_is_always_a_fraction() {
        assert_eq!(format_rational(&rat(-4, 10)), "-2/5");
        assert_eq!(format_rational(&int(3)), "3/1");
    }

    #[test]
    fn parses_fractions_integers_and_decimals() {
        assert_eq!(parse_rational("1/2").unwrap(), rat(1, 2));
        assert_eq!(parse_rational(" 6 ").unwrap(), int(6));
        assert_eq!(parse_rational("0.3").unwrap(), rat(3, 10));
        assert_eq!(parse_rational("-0.25").unwrap(), rat(-1, 4));
        assert_eq!(parse_rational("-.5").unwrap(), rat(-1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1.").is_err());
    }

    #[test]
    fn valuation_of_rationals() {
        assert_eq!(rational_valuation(&rat(18, 5), 3), Some(2));
        assert_eq!(rational_valuation(&rat(4, 17), 17), Some(-1));
        assert_eq!(rational_valuation(&int(0), 3), None);
    }
}
