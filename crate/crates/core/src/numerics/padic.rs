//! Elements of `Q_p` known to finite precision.
//!
//! A nonzero value is stored as `p^v * u` with `p ∤ u` and `0 < u < p^d`,
//! where `d` is the number of significant digits. The value is known modulo
//! `p^(v + d)`, its absolute precision. A zero is either exact or "zero
//! modulo `p^k`", which is what cancellation produces.
//!
//! Precision propagates conservatively:
//! multiplication adds valuations and keeps the smaller digit count,
//! addition works modulo the smaller absolute precision and re-normalises,
//! division subtracts valuations. No operation ever reports digits that are
//! not implied by its inputs.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{int_valuation, Rational};
use crate::error::{Error, Result};

/// Digit count used when an exact constant is embedded next to an exact zero.
const EXACT_EMBED_DIGITS: u32 = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Repr {
    /// `None` marks an exact zero.
    Zero {
        abs: Option<i64>,
    },
    Unit {
        val: i64,
        unit: BigInt,
        digits: u32,
    },
}

/// A p-adic number with explicit valuation and precision.
///
/// `PartialEq` compares representations. Use [`PadicNumber::agreement`] for
/// the mathematical comparison "equal modulo the common precision".
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "PadicRecord", try_from = "PadicRecord")]
pub struct PadicNumber {
    p: u64,
    repr: Repr,
}

/// Wire form: `{p, valuation, unit, precision}`.
///
/// For nonzero values `precision` is the number of significant digits. For
/// zero, `valuation` is `null`, `unit` is `"0"` and `precision` is the
/// absolute precision to which the value is known to vanish (`null` when
/// exact).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PadicRecord {
    pub p: u64,
    pub valuation: Option<i64>,
    pub unit: String,
    pub precision: Option<i64>,
}

fn p_pow(p: u64, k: u32) -> BigInt {
    BigInt::from(p).pow(k)
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

impl PadicNumber {
    pub fn zero(p: u64) -> Self {
        Self {
            p,
            repr: Repr::Zero { abs: None },
        }
    }

    /// Zero known only modulo `p^abs`.
    pub fn zero_mod(p: u64, abs: i64) -> Self {
        Self {
            p,
            repr: Repr::Zero { abs: Some(abs) },
        }
    }

    pub fn one(p: u64, digits: u32) -> Self {
        Self::from_int(1, p, digits)
    }

    pub fn from_int(n: i64, p: u64, digits: u32) -> Self {
        Self::from_bigint(&BigInt::from(n), p, digits)
    }

    pub fn from_bigint(n: &BigInt, p: u64, digits: u32) -> Self {
        Self::from_rational(&Rational::from_integer(n.clone()), p, digits)
    }

    /// Embeds an exact rational with `digits` significant digits.
    pub fn from_rational(r: &Rational, p: u64, digits: u32) -> Self {
        assert!(p >= 2, "p must be at least 2");
        assert!(digits >= 1, "at least one significant digit is required");
        if r.is_zero() {
            return Self::zero(p);
        }
        let pb = BigInt::from(p);
        let vn = int_valuation(r.numer(), &pb);
        let vd = int_valuation(r.denom(), &pb);
        let num = r.numer() / pb.pow(vn as u32);
        let den = r.denom() / pb.pow(vd as u32);
        let m = p_pow(p, digits);
        let inv = mod_inverse(&den, &m).expect("denominator is a unit after removing p");
        let unit = (num * inv).mod_floor(&m);
        Self {
            p,
            repr: Repr::Unit {
                val: vn as i64 - vd as i64,
                unit,
                digits,
            },
        }
    }

    /// The value `residue` known modulo `p^abs`.
    pub fn from_residue(residue: &BigInt, p: u64, abs: i64) -> Self {
        if abs <= 0 {
            return Self::zero_mod(p, abs);
        }
        let m = p_pow(p, abs as u32);
        let r = residue.mod_floor(&m);
        if r.is_zero() {
            return Self::zero_mod(p, abs);
        }
        let v = int_valuation(&r, &BigInt::from(p));
        let unit = r / p_pow(p, v as u32);
        Self {
            p,
            repr: Repr::Unit {
                val: v as i64,
                unit,
                digits: (abs - v as i64) as u32,
            },
        }
    }

    fn unit_value(p: u64, val: i64, unit: BigInt, digits: u32) -> Self {
        Self {
            p,
            repr: Repr::Unit { val, unit, digits },
        }
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    /// `None` for zero (valuation `+∞`, or unknown beyond the precision).
    pub fn valuation(&self) -> Option<i64> {
        match &self.repr {
            Repr::Zero { .. } => None,
            Repr::Unit { val, .. } => Some(*val),
        }
    }

    /// Lower bound on the valuation: the valuation itself, or the absolute
    /// precision of a zero. `None` for an exact zero.
    pub fn valuation_bound(&self) -> Option<i64> {
        match &self.repr {
            Repr::Zero { abs } => *abs,
            Repr::Unit { val, .. } => Some(*val),
        }
    }

    /// Exponent `k` such that the value is known modulo `p^k`; `None` if exact.
    pub fn absolute_precision(&self) -> Option<i64> {
        match &self.repr {
            Repr::Zero { abs } => *abs,
            Repr::Unit { val, digits, .. } => Some(val + *digits as i64),
        }
    }

    /// Number of significant digits of a nonzero value.
    pub fn relative_precision(&self) -> Option<u32> {
        match &self.repr {
            Repr::Zero { .. } => None,
            Repr::Unit { digits, .. } => Some(*digits),
        }
    }

    pub fn unit(&self) -> Option<&BigInt> {
        match &self.repr {
            Repr::Zero { .. } => None,
            Repr::Unit { unit, .. } => Some(unit),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.repr, Repr::Zero { .. })
    }

    pub fn is_exact_zero(&self) -> bool {
        matches!(self.repr, Repr::Zero { abs: None })
    }

    /// Drops digits beyond absolute precision `abs`.
    pub fn cap(&self, abs: i64) -> Self {
        match &self.repr {
            Repr::Zero { abs: a } => Self::zero_mod(self.p, a.map_or(abs, |a| a.min(abs))),
            Repr::Unit { val, unit, digits } => {
                if abs <= *val {
                    Self::zero_mod(self.p, abs)
                } else if abs - val >= *digits as i64 {
                    self.clone()
                } else {
                    let d = (abs - val) as u32;
                    Self::unit_value(self.p, *val, unit.mod_floor(&p_pow(self.p, d)), d)
                }
            }
        }
    }

    /// The value reduced modulo `p^k` as an integer in `[0, p^k)`.
    pub fn residue(&self, k: u32) -> Result<BigInt> {
        if matches!(self.absolute_precision(), Some(a) if a < k as i64) {
            return Err(Error::Precision(format!(
                "value known only modulo {}^{}, residue modulo {}^{k} requested",
                self.p,
                self.absolute_precision().unwrap(),
                self.p
            )));
        }
        match &self.repr {
            Repr::Zero { .. } => Ok(BigInt::zero()),
            Repr::Unit { val, unit, .. } => {
                if *val < 0 {
                    return Err(Error::Domain(format!("{self} is not a p-adic integer")));
                }
                let m = p_pow(self.p, k);
                Ok((unit * p_pow(self.p, *val as u32)).mod_floor(&m))
            }
        }
    }

    /// Exponent `k` with `self ≡ other (mod p^k)`, limited by the precision
    /// of both operands. `None` when both are exact and equal.
    pub fn agreement(&self, other: &Self) -> Option<i64> {
        (self - other).valuation_bound()
    }

    /// `true` if the two values agree modulo `p^k`.
    pub fn agrees_to(&self, other: &Self, k: i64) -> bool {
        self.agreement(other).is_none_or(|a| a >= k)
    }

    /// An exact rational embedded with enough digits to not limit the
    /// precision of `self` in a product or sum.
    pub fn constant(&self, r: &Rational) -> Self {
        let digits = match (&self.repr, super::rational::rational_valuation(r, self.p)) {
            (_, None) => return Self::zero(self.p),
            (Repr::Zero { abs: None }, _) => EXACT_EMBED_DIGITS,
            (Repr::Zero { abs: Some(a) }, Some(v)) => (a - v).max(1) as u32,
            (Repr::Unit { val, digits, .. }, Some(v)) => {
                (*digits as i64).max(val + *digits as i64 - v).max(1) as u32
            }
        };
        Self::from_rational(r, self.p, digits)
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        assert_eq!(self.p, rhs.p, "mixed primes");
        let (v2, u2, d2) = match &rhs.repr {
            Repr::Zero { .. } => {
                return Err(Error::Precision(format!(
                    "division by {rhs}, which is zero at its precision"
                )))
            }
            Repr::Unit { val, unit, digits } => (*val, unit, *digits),
        };
        match &self.repr {
            Repr::Zero { abs: None } => Ok(Self::zero(self.p)),
            Repr::Zero { abs: Some(a) } => Ok(Self::zero_mod(self.p, a - v2)),
            Repr::Unit { val, unit, digits } => {
                let d = (*digits).min(d2);
                let m = p_pow(self.p, d);
                let inv = mod_inverse(u2, &m).expect("units are invertible");
                Ok(Self::unit_value(
                    self.p,
                    val - v2,
                    (unit * inv).mod_floor(&m),
                    d,
                ))
            }
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        self.constant(&Rational::one()).checked_div(self)
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = base.constant(&Rational::one());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    pub fn to_record(&self) -> PadicRecord {
        match &self.repr {
            Repr::Zero { abs } => PadicRecord {
                p: self.p,
                valuation: None,
                unit: "0".into(),
                precision: *abs,
            },
            Repr::Unit { val, unit, digits } => PadicRecord {
                p: self.p,
                valuation: Some(*val),
                unit: unit.to_string(),
                precision: Some(*digits as i64),
            },
        }
    }

    fn add_impl(&self, rhs: &Self) -> Self {
        assert_eq!(self.p, rhs.p, "mixed primes");
        let p = self.p;
        match (&self.repr, &rhs.repr) {
            (Repr::Zero { abs }, _) => match abs {
                None => rhs.clone(),
                Some(a) => rhs.cap(*a),
            },
            (_, Repr::Zero { abs }) => match abs {
                None => self.clone(),
                Some(a) => self.cap(*a),
            },
            (
                Repr::Unit {
                    val: v1, unit: u1, ..
                },
                Repr::Unit {
                    val: v2, unit: u2, ..
                },
            ) => {
                let abs = self
                    .absolute_precision()
                    .unwrap()
                    .min(rhs.absolute_precision().unwrap());
                let vmin = (*v1).min(*v2);
                let m = p_pow(p, (abs - vmin) as u32);
                let s = (u1 * p_pow(p, (v1 - vmin) as u32) + u2 * p_pow(p, (v2 - vmin) as u32))
                    .mod_floor(&m);
                if s.is_zero() {
                    return Self::zero_mod(p, abs);
                }
                let k = int_valuation(&s, &BigInt::from(p));
                let val = vmin + k as i64;
                Self::unit_value(p, val, s / p_pow(p, k as u32), (abs - val) as u32)
            }
        }
    }

    fn mul_impl(&self, rhs: &Self) -> Self {
        assert_eq!(self.p, rhs.p, "mixed primes");
        let p = self.p;
        match (&self.repr, &rhs.repr) {
            (Repr::Zero { abs: None }, _) | (_, Repr::Zero { abs: None }) => Self::zero(p),
            (Repr::Zero { abs: Some(a) }, Repr::Zero { abs: Some(b) }) => Self::zero_mod(p, a + b),
            (Repr::Zero { abs: Some(a) }, Repr::Unit { val, .. })
            | (Repr::Unit { val, .. }, Repr::Zero { abs: Some(a) }) => Self::zero_mod(p, a + val),
            (
                Repr::Unit {
                    val: v1,
                    unit: u1,
                    digits: d1,
                },
                Repr::Unit {
                    val: v2,
                    unit: u2,
                    digits: d2,
                },
            ) => {
                let d = (*d1).min(*d2);
                let m = p_pow(p, d);
                Self::unit_value(p, v1 + v2, (u1 * u2).mod_floor(&m), d)
            }
        }
    }

    fn neg_impl(&self) -> Self {
        match &self.repr {
            Repr::Zero { .. } => self.clone(),
            Repr::Unit { val, unit, digits } => {
                let m = p_pow(self.p, *digits);
                Self::unit_value(self.p, *val, (&m - unit).mod_floor(&m), *digits)
            }
        }
    }
}

impl From<PadicNumber> for PadicRecord {
    fn from(x: PadicNumber) -> Self {
        x.to_record()
    }
}

impl TryFrom<PadicRecord> for PadicNumber {
    type Error = Error;

    fn try_from(rec: PadicRecord) -> Result<Self> {
        if rec.p < 3 {
            return Err(Error::Parse(format!("invalid prime {}", rec.p)));
        }
        match rec.valuation {
            None => Ok(match rec.precision {
                None => Self::zero(rec.p),
                Some(a) => Self::zero_mod(rec.p, a),
            }),
            Some(val) => {
                let unit: BigInt = rec
                    .unit
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad unit {:?}", rec.unit)))?;
                let digits = rec
                    .precision
                    .filter(|d| *d >= 1)
                    .ok_or_else(|| Error::Parse("nonzero value needs precision >= 1".into()))?
                    as u32;
                let m = p_pow(rec.p, digits);
                if unit.is_negative() || unit >= m || (&unit % rec.p).is_zero() {
                    return Err(Error::Parse(format!(
                        "unit {unit} must lie in (0, {m}) and be prime to {}",
                        rec.p
                    )));
                }
                Ok(Self::unit_value(rec.p, val, unit, digits))
            }
        }
    }
}

impl fmt::Display for PadicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Zero { abs: None } => write!(f, "0"),
            Repr::Zero { abs: Some(a) } => write!(f, "O({}^{a})", self.p),
            Repr::Unit { val, unit, digits } => {
                if *val == 0 {
                    write!(f, "{unit} + O({}^{digits})", self.p)
                } else {
                    write!(
                        f,
                        "{}^{val}*{unit} + O({}^{})",
                        self.p,
                        self.p,
                        val + *digits as i64
                    )
                }
            }
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $imp:expr) => {
        impl $tr<&PadicNumber> for &PadicNumber {
            type Output = PadicNumber;
            fn $method(self, rhs: &PadicNumber) -> PadicNumber {
                $imp(self, rhs)
            }
        }
        impl $tr<PadicNumber> for PadicNumber {
            type Output = PadicNumber;
            fn $method(self, rhs: PadicNumber) -> PadicNumber {
                $imp(&self, &rhs)
            }
        }
        impl $tr<&PadicNumber> for PadicNumber {
            type Output = PadicNumber;
            fn $method(self, rhs: &PadicNumber) -> PadicNumber {
                $imp(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &PadicNumber, b: &PadicNumber| a.add_impl(b));
forward_binop!(Sub, sub, |a: &PadicNumber, b: &PadicNumber| a
    .add_impl(&b.neg_impl()));
forward_binop!(Mul, mul, |a: &PadicNumber, b: &PadicNumber| a.mul_impl(b));

impl Neg for &PadicNumber {
    type Output = PadicNumber;
    fn neg(self) -> PadicNumber {
        self.neg_impl()
    }
}

impl Neg for PadicNumber {
    type Output = PadicNumber;
    fn neg(self) -> PadicNumber {
        self.neg_impl()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rational::rat;

    #[test]
    fn embedding_normalises_unit_and_valuation() {
        let x = PadicNumber::from_rational(&rat(18, 5), 3, 4);
        assert_eq!(x.valuation(), Some(2));
        assert_eq!(x.relative_precision(), Some(4));
        // 2/5 mod 81: 5 * 49 = 245 = 3*81 + 2
        assert_eq!(x.unit().unwrap(), &BigInt::from(49));
        assert_eq!(x.absolute_precision(), Some(6));
    }

    #[test]
    fn inverse_of_six_mod_25() {
        let six = PadicNumber::from_int(6, 5, 2);
        assert_eq!(six.inverse().unwrap().residue(2).unwrap(), BigInt::from(21));
    }

    #[test]
    fn cancellation_lowers_relative_precision() {
        let a = PadicNumber::from_int(1 + 9, 3, 5);
        let b = PadicNumber::from_int(1, 3, 5);
        let d = &a - &b;
        assert_eq!(d.valuation(), Some(2));
        assert_eq!(d.absolute_precision(), Some(5));
        assert_eq!(d.relative_precision(), Some(3));
        let z = &a - &a;
        assert!(z.is_zero());
        assert_eq!(z.absolute_precision(), Some(5));
    }

    #[test]
    fn division_by_inexact_zero_is_an_error() {
        let a = PadicNumber::from_int(4, 3, 5);
        let z = &a - &a;
        assert!(matches!(a.checked_div(&z), Err(Error::Precision(_))));
    }

    #[test]
    fn negative_valuation_and_residue_errors() {
        let x = PadicNumber::from_rational(&rat(1, 3), 3, 4);
        assert_eq!(x.valuation(), Some(-1));
        assert!(x.residue(1).is_err());
        let y = PadicNumber::from_int(7, 5, 2);
        assert!(y.residue(3).is_err());
    }

    #[test]
    fn record_round_trip() {
        for x in [
            PadicNumber::from_rational(&rat(-4, 17), 3, 8),
            PadicNumber::zero_mod(5, 7),
            PadicNumber::zero(7),
        ] {
            let json = serde_json::to_string(&x).unwrap();
            let back: PadicNumber = serde_json::from_str(&json).unwrap();
            assert_eq!(back, x);
        }
        let bad = r#"{"p":5,"valuation":0,"unit":"10","precision":2}"#;
        assert!(serde_json::from_str::<PadicNumber>(bad).is_err());
    }

    #[test]
    fn pow_and_agreement() {
        let x = PadicNumber::from_int(2, 5, 6);
        let cube = x.pow(3).unwrap();
        assert_eq!(cube.residue(6).unwrap(), BigInt::from(8));
        let inv = x.pow(-1).unwrap();
        assert!((&inv * &x).agrees_to(&PadicNumber::one(5, 6), 6));
        let near = PadicNumber::from_int(2 + 125, 5, 6);
        assert_eq!(x.agreement(&near), Some(3));
        assert_eq!(PadicNumber::zero(5).agreement(&PadicNumber::zero(5)), None);
    }
}
