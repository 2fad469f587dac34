//! Arithmetic kernels: exact rationals, p-adic numbers, complex floats,
//! binomial coefficients and Teichmüller lifts.

mod binomial;
mod complex;
mod padic;
mod rational;
mod teichmuller;

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};

pub use binomial::{
    binomial, check_binomial_identity, generalized_binomial, verify_binomial_identities,
    BinomialIdentity, GeneralizedBinomial,
};
pub use complex::{ensure_finite, parse_complex, pow_neg_s, powi, ComplexNumber, ComplexRecord};
pub use padic::{PadicNumber, PadicRecord};
pub(crate) use rational::sign;
pub use rational::{
    format_rational, int, parse_rational, rat, rational_pow, rational_valuation, to_f64, Rational,
};
pub use teichmuller::{is_odd_prime, padic_power, primitive_root, teichmuller};

/// A field of exactly or approximately represented numbers that needs no
/// runtime parameters (unlike [`PadicNumber`], which carries its prime).
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Zero
    + One
{
    fn from_rational(r: &Rational) -> Self;

    /// `None` if `rhs` is zero or the quotient is not representable.
    fn checked_div(&self, rhs: &Self) -> Option<Self>;

    fn describe(&self) -> String;

    /// Wire form used in reports: `"num/den"` or `{re, im}`.
    fn to_json(&self) -> serde_json::Value;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&int(n))
    }

    /// Integer power; negative exponents need a nonzero base.
    fn powi(&self, e: i64) -> Option<Self> {
        let base = if e < 0 {
            Self::one().checked_div(self)?
        } else {
            self.clone()
        };
        Some(num_traits::pow(base, e.unsigned_abs() as usize))
    }
}

impl Scalar for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn checked_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            None
        } else {
            Some(self / rhs)
        }
    }

    fn describe(&self) -> String {
        format_rational(self)
    }

    fn to_json(&self) -> serde_json::Value {
        serde_json::Value::String(format_rational(self))
    }
}

impl Scalar for Complex64 {
    fn from_rational(r: &Rational) -> Self {
        Complex64::new(to_f64(r), 0.0)
    }

    fn checked_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        let z = self / rhs;
        (z.re.is_finite() && z.im.is_finite()).then_some(z)
    }

    fn describe(&self) -> String {
        format!("{}{:+}i", self.re, self.im)
    }

    fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "re": self.re, "im": self.im })
    }
}
