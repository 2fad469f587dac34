//! q-integers, q-Euler numbers and polynomials, alternating power sums and
//! finite-level q-Volkenborn sums.
//!
//! Everything is generic over a [`Scalar`] domain (exact rationals or
//! complex floats). The p-adic side goes through [`PadicQContext`], which
//! computes the same quantities exactly over `Q` and embeds them in `Q_p`.
//!
//! # Fractional arguments
//!
//! A polynomial argument `x = a/F` is always carried as a [`QArg`]. Relative
//! to a base `Q`, the pair `(a, F)` denotes evaluation at base `Q^F` with
//! `(Q^F)^x = Q^a`, so everything stays inside the field generated by `q`.
//! With `F = 1` this is the ordinary integer argument.

mod numbers;
mod padic;
mod sums;

use std::collections::HashMap;
use std::fmt;
use std::sync::RwLock;

use num_complex::Complex64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::numerics::{parse_rational, Rational, Scalar};

pub use numbers::classical_euler_numbers;
pub use padic::PadicQContext;

/// An exact argument `num/den` (see the module docs for its meaning).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QArg {
    pub num: i64,
    pub den: u64,
}

impl QArg {
    pub fn int(a: i64) -> Self {
        Self { num: a, den: 1 }
    }

    pub fn new(num: i64, den: u64) -> Result<Self> {
        if den == 0 {
            return domain("argument denominator must be positive");
        }
        Ok(Self { num, den })
    }

    /// Parses `"a"` or `"a/F"`; the pair is kept as written, not reduced.
    pub fn parse(text: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("not an argument a/F: {text:?}"));
        match text.split_once('/') {
            Some((a, f)) => Self::new(
                a.trim().parse().map_err(|_| bad())?,
                f.trim().parse().map_err(|_| bad())?,
            ),
            None => Ok(Self::int(text.trim().parse().map_err(|_| bad())?)),
        }
    }

    pub fn value(&self) -> Rational {
        Rational::new(self.num.into(), (self.den as i64).into())
    }
}

impl fmt::Display for QArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// A validated choice of `q` together with a memo table of `E_{m, q^e}`.
///
/// The memo table is the only mutable state; it is filled idempotently under
/// a lock, so a context can be shared between threads.
pub struct QContext<S: Scalar> {
    q: S,
    classical: bool,
    cache: RwLock<HashMap<(u64, u64), S>>,
}

impl<S: Scalar> fmt::Debug for QContext<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("QContext")
            .field("q", &self.q)
            .field("classical", &self.classical)
            .finish()
    }
}

impl<S: Scalar> Clone for QContext<S> {
    fn clone(&self) -> Self {
        Self::build(self.q.clone(), self.classical)
    }
}

impl QContext<Rational> {
    /// Exact rational `q`; `0`, `1` and `-1` are rejected (use
    /// [`QContext::classical`] for the `q = 1` limit).
    pub fn rational(q: Rational) -> Result<Self> {
        if q.is_zero() || q.is_one() || q == -Rational::one() {
            return domain(format!(
                "q = {} is not allowed in the rational domain",
                q.describe()
            ));
        }
        Ok(Self::build(q, false))
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::rational(parse_rational(text)?)
    }

    /// The `q = 1` limit: classical Euler numbers and polynomials.
    pub fn classical() -> Self {
        Self::build(Rational::one(), true)
    }

    /// The same choice of `q` viewed as a complex number.
    pub fn to_complex(&self) -> Result<QContext<Complex64>> {
        QContext::complex(Complex64::from_rational(&self.q))
    }
}

impl QContext<Complex64> {
    /// Complex `q` with `0 < |q| < 1`.
    pub fn complex(q: Complex64) -> Result<Self> {
        let r = q.norm();
        if !(r > 0.0 && r < 1.0) {
            return domain(format!("complex q must satisfy 0 < |q| < 1, got |q| = {r}"));
        }
        Ok(Self::build(q, false))
    }
}

impl<S: Scalar> QContext<S> {
    fn build(q: S, classical: bool) -> Self {
        Self {
            q,
            classical,
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn q(&self) -> &S {
        &self.q
    }

    pub fn is_classical(&self) -> bool {
        self.classical
    }

    /// View of the same context at base `q^e`.
    pub fn base(&self, e: u64) -> QBase<'_, S> {
        assert!(e >= 1, "base exponent must be positive");
        QBase { ctx: self, e }
    }

    fn unit(&self) -> QBase<'_, S> {
        self.base(1)
    }

    /// `[x]_q = (1 - q^x)/(1 - q)`.
    pub fn q_int(&self, x: i64) -> Result<S> {
        self.unit().q_int(x)
    }

    /// `[x]_{-q} = (1 - (-q)^x)/(1 + q)`.
    pub fn q_int_neg(&self, x: i64) -> Result<S> {
        self.unit().q_int_neg(x)
    }

    /// `[a/F]_{q^F} = [a]_q / [F]_q`.
    pub fn q_frac(&self, a: i64, f: u64) -> Result<S> {
        self.unit().q_frac(a, f)
    }

    /// `E_{m,q}`.
    pub fn q_euler_number(&self, m: u64) -> Result<S> {
        self.unit().q_euler_number(m)
    }

    /// `E_{n,q^F}(a/F)` by the closed sum over `1/(1 + q^{k+1})`.
    pub fn q_euler_polynomial(&self, n: u64, x: QArg) -> Result<S> {
        self.unit().q_euler_polynomial(n, x)
    }

    /// `E_{n,q^F}(a/F)` through the binomial expansion in `E_{j,q^F}`.
    pub fn q_euler_polynomial_binomial(&self, n: u64, x: QArg) -> Result<S> {
        self.unit().q_euler_polynomial_binomial(n, x)
    }

    pub fn alt_power_sum(&self, n: u64, m: u64) -> Result<S> {
        self.unit().alt_power_sum(n, m)
    }

    pub fn alt_power_sum_closed(&self, n: u64, m: u64) -> Result<S> {
        self.unit().alt_power_sum_closed(n, m)
    }

    pub fn alt_power_sum_via_polynomial(&self, n: u64, m: u64) -> Result<S> {
        self.unit().alt_power_sum_via_polynomial(n, m)
    }

    fn cached(&self, key: (u64, u64)) -> Option<S> {
        self.cache.read().ok()?.get(&key).cloned()
    }

    fn store(&self, key: (u64, u64), value: S) {
        if let Ok(mut map) = self.cache.write() {
            map.entry(key).or_insert(value);
        }
    }
}

/// The context at base `Q = q^e`.
#[derive(Clone, Copy)]
pub struct QBase<'a, S: Scalar> {
    ctx: &'a QContext<S>,
    e: u64,
}

impl<'a, S: Scalar> QBase<'a, S> {
    pub fn exponent(&self) -> u64 {
        self.e
    }

    pub fn context(&self) -> &'a QContext<S> {
        self.ctx
    }

    /// The base `Q^f`.
    pub fn lift(&self, f: u64) -> QBase<'a, S> {
        self.ctx.base(self.e * f)
    }

    /// `Q^x` for an integer `x`.
    pub fn pow(&self, x: i64) -> Result<S> {
        if self.ctx.classical {
            return Ok(S::one());
        }
        let e =
            i64::try_from(self.e).map_err(|_| Error::Domain("base exponent overflow".into()))?;
        self.ctx
            .q
            .powi(e * x)
            .ok_or_else(|| Error::Domain("zero base raised to a negative power".into()))
    }

    pub fn q(&self) -> Result<S> {
        self.pow(1)
    }

    pub fn q_int(&self, x: i64) -> Result<S> {
        if self.ctx.classical {
            return Ok(S::from_int(x));
        }
        let num = S::one() - self.pow(x)?;
        let den = S::one() - self.q()?;
        num.checked_div(&den)
            .ok_or_else(|| Error::Domain(format!("[x]_q: 1 - q^{} vanishes", self.e)))
    }

    pub fn q_int_neg(&self, x: i64) -> Result<S> {
        let mq = -self.q()?;
        let num = S::one()
            - mq.powi(x)
                .ok_or_else(|| Error::Domain("(-q)^x undefined".into()))?;
        let den = S::one() + self.q()?;
        num.checked_div(&den)
            .ok_or_else(|| Error::Domain("[x]_{-q} is undefined at q = -1".into()))
    }

    pub fn q_frac(&self, a: i64, f: u64) -> Result<S> {
        let den = self.q_int(f as i64)?;
        self.q_int(a)?
            .checked_div(&den)
            .ok_or_else(|| Error::Domain(format!("[{f}]_q vanishes")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{int, rat};

    fn half() -> QContext<Rational> {
        QContext::rational(rat(1, 2)).unwrap()
    }

    #[test]
    fn q_integers() {
        let c = half();
        assert_eq!(c.q_int(0).unwrap(), int(0));
        assert_eq!(c.q_int(1).unwrap(), int(1));
        assert_eq!(c.q_int(3).unwrap(), rat(7, 4));
        // [-1]_q = (1 - 2)/(1/2) = -2
        assert_eq!(c.q_int(-1).unwrap(), int(-2));
    }

    #[test]
    fn alternating_q_integers_match_expansion() {
        let c = half();
        assert_eq!(c.q_int_neg(0).unwrap(), int(0));
        assert_eq!(c.q_int_neg(1).unwrap(), int(1));
        assert_eq!(c.q_int_neg(2).unwrap(), rat(1, 2));
        // 1 - q + q^2 - q^3 + q^4
        assert_eq!(c.q_int_neg(5).unwrap(), rat(11, 16));
    }

    #[test]
    fn q_fractions() {
        let c = half();
        assert_eq!(c.q_frac(3, 3).unwrap(), int(1));
        assert_eq!(c.q_frac(0, 3).unwrap(), int(0));
        assert_eq!(c.q_frac(1, 3).unwrap(), rat(4, 7));
    }

    #[test]
    fn context_validation() {
        assert!(QContext::rational(int(1)).is_err());
        assert!(QContext::rational(int(-1)).is_err());
        assert!(QContext::rational(int(0)).is_err());
        assert!(QContext::complex(Complex64::new(0.6, 0.9)).is_err());
        assert!(QContext::complex(Complex64::new(0.0, 0.0)).is_err());
        assert!(QContext::complex(Complex64::new(0.3, 0.4)).is_ok());
        let cl = QContext::classical();
        assert_eq!(cl.q_int(5).unwrap(), int(5));
    }

    #[test]
    fn qarg_parsing() {
        assert_eq!(QArg::parse("1/3").unwrap(), QArg { num: 1, den: 3 });
        assert_eq!(QArg::parse("2").unwrap(), QArg::int(2));
        assert!(QArg::parse("1/0").is_err());
        assert!(QArg::parse("x").is_err());
    }
}
