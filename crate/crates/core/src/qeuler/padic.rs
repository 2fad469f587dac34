use num_bigint::BigInt;
use num_traits::One;

use super::QContext;
use crate::error::{domain, Error, Result};
use crate::numerics::{is_odd_prime, rational_valuation, PadicNumber, Rational, Scalar};

/// `q` as an element of `Q_p`, for an odd prime `p` and a rational `q` with
/// `v_p(q - 1) >= 1`, or the classical value `q = 1`.
///
/// Quantities are computed exactly over `Q` through an inner [`QContext`]
/// and embedded with `digits` significant digits.
#[derive(Debug, Clone)]
pub struct PadicQContext {
    p: u64,
    digits: u32,
    q: Rational,
    exact: QContext<Rational>,
}

impl PadicQContext {
    pub fn new(p: u64, digits: u32, q: Rational) -> Result<Self> {
        if !is_odd_prime(p) {
            return domain(format!("p = {p} is not an odd prime"));
        }
        if digits == 0 {
            return domain("the working precision must be positive");
        }
        let exact = if q.is_one() {
            QContext::classical()
        } else {
            match rational_valuation(&(&q - Rational::one()), p) {
                Some(v) if v >= 1 => QContext::rational(q.clone())?,
                _ => return domain(format!("q = {} needs v_{p}(q - 1) >= 1", q.describe())),
            }
        };
        Ok(Self {
            p,
            digits,
            q,
            exact,
        })
    }

    /// The `q = 1` limit.
    pub fn classical(p: u64, digits: u32) -> Result<Self> {
        Self::new(p, digits, Rational::one())
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn is_classical(&self) -> bool {
        self.exact.is_classical()
    }

    /// The exact rational context behind this one.
    pub fn exact(&self) -> &QContext<Rational> {
        &self.exact
    }

    /// Same `q` and `p`, different working precision.
    pub fn with_digits(&self, digits: u32) -> Self {
        Self {
            p: self.p,
            digits,
            q: self.q.clone(),
            exact: self.exact.clone(),
        }
    }

    pub fn embed(&self, r: &Rational) -> PadicNumber {
        PadicNumber::from_rational(r, self.p, self.digits)
    }

    /// `E_{m,q^e}` embedded in `Z_p`; a negative valuation is an error.
    pub fn q_euler_number(&self, m: u64, e: u64) -> Result<PadicNumber> {
        let value = self.exact.base(e).q_euler_number(m)?;
        if let Some(v) = rational_valuation(&value, self.p) {
            if v < 0 {
                return Err(Error::Domain(format!(
                    "E_{{{m},q^{e}}} = {} is not {}-integral",
                    value.describe(),
                    self.p
                )));
            }
        }
        Ok(self.embed(&value))
    }

    /// `(1/[p^L]_{-q}) Σ_{j<p^L} [j]_q^m (-q)^j`, evaluated in `Z_p` at the
    /// working precision.
    pub fn volkenborn_approx(&self, m: u64, level: u32) -> Result<PadicNumber> {
        if level == 0 {
            return domain("the level must be positive");
        }
        let count = BigInt::from(self.p).pow(level);
        let count: u64 = count
            .try_into()
            .map_err(|_| Error::Unsupported(format!("level {level} is too large")))?;
        let mq = -self.embed(&self.q);
        let mut power = self.embed(&Rational::one());
        let mut bracket = PadicNumber::zero(self.p);
        let mut sum = PadicNumber::zero(self.p);
        let mut norm = PadicNumber::zero(self.p);
        let step = self.embed(&self.q);
        let mut qj = self.embed(&Rational::one());
        for _ in 0..count {
            let mono = if m == 0 {
                self.embed(&Rational::one())
            } else {
                bracket.pow(m as i64)?
            };
            sum = sum + &mono * &power;
            norm = norm + &power;
            bracket = bracket + &qj;
            qj = &qj * &step;
            power = &power * &mq;
        }
        sum.checked_div(&norm)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{int, rat};

    #[test]
    fn context_validation() {
        assert!(PadicQContext::new(2, 8, int(3)).is_err());
        assert!(PadicQContext::new(9, 8, int(10)).is_err());
        assert!(PadicQContext::new(3, 8, int(5)).is_err());
        assert!(PadicQContext::new(3, 8, rat(1, 2)).is_err());
        assert!(PadicQContext::new(3, 8, int(4)).is_ok());
        assert!(PadicQContext::new(5, 8, rat(11, 6)).is_ok());
        assert!(PadicQContext::classical(7, 4).unwrap().is_classical());
    }

    #[test]
    fn embedded_euler_numbers() {
        let c = PadicQContext::new(3, 6, int(4)).unwrap();
        let e1 = c.q_euler_number(1, 1).unwrap();
        assert!(e1.agrees_to(&c.embed(&rat(-4, 17)), 6));
    }

    #[test]
    fn volkenborn_level_sums() {
        let c = PadicQContext::new(3, 12, int(4)).unwrap();
        for level in 1..4 {
            let v = c.volkenborn_approx(0, level).unwrap();
            assert!(v.agrees_to(&c.embed(&int(1)), 12));
        }
        let target = c.q_euler_number(1, 1).unwrap();
        let mut last = 0;
        for level in 1..=4 {
            let a = c
                .volkenborn_approx(1, level)
                .unwrap()
                .agreement(&target)
                .unwrap();
            assert!(a >= last, "level {level}: {a} < {last}");
            assert!(a >= level as i64 - 1);
            last = a;
        }
    }
}
