use num_traits::One;

use super::{QArg, QBase};
use crate::error::{domain, Error, Result};
use crate::numerics::{binomial, rat, Rational, Scalar};

fn choose<S: Scalar>(n: u64, k: u64) -> S {
    S::from_rational(&Rational::from_integer(binomial(n, k)))
}

fn alt<S: Scalar>(e: u64) -> S {
    if e.is_multiple_of(2) {
        S::one()
    } else {
        -S::one()
    }
}

/// Classical Euler numbers `E_0..=E_m` from `E_n = -(1/2) Σ_{k<n} C(n,k) E_k`.
pub fn classical_euler_numbers(m: u64) -> Vec<Rational> {
    let mut e: Vec<Rational> = vec![Rational::one()];
    for n in 1..=m {
        let s: Rational = (0..n)
            .map(|k| Rational::from_integer(binomial(n, k)) * &e[k as usize])
            .sum();
        e.push(-s * rat(1, 2));
    }
    e
}

impl<S: Scalar> QBase<'_, S> {
    fn div(&self, num: S, den: &S, what: impl FnOnce() -> String) -> Result<S> {
        num.checked_div(den).ok_or_else(|| Error::Domain(what()))
    }

    /// `E_{m,Q}` for the base `Q = q^e`, memoized per `(m, e)`.
    pub fn q_euler_number(&self, m: u64) -> Result<S> {
        if let Some(v) = self.ctx.cached((m, self.e)) {
            return Ok(v);
        }
        let value = if self.ctx.classical {
            self.classical_number(m)?
        } else {
            let q = self.q()?;
            let mut acc = S::zero();
            for i in 0..=m {
                let den = S::one() + self.pow(i as i64 + 1)?;
                let term = self.div(choose::<S>(m, i) * alt::<S>(i), &den, || {
                    format!("E_{m}: denominator 1 + q^{} vanishes at i = {i}", i + 1)
                })?;
                acc = acc + term;
            }
            let scale = self.div(S::one(), &(S::one() - q.clone()), || {
                "1 - q vanishes".into()
            })?;
            (S::one() + q) * num_traits::pow(scale, m as usize) * acc
        };
        self.ctx.store((m, self.e), value.clone());
        Ok(value)
    }

    fn classical_number(&self, m: u64) -> Result<S> {
        let mut acc = S::zero();
        for k in 0..m {
            acc = acc + choose::<S>(m, k) * self.q_euler_number(k)?;
        }
        Ok(if m == 0 {
            S::one()
        } else {
            -acc * S::from_rational(&rat(1, 2))
        })
    }

    /// `E_{n,Q^F}(a/F)` for `x = (a, F)`:
    /// `[2]_W (1/(1-W))^n Σ_k C(n,k) (-Q^a)^k / (1 + W^{k+1})` with `W = Q^F`.
    pub fn q_euler_polynomial(&self, n: u64, x: QArg) -> Result<S> {
        let w = self.lift(x.den);
        if self.ctx.classical {
            return self.classical_polynomial(n, x);
        }
        let qx = self.pow(x.num)?;
        let wq = w.q()?;
        let mut acc = S::zero();
        for k in 0..=n {
            let den = S::one() + w.pow(k as i64 + 1)?;
            let num = choose::<S>(n, k) * num_traits::pow(-qx.clone(), k as usize);
            acc = acc
                + self.div(num, &den, || {
                    format!("E_{n}({x}): denominator 1 + q^{} vanishes", w.e * (k + 1))
                })?;
        }
        let scale = self.div(S::one(), &(S::one() - wq.clone()), || {
            "1 - q vanishes".into()
        })?;
        Ok((S::one() + wq) * num_traits::pow(scale, n as usize) * acc)
    }

    fn classical_polynomial(&self, n: u64, x: QArg) -> Result<S> {
        let xv = S::from_rational(&x.value());
        let mut acc = S::zero();
        for j in 0..=n {
            acc = acc
                + choose::<S>(n, j)
                    * self.q_euler_number(j)?
                    * num_traits::pow(xv.clone(), (n - j) as usize);
        }
        Ok(acc)
    }

    /// `Σ_j C(n,j) W^{jx} E_{j,W} [x]_W^{n-j}` with `W = Q^F`, `W^x = Q^a` and
    /// `[x]_W = [a]_Q/[F]_Q`.
    pub fn q_euler_polynomial_binomial(&self, n: u64, x: QArg) -> Result<S> {
        let w = self.lift(x.den);
        let qx = self.pow(x.num)?;
        let bracket = self.q_frac(x.num, x.den)?;
        let mut acc = S::zero();
        for j in 0..=n {
            acc = acc
                + choose::<S>(n, j)
                    * num_traits::pow(qx.clone(), j as usize)
                    * w.q_euler_number(j)?
                    * num_traits::pow(bracket.clone(), (n - j) as usize);
        }
        Ok(acc)
    }

    /// `E_{n,χ,Q}` from the table of `χ` on `0..f`:
    /// `([2]_Q/[2]_{Q^f}) [f]_Q^n Σ_a χ(a) (-1)^a Q^a E_{n,Q^f}(a/f)`.
    pub fn generalized_q_euler(&self, n: u64, chi: &[S]) -> Result<S> {
        let f = chi.len() as u64;
        if f == 0 || f.is_multiple_of(2) {
            return domain(format!(
                "generalized q-Euler numbers need an odd modulus, got {f}"
            ));
        }
        let mut acc = S::zero();
        for (a, c) in chi.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let a = a as i64;
            acc = acc
                + c.clone()
                    * alt::<S>(a as u64)
                    * self.pow(a)?
                    * self.q_euler_polynomial(n, QArg { num: a, den: f })?;
        }
        let ratio = self.div(self.q_int(2)?, &self.lift(f).q_int(2)?, || {
            "[2] vanishes at the lifted base".into()
        })?;
        Ok(ratio * num_traits::pow(self.q_int(f as i64)?, n as usize) * acc)
    }
}
