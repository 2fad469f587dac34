use super::{QArg, QBase};
use crate::error::{domain, Error, Result};
use crate::numerics::{binomial, Rational, Scalar};

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

impl<S: Scalar> QBase<'_, S> {
    /// `[2]_Q Σ_{l<n} (-1)^l Q^l [l]_Q^m` by direct summation (`0^0 = 1`).
    pub fn alt_power_sum(&self, n: u64, m: u64) -> Result<S> {
        let mut acc = S::zero();
        for l in 0..n {
            let l = l as i64;
            acc = acc
                + alt::<S>(l as u64) * self.pow(l)? * num_traits::pow(self.q_int(l)?, m as usize);
        }
        Ok(self.q_int(2)? * acc)
    }

    /// `(-1)^{n+1} Q^n Σ_{l<m} C(m,l) Q^{nl} E_{l,Q} [n]_Q^{m-l}
    ///  + ((-1)^{n+1} Q^{n(m+1)} + 1) E_{m,Q}`, for `m ≥ 1`.
    pub fn alt_power_sum_closed(&self, n: u64, m: u64) -> Result<S> {
        if m == 0 {
            return domain("the closed power-sum form needs m >= 1");
        }
        let ni = n as i64;
        let sign = alt::<S>(n + 1);
        let qn = self.q_int(ni)?;
        let mut inner = S::zero();
        for l in 0..m {
            inner = inner
                + choose::<S>(m, l)
                    * self.pow(ni * l as i64)?
                    * self.q_euler_number(l)?
                    * num_traits::pow(qn.clone(), (m - l) as usize);
        }
        let head = sign.clone() * self.pow(ni)? * inner;
        let tail = (sign * self.pow(ni * (m as i64 + 1))? + S::one()) * self.q_euler_number(m)?;
        Ok(head + tail)
    }

    /// `(-1)^{n+1} Q^n E_{m,Q}(n) + E_{m,Q}`.
    pub fn alt_power_sum_via_polynomial(&self, n: u64, m: u64) -> Result<S> {
        let ni = n as i64;
        Ok(
            alt::<S>(n + 1) * self.pow(ni)? * self.q_euler_polynomial(m, QArg::int(ni))?
                + self.q_euler_number(m)?,
        )
    }

    /// Both sides of the distribution relation for odd `m`, at the base
    /// `W = Q^F` of `x = (b, F)`:
    ///
    /// `E_{n,W}(x)` and `([2]_W/[2]_{W^m}) [m]_W^n Σ_{a<m} (-1)^a W^a E_{n,W^m}((a+x)/m)`.
    pub fn distribution_sides(&self, n: u64, m: u64, x: QArg) -> Result<(S, S)> {
        if m.is_multiple_of(2) {
            return domain(format!("the distribution relation needs odd m, got {m}"));
        }
        let w = self.lift(x.den);
        let lhs = self.q_euler_polynomial(n, x)?;
        let f = x.den as i64;
        let mut acc = S::zero();
        for a in 0..m as i64 {
            let y = QArg {
                num: a * f + x.num,
                den: x.den * m,
            };
            acc = acc + alt::<S>(a as u64) * w.pow(a)? * self.q_euler_polynomial(n, y)?;
        }
        let ratio = w
            .q_int(2)?
            .checked_div(&w.lift(m).q_int(2)?)
            .ok_or_else(|| Error::Domain("[2] vanishes at the lifted base".into()))?;
        let rhs = ratio * num_traits::pow(w.q_int(m as i64)?, n as usize) * acc;
        Ok((lhs, rhs))
    }
}

#[cfg(test)]
mod tests {
    use crate::numerics::{int, rat};
    use crate::qeuler::{QArg, QContext};

    #[test]
    fn power_sum_values() {
        let c = QContext::rational(rat(1, 2)).unwrap();
        assert_eq!(c.alt_power_sum(1, 3).unwrap(), int(0));
        assert_eq!(c.alt_power_sum(2, 1).unwrap(), rat(-3, 4));
        assert_eq!(c.alt_power_sum_closed(2, 1).unwrap(), rat(-3, 4));
        assert_eq!(c.alt_power_sum_closed(1, 1).unwrap(), int(0));
        assert_eq!(c.alt_power_sum_via_polynomial(2, 1).unwrap(), rat(-3, 4));
        assert!(c.alt_power_sum_closed(3, 0).is_err());
        let cl = QContext::classical();
        assert_eq!(cl.alt_power_sum(4, 0).unwrap(), int(0));
    }

    #[test]
    fn closed_form_matches_direct_sum() {
        for q in [rat(3, 7), int(-5), rat(9, 2)] {
            let c = QContext::rational(q).unwrap();
            for n in 1..6 {
                for m in 1..5 {
                    let direct = c.alt_power_sum(n, m).unwrap();
                    assert_eq!(direct, c.alt_power_sum_closed(n, m).unwrap(), "n={n} m={m}");
                    assert_eq!(direct, c.alt_power_sum_via_polynomial(n, m).unwrap());
                }
            }
        }
    }

    #[test]
    fn distribution_relation() {
        let c = QContext::rational(rat(1, 2)).unwrap();
        for (n, m, x) in [
            (1, 3, QArg::int(0)),
            (2, 5, QArg::int(1)),
            (3, 1, QArg::int(2)),
        ] {
            let (l, r) = c.base(1).distribution_sides(n, m, x).unwrap();
            assert_eq!(l, r);
        }
        let (l, r) = c
            .base(1)
            .distribution_sides(3, 3, QArg::new(2, 5).unwrap())
            .unwrap();
        assert_eq!(l, r);
        assert!(c.base(1).distribution_sides(1, 2, QArg::int(0)).is_err());
    }
}
