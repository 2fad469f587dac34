//! Complex q-zeta and q-l-series with certified truncation.
//!
//! All series have the shape `C · Σ_n c_n (-1)^n W^n z_n^{-s}` with
//! `|c_n| <= 1` and `|W| < 1`, where `z_n` is a q-integer ratio. If `lo` and
//! `hi` bound `|z_n|` and `|arg z_n| <= θ` for `n >= n0`, then
//! `|z_n^{-s}| <= M = exp(max(-Re s ln lo, -Re s ln hi) + |Im s| θ)`, so the
//! tail from `n0` is at most `|C| M |W|^{n0} / (1 - |W|)`. Summation stops at
//! the first `n0` where this is below `epsilon`.
//!
//! A fractional argument `x = (a, F)` is read at base `q^F`, as everywhere
//! else: `zeta_e(s, (a, F))` is `ζ_{E,q^F}(s, a/F)` with
//! `[n + a/F]_{q^F} = [nF + a]_q / [F]_q`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::characters::DirichletCharacter;
use crate::error::{domain, Error, Result};
use crate::numerics::{pow_neg_s, powi, ComplexRecord, Scalar};
use crate::qeuler::{QArg, QContext};

/// Stopping rule of a series evaluation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Truncation {
    pub epsilon: f64,
    pub max_terms: usize,
}

impl Default for Truncation {
    fn default() -> Self {
        Self {
            epsilon: 1e-12,
            max_terms: 200_000,
        }
    }
}

impl Truncation {
    pub fn new(epsilon: f64, max_terms: usize) -> Result<Self> {
        if !(epsilon > 0.0 && epsilon.is_finite()) || max_terms == 0 {
            return domain("truncation needs a positive finite epsilon and a positive term budget");
        }
        Ok(Self { epsilon, max_terms })
    }
}

/// A truncated series value with its certificate.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SeriesValue {
    #[serde(serialize_with = "as_record")]
    pub value: Complex64,
    pub terms: usize,
    pub tail_bound: f64,
    /// The `n = 0` term `0^{-s}` was singular and left out.
    pub skipped_singular_term: bool,
}

fn as_record<S: serde::Serializer>(z: &Complex64, ser: S) -> std::result::Result<S::Ok, S::Error> {
    ComplexRecord::from(*z).serialize(ser)
}

/// `[m]_q`.
fn qint(q: Complex64, m: i64) -> Complex64 {
    (Complex64::new(1.0, 0.0) - powi(q, m)) / (Complex64::new(1.0, 0.0) - q)
}

/// The series `Σ_{n>=start} c_n (-1)^n W^n ([nF + a]_q / d)^{-s}` with
/// `W = q^F`, scaled by `scale`.
struct Series<'a> {
    q: Complex64,
    f: i64,
    a: i64,
    start: u64,
    scale: Complex64,
    den: Complex64,
    coeff: &'a dyn Fn(i64) -> Complex64,
}

impl Series<'_> {
    fn tail_bound(&self, s: Complex64, n0: u64) -> f64 {
        let r = self.q.norm();
        let w = r.powi(self.f as i32);
        let m0 = n0 as f64 * self.f as f64 + self.a as f64;
        let rm = r.powf(m0);
        let one = Complex64::new(1.0, 0.0);
        let den = (one - self.q).norm() * self.den.norm();
        let lo = (1.0 - rm) / den;
        let hi = (1.0 + rm) / den;
        let shift = -(one - self.q).arg() - self.den.arg();
        let theta = (shift.abs() + rm.min(1.0).asin()).min(PI);
        let log_m = (-s.re * lo.ln()).max(-s.re * hi.ln()) + s.im.abs() * theta;
        self.scale.norm() * log_m.exp() * w.powf(n0 as f64) / (1.0 - w)
    }

    fn sum(&self, s: Complex64, tr: &Truncation) -> Result<SeriesValue> {
        let one = Complex64::new(1.0, 0.0);
        let w = powi(self.q, self.f);
        let mut acc = Complex64::new(0.0, 0.0);
        let mut skipped = false;
        let mut wn = powi(w, self.start as i64);
        let mut terms = 0;
        let mut n = self.start;
        loop {
            let bound = self.tail_bound(s, n);
            if bound <= tr.epsilon {
                let value = self.scale * acc;
                if !(value.re.is_finite() && value.im.is_finite()) {
                    return Err(Error::Domain("series value is not finite".into()));
                }
                return Ok(SeriesValue {
                    value,
                    terms,
                    tail_bound: bound,
                    skipped_singular_term: skipped,
                });
            }
            if terms >= tr.max_terms {
                return Err(Error::Convergence {
                    terms,
                    tail_bound: bound,
                    epsilon: tr.epsilon,
                });
            }
            let m = n as i64 * self.f + self.a;
            let c = (self.coeff)(n as i64);
            if c != Complex64::new(0.0, 0.0) {
                let z = if m == 0 {
                    Complex64::new(0.0, 0.0)
                } else {
                    (one - powi(self.q, m)) / (one - self.q) / self.den
                };
                match pow_neg_s(z, s) {
                    Some(v) => {
                        let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
                        acc += c * sign * wn * v;
                    }
                    None => skipped = true,
                }
            }
            wn *= w;
            n += 1;
            terms += 1;
        }
    }
}

fn check_s(s: Complex64) -> Result<()> {
    if s.re.is_finite() && s.im.is_finite() {
        Ok(())
    } else {
        domain("s must be finite")
    }
}

/// `ζ_{E,q^F}(s, a/F) = [2]_W Σ_{n>=0} (-1)^n W^n [n + a/F]_W^{-s}`, `W = q^F`.
///
/// At `a = 0` the `n = 0` term `0^{-s}` is dropped when it is singular and
/// the result says so.
pub fn zeta_e(
    s: Complex64,
    x: QArg,
    ctx: &QContext<Complex64>,
    tr: &Truncation,
) -> Result<SeriesValue> {
    check_s(s)?;
    if x.num < 0 {
        return domain(format!("zeta_E needs x >= 0, got {x}"));
    }
    let q = *ctx.q();
    let f = x.den as i64;
    let one = |_: i64| Complex64::new(1.0, 0.0);
    Series {
        q,
        f,
        a: x.num,
        start: 0,
        scale: Complex64::new(1.0, 0.0) + powi(q, f),
        den: qint(q, f),
        coeff: &one,
    }
    .sum(s, tr)
}

/// `l_q(s, χ) = [2]_q Σ_{n>=1} χ(n) (-1)^n q^n [n]_q^{-s}`.
pub fn dirichlet_l(
    s: Complex64,
    chi: &DirichletCharacter,
    ctx: &QContext<Complex64>,
    tr: &Truncation,
) -> Result<SeriesValue> {
    check_s(s)?;
    let q = *ctx.q();
    let table = chi.values_complex();
    let f = table.len() as i64;
    let coeff = move |n: i64| table[n.rem_euclid(f) as usize];
    Series {
        q,
        f: 1,
        a: 0,
        start: 1,
        scale: Complex64::new(1.0, 0.0) + q,
        den: Complex64::new(1.0, 0.0),
        coeff: &coeff,
    }
    .sum(s, tr)
}

/// The two evaluations of the partial zeta function `H_q(s, a : F)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PartialZeta {
    /// `Σ_{m ≡ a (F), m > 0} (-1)^m q^m [m]_q^{-s}`.
    pub series: SeriesValue,
    /// `(-1)^a q^a [F]_q^{-s} ζ_{E,q^F}(s, a/F) / [2]_{q^F}`.
    #[serde(serialize_with = "as_record")]
    pub closed: Complex64,
    /// `|series - closed|`.
    pub difference: f64,
    /// The residue-class sum with the extra factor `[2]_q/[2]_{q^F}` in
    /// front, as the two-form display of `H_q` prints it.
    #[serde(serialize_with = "as_record")]
    pub printed_series: Complex64,
}

pub fn partial_zeta(
    s: Complex64,
    a: i64,
    f: u64,
    ctx: &QContext<Complex64>,
    tr: &Truncation,
) -> Result<PartialZeta> {
    check_s(s)?;
    if f.is_multiple_of(2) || a <= 0 || a >= f as i64 {
        return domain(format!(
            "partial zeta needs odd F and 0 < a < F, got a = {a}, F = {f}"
        ));
    }
    let q = *ctx.q();
    let one = Complex64::new(1.0, 0.0);
    let fi = f as i64;
    let w = powi(q, fi);
    let sign = if a % 2 == 0 { 1.0 } else { -1.0 };
    // (-1)^{Fk + a} q^{Fk + a}: the (-1)^k W^k of the series times (-1)^a q^a.
    let unit = |_: i64| one;
    let series = Series {
        q,
        f: fi,
        a,
        start: 0,
        scale: sign * powi(q, a),
        den: one,
        coeff: &unit,
    };
    let series_value = series.sum(s, tr)?;
    let qf = qint(q, fi);
    let zeta = zeta_e(s, QArg { num: a, den: f }, ctx, tr)?;
    let qf_neg_s =
        pow_neg_s(qf, s).ok_or_else(|| Error::Domain("[F]_q^{-s} is singular".into()))?;
    let closed = sign * powi(q, a) * qf_neg_s * zeta.value / (one + w);
    let printed_series = series_value.value * (one + q) / (one + w);
    Ok(PartialZeta {
        series: series_value,
        closed,
        difference: (series_value.value - closed).norm(),
        printed_series,
    })
}

/// `H_q(-n, a : F) = (-1)^a q^a [F]_q^n E_{n,q^F}(a/F) / [2]_{q^F}`, exactly
/// in the domain of `ctx`.
pub fn partial_zeta_negative<S: Scalar>(n: u64, a: i64, f: u64, ctx: &QContext<S>) -> Result<S> {
    let base = ctx.base(1);
    let sign = if a % 2 == 0 { S::one() } else { -S::one() };
    let num = sign
        * base.pow(a)?
        * num_traits::pow(base.q_int(f as i64)?, n as usize)
        * ctx.q_euler_polynomial(n, QArg { num: a, den: f })?;
    num.checked_div(&base.lift(f).q_int(2)?)
        .ok_or_else(|| Error::Domain("[2]_{q^F} vanishes".into()))
}
