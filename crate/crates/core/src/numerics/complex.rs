//! Double-precision complex numbers and their `{re, im}` wire form.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type ComplexNumber = Complex64;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComplexRecord {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for ComplexRecord {
    fn from(z: Complex64) -> Self {
        Self { re: z.re, im: z.im }
    }
}

impl From<ComplexRecord> for Complex64 {
    fn from(r: ComplexRecord) -> Self {
        Complex64::new(r.re, r.im)
    }
}

/// Parses `"re"` or `"re,im"`.
pub fn parse_complex(text: &str) -> Result<Complex64> {
    let bad = || Error::Parse(format!("not a complex number: {text:?}"));
    let (re, im) = match text.split_once(',') {
        Some((re, im)) => (re, im),
        None => (text, "0"),
    };
    let re: f64 = re.trim().parse().map_err(|_| bad())?;
    let im: f64 = im.trim().parse().map_err(|_| bad())?;
    let z = Complex64::new(re, im);
    ensure_finite(z, text)
}

pub fn ensure_finite(z: Complex64, what: &str) -> Result<Complex64> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(Error::Domain(format!("non-finite complex value in {what}")))
    }
}

/// Integer power that stays exact for small exponents and never takes logs.
pub fn powi(z: Complex64, e: i64) -> Complex64 {
    if e >= 0 {
        z.powu(e as u32)
    } else {
        z.inv().powu(e.unsigned_abs() as u32)
    }
}

/// `z^(-s)` on the principal branch, with `0^0 = 1`.
///
/// Integer exponents use repeated multiplication. Returns `None` when `z = 0`
/// and `Re(-s) <= 0` with `s != 0`, where the power is singular or undefined.
pub fn pow_neg_s(z: Complex64, s: Complex64) -> Option<Complex64> {
    if s.im == 0.0 && s.re.fract() == 0.0 && s.re.abs() < 1.0e6 {
        let k = -(s.re as i64);
        if z == Complex64::new(0.0, 0.0) {
            return match k {
                0 => Some(Complex64::new(1.0, 0.0)),
                k if k > 0 => Some(Complex64::new(0.0, 0.0)),
                _ => None,
            };
        }
        return Some(powi(z, k));
    }
    if z == Complex64::new(0.0, 0.0) {
        return if -s.re > 0.0 {
            Some(Complex64::new(0.0, 0.0))
        } else {
            None
        };
    }
    Some((-s * z.ln()).exp())
}
