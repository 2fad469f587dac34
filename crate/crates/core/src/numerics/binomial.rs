use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Zero};

use super::padic::PadicNumber;
use super::rational::{int, Rational};
use crate::error::{Error, Result};

/// `C(n, k)` for nonnegative integers; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Falling factorial over `k!`, defined for any element of a domain that can
/// divide by `k!`.
pub trait GeneralizedBinomial: Sized {
    fn generalized_binomial(&self, k: u64) -> Result<Self>;
}

pub fn generalized_binomial<T: GeneralizedBinomial>(s: &T, k: u64) -> Result<T> {
    s.generalized_binomial(k)
}

fn factorial(k: u64) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

impl GeneralizedBinomial for Rational {
    fn generalized_binomial(&self, k: u64) -> Result<Self> {
        let mut acc = Rational::one();
        for i in 0..k {
            acc *= self - int(i as i64);
        }
        Ok(acc / Rational::from_integer(factorial(k)))
    }
}

impl GeneralizedBinomial for Complex64 {
    fn generalized_binomial(&self, k: u64) -> Result<Self> {
        let mut acc = Complex64::new(1.0, 0.0);
        for i in 0..k {
            acc *= self - i as f64;
            acc /= (i + 1) as f64;
        }
        Ok(acc)
    }
}

impl GeneralizedBinomial for PadicNumber {
    fn generalized_binomial(&self, k: u64) -> Result<Self> {
        let mut acc = self.constant(&Rational::one());
        for i in 0..k {
            acc = &acc * &(self - &self.constant(&int(i as i64)));
        }
        let kf = Rational::from_integer(factorial(k));
        let out = acc.checked_div(&self.constant(&kf))?;
        if out.is_zero() && matches!(out.absolute_precision(), Some(a) if a <= 0) {
            return Err(Error::Precision(format!(
                "binomial({self}, {k}) has no known digits after dividing by {k}!"
            )));
        }
        Ok(out)
    }
}

/// The three binomial-coefficient identities used to reorganise the
/// Theorem-5 series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BinomialIdentity {
    /// `C(-r,k) C(1-r-k,j) / (r+k-1) = -C(-r,k+j-1) C(k+j,j) / (j+k)`
    First,
    /// `C(-r,k) C(1-r-k,j) / (r+k-1) = C(1-r,k+j) C(k+j,j) / (r-1)`
    Second,
    /// `r/(r+k) C(-r-1,k) C(-r-k,j) = C(-r,k+j) C(k+j,j)`
    Third,
}

impl BinomialIdentity {
    pub fn label(self) -> &'static str {
        match self {
            Self::First => "22",
            Self::Second => "22-1",
            Self::Third => "23",
        }
    }

    fn excluded(self, r: i64, k: i64, j: i64) -> Option<String> {
        if j + k == 0 {
            return Some("requires j + k > 0".into());
        }
        match self {
            Self::First if r + k - 1 == 0 => Some("requires r != 1 - k".into()),
            Self::Second if r + k - 1 == 0 || r == 1 => {
                Some("requires r != 1 and r != 1 - k".into())
            }
            Self::Third if r + k == 0 => Some("requires r + k != 0".into()),
            _ => None,
        }
    }
}

fn gb(s: i64, k: i64) -> Rational {
    int(s)
        .generalized_binomial(k as u64)
        .expect("rational binomials are total")
}

/// Checks one identity exactly in rational arithmetic.
pub fn check_binomial_identity(which: BinomialIdentity, r: u64, k: u64, j: u64) -> Result<bool> {
    let (r, k, j) = (r as i64, k as i64, j as i64);
    if let Some(why) = which.excluded(r, k, j) {
        return Err(Error::Domain(format!(
            "identity ({}) excluded at r={r}, k={k}, j={j}: {why}",
            which.label()
        )));
    }
    let (lhs, rhs) = match which {
        BinomialIdentity::First => (
            gb(-r, k) * gb(1 - r - k, j) / int(r + k - 1),
            -gb(-r, k + j - 1) * gb(k + j, j) / int(j + k),
        ),
        BinomialIdentity::Second => (
            gb(-r, k) * gb(1 - r - k, j) / int(r + k - 1),
            gb(1 - r, k + j) * gb(k + j, j) / int(r - 1),
        ),
        BinomialIdentity::Third => (
            int(r) / int(r + k) * gb(-r - 1, k) * gb(-r - k, j),
            gb(-r, k + j) * gb(k + j, j),
        ),
    };
    Ok(lhs == rhs)
}

/// Checks all three identities; fails if any of them is excluded at these
/// arguments.
pub fn verify_binomial_identities(r: u64, k: u64, j: u64) -> Result<[bool; 3]> {
    Ok([
        check_binomial_identity(BinomialIdentity::First, r, k, j)?,
        check_binomial_identity(BinomialIdentity::Second, r, k, j)?,
        check_binomial_identity(BinomialIdentity::Third, r, k, j)?,
    ])
}
