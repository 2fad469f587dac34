//! Dirichlet characters as value tables.
//!
//! A character of order `m` is stored as exponents: `χ(a) = ζ_m^{e(a)}`, with
//! no exponent where `gcd(a, f) > 1`. The table is embedded into a number
//! domain on demand:
//!
//! * rationals, only when `m <= 2`;
//! * complex numbers via `ζ_m = exp(2πi/m)`;
//! * `Z_p` when `m | p - 1`, via `ζ_m = w(g)^{(p-1)/m}` for the least
//!   primitive root `g`. With this choice the Teichmüller power `w^t` has
//!   exponents `t · ind_g(a)`, so its embedding is exactly `w(a)^t`.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{domain, Error, Result};
use crate::numerics::{is_odd_prime, primitive_root, teichmuller, PadicNumber, Rational, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirichletCharacter {
    modulus: u64,
    order: u64,
    exps: Vec<Option<u64>>,
    conductor: u64,
    label: String,
}

fn mod_pow(b: u64, e: u64, m: u64) -> u64 {
    let mut r = 1u128;
    let mut b = (b % m) as u128;
    let mut e = e;
    let m = m as u128;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r as u64
}

/// Discrete logarithms to the base `g` modulo the prime `p`.
fn index_table(p: u64, g: u64) -> Vec<u64> {
    let mut ind = vec![0; p as usize];
    let mut x = 1;
    for k in 0..p - 1 {
        ind[x as usize] = k;
        x = x * g % p;
    }
    ind
}

impl DirichletCharacter {
    /// Builds a character from exponents of `ζ_order`, checking support,
    /// `χ(1) = 1` and complete multiplicativity.
    pub fn from_exponents(modulus: u64, order: u64, exps: Vec<Option<u64>>) -> Result<Self> {
        Self::from_parts(modulus, order, exps, format!("table:{modulus}"))
    }

    fn from_parts(modulus: u64, order: u64, exps: Vec<Option<u64>>, label: String) -> Result<Self> {
        if modulus == 0 || order == 0 {
            return domain("character modulus and order must be positive");
        }
        if exps.len() as u64 != modulus {
            return domain(format!(
                "character table has {} entries for modulus {modulus}",
                exps.len()
            ));
        }
        let exps: Vec<Option<u64>> = exps.into_iter().map(|e| e.map(|e| e % order)).collect();
        for (a, e) in exps.iter().enumerate() {
            let unit = (a as u64).gcd(&modulus) == 1;
            if unit != e.is_some() {
                return domain(format!("character support is wrong at residue {a}"));
            }
        }
        if exps[(1 % modulus) as usize] != Some(0) {
            return domain("a character must send 1 to 1");
        }
        for a in 0..modulus {
            for b in a..modulus {
                let ab = exps[(a * b % modulus) as usize];
                let prod = match (exps[a as usize], exps[b as usize]) {
                    (Some(x), Some(y)) => Some((x + y) % order),
                    _ => None,
                };
                if ab != prod {
                    return domain(format!("character is not multiplicative at ({a}, {b})"));
                }
            }
        }
        let mut chi = Self {
            modulus,
            order,
            exps,
            conductor: modulus,
            label,
        };
        chi.reduce_order();
        chi.conductor = chi.find_conductor();
        Ok(chi)
    }

    fn reduce_order(&mut self) {
        let g = self
            .exps
            .iter()
            .flatten()
            .fold(self.order, |g, &e| g.gcd(&e));
        if g > 1 {
            self.order /= g;
            for e in self.exps.iter_mut().flatten() {
                *e /= g;
            }
        }
    }

    fn find_conductor(&self) -> u64 {
        let f = self.modulus;
        (1..=f)
            .filter(|d| f.is_multiple_of(*d))
            .find(|&d| {
                (0..f).all(|a| a.gcd(&f) != 1 || a % d != 1 % d || self.exps[a as usize] == Some(0))
            })
            .unwrap_or(f)
    }

    /// The principal character modulo `f`.
    pub fn trivial(f: u64) -> Result<Self> {
        if f == 0 {
            return domain("modulus must be positive");
        }
        let exps = (0..f).map(|a| (a.gcd(&f) == 1).then_some(0)).collect();
        Self::from_parts(f, 1, exps, format!("trivial:{f}"))
    }

    /// The Legendre symbol `(a|p)`.
    pub fn quadratic(p: u64) -> Result<Self> {
        if !is_odd_prime(p) {
            return domain(format!("quadratic character needs an odd prime, got {p}"));
        }
        let exps = (0..p)
            .map(|a| (a != 0).then(|| u64::from(mod_pow(a, (p - 1) / 2, p) != 1)))
            .collect();
        Self::from_parts(p, 2, exps, format!("quadratic:{p}"))
    }

    /// `w^t` modulo `p`.
    pub fn teichmuller_power(t: i64, p: u64) -> Result<Self> {
        if !is_odd_prime(p) {
            return domain(format!("Teichmüller character needs an odd prime, got {p}"));
        }
        let g = primitive_root(p);
        let ind = index_table(p, g);
        let t = t.rem_euclid(p as i64 - 1) as u64;
        let exps = (0..p)
            .map(|a| (a != 0).then(|| t * ind[a as usize] % (p - 1)))
            .collect();
        Self::from_parts(p, p - 1, exps, format!("teich:{p}:{t}"))
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Least `m` with `χ(a)^m = 1` for all units.
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn is_even(&self) -> bool {
        self.exponent(-1).is_some_and(|e| e == 0)
    }

    /// The exponent of `χ(n)`, `None` where `χ(n) = 0`.
    pub fn exponent(&self, n: i64) -> Option<u64> {
        self.exps[n.rem_euclid(self.modulus as i64) as usize]
    }

    /// The primitive character inducing this one.
    pub fn primitive(&self) -> Self {
        let d = self.conductor;
        let f = self.modulus;
        let exps = (0..d)
            .map(|b| {
                if b.gcd(&d) != 1 {
                    return None;
                }
                (0..f)
                    .map(|k| b + k * d)
                    .find(|a| a.gcd(&f) == 1)
                    .and_then(|a| self.exps[(a % f) as usize])
            })
            .collect();
        let mut chi = Self {
            modulus: d,
            order: self.order,
            exps,
            conductor: d,
            label: format!("primitive({})", self.label),
        };
        chi.reduce_order();
        chi
    }

    /// Pointwise product on the common modulus `lcm(f, g)`.
    pub fn twist(&self, other: &Self) -> Self {
        let m = self.modulus.lcm(&other.modulus);
        let order = self.order.lcm(&other.order);
        let (s1, s2) = (order / self.order, order / other.order);
        let exps = (0..m as i64)
            .map(|a| match (self.exponent(a), other.exponent(a)) {
                (Some(x), Some(y)) => Some((x * s1 + y * s2) % order),
                _ => None,
            })
            .collect();
        let label = format!("{}*{}", self.label, other.label);
        Self::from_parts(m, order, exps, label).expect("a product of characters is a character")
    }

    /// The induced character modulo a multiple of the modulus.
    pub fn lift_to(&self, modulus: u64) -> Result<Self> {
        if !modulus.is_multiple_of(self.modulus) {
            return domain(format!(
                "{modulus} is not a multiple of the modulus {}",
                self.modulus
            ));
        }
        Ok(self.twist(&Self::trivial(modulus)?))
    }

    /// `χ(n)` in the domain `D`.
    pub fn evaluate<D: CharacterDomain>(&self, n: i64) -> Result<D> {
        match self.exponent(n) {
            None => Ok(D::zero()),
            Some(e) => D::root_of_unity(self.order, e),
        }
    }

    /// The full table `χ(0), ..., χ(f-1)` in the domain `D`.
    pub fn values<D: CharacterDomain>(&self) -> Result<Vec<D>> {
        (0..self.modulus as i64).map(|a| self.evaluate(a)).collect()
    }

    pub fn values_rational(&self) -> Result<Vec<Rational>> {
        self.values()
    }

    pub fn values_complex(&self) -> Vec<Complex64> {
        self.values().expect("every order embeds into C")
    }

    /// Table embedded in `Z_p` modulo `p^digits`; needs `order | p - 1`.
    pub fn values_padic(&self, p: u64, digits: u32) -> Result<Vec<PadicNumber>> {
        let zeta = self.padic_root(p, digits)?;
        (0..self.modulus as i64)
            .map(|a| match self.exponent(a) {
                None => Ok(PadicNumber::zero(p)),
                Some(e) => zeta.pow(e as i64),
            })
            .collect()
    }

    /// `ζ_m = w(g)^{(p-1)/m}`.
    fn padic_root(&self, p: u64, digits: u32) -> Result<PadicNumber> {
        if !is_odd_prime(p) {
            return domain(format!("p = {p} is not an odd prime"));
        }
        if !(p - 1).is_multiple_of(self.order) {
            return Err(Error::Unsupported(format!(
                "character {} has order {}, which does not divide {} - 1; its values are not in Z_{p}",
                self.label, self.order, p
            )));
        }
        let w = teichmuller(primitive_root(p) as i64, p, digits)?;
        w.pow(((p - 1) / self.order) as i64)
    }
}

impl fmt::Display for DirichletCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

impl FromStr for DirichletCharacter {
    type Err = Error;

    /// `"trivial:f"`, `"quadratic:p"` or `"teich:p:t"`.
    fn from_str(text: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown character {text:?}"));
        let parts: Vec<&str> = text.trim().split(':').collect();
        let num = |s: &str| s.parse::<u64>().map_err(|_| bad());
        match parts.as_slice() {
            ["trivial", f] => Self::trivial(num(f)?),
            ["quadratic", p] => Self::quadratic(num(p)?),
            ["teich", p, t] => Self::teichmuller_power(t.parse().map_err(|_| bad())?, num(p)?),
            _ => Err(bad()),
        }
    }
}

/// A number domain that can hold character values.
pub trait CharacterDomain: Sized {
    fn zero() -> Self;
    /// `ζ_order^e`.
    fn root_of_unity(order: u64, e: u64) -> Result<Self>;
}

impl CharacterDomain for Rational {
    fn zero() -> Self {
        <Rational as Zero>::zero()
    }

    fn root_of_unity(order: u64, e: u64) -> Result<Self> {
        match (order, e % order) {
            (_, 0) => Ok(Rational::one()),
            (2, 1) => Ok(-Rational::one()),
            _ => Err(Error::Unsupported(format!(
                "a character of order {order} has non-rational values"
            ))),
        }
    }
}

impl CharacterDomain for Complex64 {
    fn zero() -> Self {
        <Complex64 as Zero>::zero()
    }

    fn root_of_unity(order: u64, e: u64) -> Result<Self> {
        Ok(match (order, e % order) {
            (_, 0) => Complex64::one(),
            (2, 1) => -Complex64::one(),
            (o, e) => Complex64::from_polar(1.0, std::f64::consts::TAU * e as f64 / o as f64),
        })
    }
}

/// Character tables in a [`Scalar`] domain.
pub fn scalar_values<S: Scalar + CharacterDomain>(chi: &DirichletCharacter) -> Result<Vec<S>> {
    chi.values()
}
