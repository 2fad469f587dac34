use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::binomial::GeneralizedBinomial;
use super::padic::PadicNumber;
use crate::error::{domain, Result};

pub fn is_odd_prime(p: u64) -> bool {
    p >= 3
        && p % 2 == 1
        && (3..)
            .step_by(2)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// Smallest generator of `(Z/p)^*`.
pub fn primitive_root(p: u64) -> u64 {
    assert!(is_odd_prime(p));
    let order = p - 1;
    let mut factors = Vec::new();
    let mut n = order;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            factors.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        factors.push(n);
    }
    (2..p)
        .find(|&g| {
            factors.iter().all(|&f| {
                BigInt::from(g).modpow(&BigInt::from(order / f), &BigInt::from(p)) != BigInt::one()
            })
        })
        .unwrap_or(1)
}

/// The Teichmüller lift `w(a)`: the `(p-1)`-th root of unity congruent to
/// `a` modulo `p`, correct modulo `p^digits`.
///
/// Iterates `x -> x^p` modulo `p^digits`; each step gains at least one
/// digit, so at most `digits` iterations are needed.
pub fn teichmuller(a: i64, p: u64, digits: u32) -> Result<PadicNumber> {
    if !is_odd_prime(p) {
        return domain(format!("teichmuller: {p} is not an odd prime"));
    }
    if digits == 0 {
        return domain("teichmuller: precision must be positive");
    }
    if a.rem_euclid(p as i64) == 0 {
        return domain(format!("teichmuller: {p} divides {a}"));
    }
    let m = BigInt::from(p).pow(digits);
    let pe = BigInt::from(p);
    let mut x = BigInt::from(a).mod_floor(&m);
    for _ in 0..=digits {
        let next = x.modpow(&pe, &m);
        if next == x {
            break;
        }
        x = next;
    }
    Ok(PadicNumber::from_residue(&x, p, digits as i64))
}

/// `base^s` for `base ≡ 1 (mod p)` and `s ∈ Z_p`, through the binomial
/// series `Σ C(s,k) (base-1)^k`.
///
/// With `v = v_p(base - 1) ≥ 1` the term of index `k` has valuation at least
/// `k v`, so summing to `K = ⌊A / v⌋`, where `A` is the absolute precision
/// of `base`, certifies the result modulo `p^((K+1) v)`.
pub fn padic_power(base: &PadicNumber, s: &PadicNumber) -> Result<PadicNumber> {
    let p = base.prime();
    if s.prime() != p {
        return domain("padic_power: mixed primes");
    }
    if matches!(s.valuation(), Some(v) if v < 0) {
        return domain(format!("padic_power: exponent {s} is not in Z_p"));
    }
    let one = base.constant(&num_traits::One::one());
    let d = base - &one;
    let v = match d.valuation_bound() {
        None => return Ok(one),
        Some(v) if v < 1 => {
            return domain(format!(
                "padic_power: base {base} is not congruent to 1 mod {p}"
            ))
        }
        Some(v) => v,
    };
    let target = base.absolute_precision().unwrap_or(64).max(1);
    let last = (target / v) as u64;
    let mut acc = PadicNumber::zero(p);
    let mut dk = one.clone();
    for k in 0..=last {
        acc = &acc + &(&s.generalized_binomial(k)? * &dk);
        dk = &dk * &d;
    }
    Ok(acc.cap((last as i64 + 1) * v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rational::Rational;

    #[test]
    fn primes_and_roots() {
        assert!(is_odd_prime(3) && is_odd_prime(11) && !is_odd_prime(9) && !is_odd_prime(2));
        assert_eq!(primitive_root(3), 2);
        assert_eq!(primitive_root(7), 3);
        assert_eq!(primitive_root(11), 2);
    }

    #[test]
    fn teichmuller_reference_values() {
        assert_eq!(
            teichmuller(2, 5, 2).unwrap().residue(2).unwrap(),
            BigInt::from(7)
        );
        assert_eq!(
            teichmuller(1, 7, 9).unwrap().residue(9).unwrap(),
            BigInt::one()
        );
        let minus_one = teichmuller(4, 5, 6).unwrap();
        assert_eq!(minus_one.residue(6).unwrap(), BigInt::from(5i64.pow(6) - 1));
        assert!(teichmuller(10, 5, 3).is_err());
        assert!(teichmuller(1, 2, 3).is_err());
    }

    #[test]
    fn padic_power_reference_values() {
        let p = 5;
        let six = PadicNumber::from_int(6, p, 2);
        let minus_one = PadicNumber::from_int(-1, p, 2);
        assert_eq!(
            padic_power(&six, &minus_one).unwrap().residue(2).unwrap(),
            BigInt::from(21)
        );
        let one = PadicNumber::one(p, 6);
        let s = PadicNumber::from_rational(&Rational::new(3.into(), 7.into()), p, 6);
        assert!(padic_power(&one, &s).unwrap().agrees_to(&one, 6));
        let b = PadicNumber::from_int(11, p, 6);
        let e1 = PadicNumber::one(p, 6);
        assert!(padic_power(&b, &e1).unwrap().agrees_to(&b, 6));
        assert!(padic_power(&PadicNumber::from_int(2, p, 6), &e1).is_err());
    }
}
