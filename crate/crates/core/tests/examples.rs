//! Worked values, each checked against a hand value or an independent
//! computation written out here.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Zero};

use qlfun::characters::DirichletCharacter;
use qlfun::numerics::{
    binomial, generalized_binomial, int, padic_power, rat, teichmuller, verify_binomial_identities,
    PadicNumber, Rational,
};
use qlfun::qeuler::{classical_euler_numbers, PadicQContext, QArg, QContext};
use qlfun::zeta_arch::{dirichlet_l, partial_zeta, zeta_e, Truncation};
use qlfun::zeta_padic::{remark_a_sides, PadicZeta};

fn ctx(q: Rational) -> QContext<Rational> {
    QContext::rational(q).unwrap()
}

fn residue(x: &PadicNumber, k: u32) -> BigInt {
    x.residue(k).unwrap()
}

/// `E_{m,q} = [2]_q (1-q)^{-m} Σ_l C(m,l) (-1)^l / (1 + q^{l+1})`.
fn euler_oracle(m: u64, q: &Rational) -> Rational {
    let one = Rational::one();
    let mut acc = Rational::zero();
    for l in 0..=m {
        let term = Rational::from_integer(binomial(m, l)) / (&one + q.pow(l as i32 + 1));
        acc += if l % 2 == 0 { term } else { -term };
    }
    (&one + q) * acc / (&one - q).pow(m as i32)
}

#[test]
fn binomials() {
    assert_eq!(binomial(5, 2), BigInt::from(10));
    assert_eq!(binomial(9, 0), BigInt::one());
    assert_eq!(binomial(4, 7), BigInt::zero());
    assert_eq!(generalized_binomial(&int(-2), 2).unwrap(), int(3));
    assert_eq!(generalized_binomial(&rat(7, 3), 0).unwrap(), int(1));
    assert_eq!(generalized_binomial(&rat(1, 2), 2).unwrap(), rat(-1, 8));
    assert_eq!(verify_binomial_identities(2, 1, 1).unwrap(), [true; 3]);
    assert_eq!(verify_binomial_identities(3, 0, 1).unwrap(), [true; 3]);
}

#[test]
fn teichmuller_lifts() {
    assert_eq!(residue(&teichmuller(1, 7, 6).unwrap(), 6), BigInt::one());
    assert_eq!(residue(&teichmuller(2, 5, 2).unwrap(), 2), BigInt::from(7));
    for p in [3u64, 5, 7] {
        let w = teichmuller(p as i64 - 1, p, 5).unwrap();
        assert_eq!(residue(&w, 5), BigInt::from(p.pow(5) - 1));
    }
    // brute force: the unique x mod p^3 with x ≡ a (mod p) and x^(p-1) ≡ 1
    for p in [3i64, 5, 7] {
        let m = p.pow(3);
        for a in 1..p {
            let x = (0..m)
                .find(|&x| {
                    x % p == a
                        && BigInt::from(x).modpow(&BigInt::from(p - 1), &BigInt::from(m))
                            == BigInt::one()
                })
                .unwrap();
            assert_eq!(
                residue(&teichmuller(a, p as u64, 3).unwrap(), 3),
                BigInt::from(x)
            );
        }
    }
}

#[test]
fn padic_powers() {
    let n = 2;
    let six = PadicNumber::from_int(6, 5, n);
    let one = PadicNumber::one(5, n);
    assert_eq!(residue(&padic_power(&one, &six).unwrap(), n), BigInt::one());
    assert!(padic_power(&six, &one).unwrap().agrees_to(&six, n as i64));
    let inv = padic_power(&six, &PadicNumber::from_int(-1, 5, n)).unwrap();
    assert_eq!(residue(&inv, n), BigInt::from(21));
}

#[test]
fn q_integers() {
    let c = ctx(rat(1, 2));
    assert_eq!(c.q_int(0).unwrap(), int(0));
    assert_eq!(c.q_int(1).unwrap(), int(1));
    assert_eq!(c.q_int(3).unwrap(), rat(7, 4));
    assert_eq!(c.q_int_neg(0).unwrap(), int(0));
    assert_eq!(c.q_int_neg(1).unwrap(), int(1));
    assert_eq!(c.q_int_neg(2).unwrap(), rat(1, 2));
    assert_eq!(c.q_frac(3, 3).unwrap(), int(1));
    assert_eq!(c.q_frac(0, 3).unwrap(), int(0));
    assert_eq!(c.q_frac(1, 3).unwrap(), rat(4, 7));
}

#[test]
fn q_euler_numbers() {
    let c = ctx(rat(1, 2));
    assert_eq!(c.q_euler_number(0).unwrap(), int(1));
    assert_eq!(c.q_euler_number(1).unwrap(), rat(-2, 5));
    assert_eq!(c.q_euler_number(2).unwrap(), rat(-4, 15));
    assert_eq!(QContext::classical().q_euler_number(1).unwrap(), rat(-1, 2));
    for q in [rat(1, 2), rat(-3, 7), int(4), rat(5, 3)] {
        let c = ctx(q.clone());
        for m in 0..=8 {
            assert_eq!(c.q_euler_number(m).unwrap(), euler_oracle(m, &q), "m = {m}");
        }
    }
    // 2/(e^t + 1) = 1 - t/2 + t^3/24 - t^5/240 + ...
    let e = classical_euler_numbers(5);
    assert_eq!(
        e,
        [int(1), rat(-1, 2), int(0), rat(1, 4), int(0), rat(-1, 2)]
    );
}

#[test]
fn q_euler_polynomials() {
    let c = ctx(rat(1, 2));
    for n in 0..5 {
        assert_eq!(
            c.q_euler_polynomial(n, QArg::int(0)).unwrap(),
            c.q_euler_number(n).unwrap()
        );
        assert_eq!(
            c.q_euler_polynomial_binomial(n, QArg::int(0)).unwrap(),
            c.q_euler_number(n).unwrap()
        );
    }
    assert_eq!(c.q_euler_polynomial(0, QArg::int(3)).unwrap(), int(1));
    assert_eq!(c.q_euler_polynomial(1, QArg::int(1)).unwrap(), rat(4, 5));
    assert_eq!(
        c.q_euler_polynomial_binomial(1, QArg::int(1)).unwrap(),
        rat(4, 5)
    );
    assert_eq!(
        c.q_euler_polynomial_binomial(1, QArg::int(2)).unwrap(),
        rat(7, 5)
    );
    assert_eq!(c.q_euler_polynomial(1, QArg::int(2)).unwrap(), rat(7, 5));
}

#[test]
fn generalized_numbers() {
    let c = ctx(rat(1, 2));
    let trivial = DirichletCharacter::trivial(1)
        .unwrap()
        .values_rational()
        .unwrap();
    for n in 0..4 {
        assert_eq!(
            c.base(1).generalized_q_euler(n, &trivial).unwrap(),
            c.q_euler_number(n).unwrap()
        );
    }
    let quad = DirichletCharacter::quadratic(3)
        .unwrap()
        .values_rational()
        .unwrap();
    assert_eq!(c.base(1).generalized_q_euler(0, &quad).unwrap(), int(-1));
    // closed geometric form -q(1+q)^2/(1+q^3)
    let q = rat(2, 5);
    let closed = -&q * (int(1) + &q).pow(2) / (int(1) + q.pow(3));
    assert_eq!(
        ctx(q).base(1).generalized_q_euler(0, &quad).unwrap(),
        closed
    );
}

#[test]
fn alternating_power_sums() {
    let c = ctx(rat(1, 2));
    for m in 1..4 {
        assert_eq!(c.alt_power_sum(1, m).unwrap(), int(0));
        assert_eq!(c.alt_power_sum_closed(1, m).unwrap(), int(0));
    }
    assert_eq!(c.alt_power_sum(2, 1).unwrap(), rat(-3, 4));
    assert_eq!(c.alt_power_sum_closed(2, 1).unwrap(), rat(-3, 4));
    assert_eq!(c.alt_power_sum_via_polynomial(2, 1).unwrap(), rat(-3, 4));
    let classical = QContext::classical();
    for n in [2, 4, 6] {
        assert_eq!(classical.alt_power_sum(n, 0).unwrap(), int(0));
    }
}

#[test]
fn distribution() {
    let c = ctx(rat(1, 2));
    for (m, n, x) in [(1, 3, 2), (3, 1, 0), (5, 2, 1)] {
        let (l, r) = c.base(1).distribution_sides(n, m, QArg::int(x)).unwrap();
        assert_eq!(l, r, "m = {m}, n = {n}, x = {x}");
    }
}

#[test]
fn volkenborn_levels() {
    let k = PadicQContext::new(3, 12, int(4)).unwrap();
    for level in 1..=3 {
        let v = k.volkenborn_approx(0, level).unwrap();
        assert!(v.agrees_to(&PadicNumber::one(3, 12), 12));
    }
    let target = k.embed(&rat(-4, 17));
    let agreement: Vec<i64> = (1..=4)
        .map(|l| {
            k.volkenborn_approx(1, l)
                .unwrap()
                .agreement(&target)
                .unwrap()
        })
        .collect();
    assert!(agreement.windows(2).all(|w| w[0] <= w[1]), "{agreement:?}");
    assert!(
        agreement.iter().zip(1..).all(|(&a, l)| a >= l - 2),
        "{agreement:?}"
    );

    let k = PadicQContext::new(5, 12, int(6)).unwrap();
    let target = k.embed(&euler_oracle(2, &int(6)));
    let agreement: Vec<i64> = (1..=3)
        .map(|l| {
            k.volkenborn_approx(2, l)
                .unwrap()
                .agreement(&target)
                .unwrap()
        })
        .collect();
    assert!(agreement.windows(2).all(|w| w[0] <= w[1]) && agreement[2] > agreement[0]);
}

#[test]
fn characters() {
    let one = DirichletCharacter::trivial(1).unwrap();
    assert_eq!(one.values_rational().unwrap(), [int(1)]);
    assert_eq!(
        DirichletCharacter::trivial(3)
            .unwrap()
            .values_rational()
            .unwrap(),
        [int(0), int(1), int(1)]
    );
    let q3 = DirichletCharacter::quadratic(3)
        .unwrap()
        .values_rational()
        .unwrap();
    assert_eq!((q3[1].clone(), q3[2].clone()), (int(1), int(-1)));
    for p in [3u64, 5, 7, 11] {
        let chi = DirichletCharacter::quadratic(p)
            .unwrap()
            .values_rational()
            .unwrap();
        let sign = if (p - 1) / 2 % 2 == 0 {
            int(1)
        } else {
            int(-1)
        };
        assert_eq!(chi[p as usize - 1], sign);
        assert_eq!(chi[1], int(1));
        assert_eq!(chi[0], int(0));
        // Euler's criterion
        for a in 1..p {
            let e = BigInt::from(a).modpow(&BigInt::from((p - 1) / 2), &BigInt::from(p));
            assert_eq!(chi[a as usize] == int(1), e == BigInt::one());
        }
    }
    assert_eq!(
        DirichletCharacter::quadratic(5)
            .unwrap()
            .values_rational()
            .unwrap()[4],
        int(1)
    );
    let w0 = DirichletCharacter::teichmuller_power(0, 5).unwrap();
    assert_eq!(
        w0.values_rational().unwrap(),
        DirichletCharacter::trivial(5)
            .unwrap()
            .values_rational()
            .unwrap()
    );
    let w2 = DirichletCharacter::teichmuller_power(2, 5).unwrap();
    assert_eq!(
        w2.values_rational().unwrap(),
        DirichletCharacter::quadratic(5)
            .unwrap()
            .values_rational()
            .unwrap()
    );
    let w1 = DirichletCharacter::teichmuller_power(1, 5)
        .unwrap()
        .values_padic(5, 2)
        .unwrap();
    assert_eq!(residue(&w1[2], 2), BigInt::from(7));
}

#[test]
fn complex_series() {
    let tr = Truncation::default();
    let q = QContext::complex(Complex64::new(0.3, 0.0)).unwrap();
    for x in [QArg::int(0), QArg::int(1), QArg::new(1, 3).unwrap()] {
        let v = zeta_e(Complex64::new(0.0, 0.0), x, &q, &tr).unwrap();
        assert!((v.value - 1.0).norm() < 1e-10, "{x}");
    }
    let v = zeta_e(Complex64::new(-1.0, 0.0), QArg::int(0), &q, &tr).unwrap();
    assert!((v.value.re + 0.3 / 1.09).abs() < 1e-8);
    assert!((v.value.re + 0.27523).abs() < 1e-5);

    let half = QContext::complex(Complex64::new(0.5, 0.0)).unwrap();
    let chi = DirichletCharacter::quadratic(3).unwrap();
    let l = dirichlet_l(Complex64::new(0.0, 0.0), &chi, &half, &tr).unwrap();
    assert!((l.value + 1.0).norm() < 1e-10);

    let tight = Truncation::new(1e-30, 10).unwrap();
    assert!(zeta_e(Complex64::new(1.0, 0.0), QArg::int(1), &q, &tight).is_err());
}

#[test]
fn partial_zeta_at_negative_integers() {
    let tr = Truncation::default();
    let qc = Complex64::new(0.4, 0.0);
    let cq = QContext::complex(qc).unwrap();
    let q = rat(2, 5);
    let exact = ctx(q.clone());
    for f in [3u64, 5] {
        for a in 1..f as i64 {
            for n in 0..4u64 {
                let h = partial_zeta(Complex64::new(-(n as f64), 0.0), a, f, &cq, &tr).unwrap();
                let sign = if a % 2 == 0 { int(1) } else { int(-1) };
                let w = q.pow(f as i32);
                let oracle = sign * q.pow(a as i32) * exact.q_int(f as i64).unwrap().pow(n as i32)
                    / (int(1) + &w)
                    * exact
                        .q_euler_polynomial(n, QArg::new(a, f).unwrap())
                        .unwrap();
                let o = qlfun::numerics::to_f64(&oracle);
                assert!((h.series.value.re - o).abs() < 1e-8);
                assert!((h.closed.re - o).abs() < 1e-8);
            }
        }
    }
}

#[test]
fn padic_partial_zeta() {
    let z = PadicZeta::new(PadicQContext::new(5, 6, int(6)).unwrap(), 5).unwrap();
    assert!(z.angle(1).unwrap().agrees_to(&PadicNumber::one(5, 6), 6));
    assert_eq!(residue(&z.angle(2).unwrap(), 2), BigInt::one());
    for a in 1..5 {
        assert_eq!(residue(&z.angle(a).unwrap(), 1), BigInt::one());
    }
    // s = 0 leaves (-1)^a q^a / [2]_{q^F}
    let zero = z.integer(0);
    for a in 1..5i64 {
        let sign = if a % 2 == 0 { int(1) } else { int(-1) };
        let expect = sign * int(6).pow(a as i32) / (int(1) + int(6).pow(5));
        let got = z.partial_zeta(&zero, a).unwrap();
        assert!(got.agrees_to(&PadicNumber::from_rational(&expect, 5, 12), 7));
    }
}

#[test]
fn padic_l_congruences() {
    let z = PadicZeta::new(PadicQContext::new(5, 8, int(6)).unwrap(), 5).unwrap();
    let chi = DirichletCharacter::teichmuller_power(0, 5).unwrap();
    let a = z.padic_l(&z.integer(2), &chi).unwrap();
    let b = z.padic_l(&z.integer(7), &chi).unwrap();
    assert!(a.agrees_to(&b, 1));

    let z = PadicZeta::new(PadicQContext::new(3, 8, int(4)).unwrap(), 3).unwrap();
    let chi = DirichletCharacter::teichmuller_power(0, 3).unwrap();
    let a = z.padic_l(&z.integer(1), &chi).unwrap();
    let b = z.padic_l(&z.integer(4), &chi).unwrap();
    assert!(a.agrees_to(&b, 1));
}

#[test]
fn power_sum_values() {
    let z = PadicZeta::new(PadicQContext::new(3, 8, int(4)).unwrap(), 3).unwrap();
    assert_eq!(z.theorem5_lhs_exact(1, 1).unwrap(), int(-4));
    assert_eq!(z.theorem5_lhs_exact(0, 1).unwrap(), int(0));
    let rebuilt = z.reconstruction(2, 1).unwrap();
    assert!(rebuilt.agrees_to(&z.theorem5_lhs(2, 1).unwrap(), 6));

    let classical = PadicZeta::new(PadicQContext::classical(3, 8).unwrap(), 3).unwrap();
    assert_eq!(classical.theorem5_lhs_exact(1, 1).unwrap(), int(-1));
}

#[test]
fn reciprocal_sums() {
    let (l, r, _) = remark_a_sides(3, &rat(1, 2)).unwrap();
    assert_eq!((l, r), (rat(-1, 3), rat(-1, 3)));
    let (l, r, _) = remark_a_sides(5, &rat(1, 2)).unwrap();
    assert_eq!(l, r);
    let (l, r, _) = remark_a_sides(3, &int(4)).unwrap();
    assert_eq!((l, r), (rat(-4, 5), rat(-4, 5)));
    // both sides -q/(1+q) at p = 3
    for q in [rat(2, 7), rat(-5, 3)] {
        let (l, _, _) = remark_a_sides(3, &q).unwrap();
        assert_eq!(l, -&q / (int(1) + &q));
    }
}
