//! p-adic suites.

use num_bigint::BigInt;
use rand::Rng;
use serde_json::{json, Value};

use super::{q_json, SuiteParams};
use crate::characters::DirichletCharacter;
use crate::error::Result;
use crate::numerics::{int, rat, rational_valuation, PadicNumber, Rational};
use crate::qeuler::PadicQContext;
use crate::report::{padic_json, ReportBuilder, VerificationReport};
use crate::zeta_padic::{PadicZeta, Theorem5Form};

/// Digits the comparisons may lose to division and alignment.
const SLACK: u32 = 2;

fn zeta(p: u64, q: &Rational, n: u32) -> Result<PadicZeta> {
    PadicZeta::new(PadicQContext::new(p, n, q.clone())?, p)
}

fn qs_for(params: &SuiteParams, p: u64) -> Vec<Rational> {
    match &params.q {
        Some(q) => vec![q.clone()],
        None => vec![int(1 + p as i64), int(1 + 2 * p as i64)],
    }
}

fn required(n: u32) -> i64 {
    n.saturating_sub(SLACK) as i64
}

fn exponent_json(x: Option<i64>) -> Value {
    x.map_or(Value::Null, |e| json!(e))
}

pub(super) fn eq17(params: &SuiteParams) -> Result<VerificationReport> {
    let prec = params.prec_or(10);
    let mut b = ReportBuilder::new("eq17", params.json());
    for p in params.primes_or(&[3, 5]) {
        for q in qs_for(params, p) {
            let z = zeta(p, &q, prec)?;
            for n in SuiteParams::range(params.n, 0, 6) {
                let s = z.integer(-(n as i64));
                for a in 1..p as i64 {
                    let series = z.partial_zeta(&s, a)?;
                    let oracle = z.partial_zeta_oracle(n, a)?;
                    b.padic(
                        json!({"p": p, "q": q_json(&q), "n": n, "a": a}),
                        &series,
                        &oracle,
                        required(prec),
                    );
                }
            }
        }
    }
    Ok(b.finish())
}

pub(super) fn eq18_1(params: &SuiteParams) -> Result<VerificationReport> {
    let prec = params.prec_or(10);
    let mut b = ReportBuilder::new("eq18-1", params.json());
    let mut primitive = Vec::new();
    for p in params.primes_or(&[3, 5]) {
        let chars = [
            DirichletCharacter::teichmuller_power(1, p)?,
            DirichletCharacter::quadratic(p)?,
        ];
        for q in qs_for(params, p) {
            let z = zeta(p, &q, prec)?;
            for chi in &chars {
                for n in SuiteParams::range(params.n, 0, 6) {
                    let l = z.padic_l(&z.integer(-(n as i64)), chi)?;
                    let psi = chi.twist(&DirichletCharacter::teichmuller_power(-(n as i64), p)?);
                    let table = z.euler_factor_removed(n, &psi, false)?;
                    let inputs = json!({"p": p, "q": q_json(&q), "chi": chi.label(), "n": n});
                    b.padic(inputs.clone(), &l, &table, required(prec));
                    let prim = psi.primitive();
                    if prim.modulus() != psi.modulus() {
                        let literal = z.euler_factor_removed(n, &prim, false)?;
                        let ratio = z.euler_factor_removed(n, &prim, true)?;
                        primitive.push(json!({
                            "inputs": inputs,
                            "psi": prim.label(),
                            "literal_agreement": exponent_json(l.agreement(&literal)),
                            "with_ratio_agreement": exponent_json(l.agreement(&ratio)),
                        }));
                    }
                }
            }
        }
    }
    b.finding(
        "primitive_twist",
        json!({
            "note": "with the primitive character of χw^{-n} the Euler factor needs [2]_q/[2]_{q^p}",
            "cases": primitive,
        }),
    );
    Ok(b.finish())
}

pub(super) fn eq20(params: &SuiteParams) -> Result<VerificationReport> {
    let prec = params.prec_or(10);
    let mut b = ReportBuilder::new("eq20", params.json());
    let mut literal = Vec::new();
    for p in params.primes_or(&[3, 5]) {
        for q in qs_for(params, p) {
            let z = zeta(p, &q, prec)?;
            for n in SuiteParams::range(params.n, 0, 6) {
                let t = (n % (p - 1)) as i64;
                let chi = DirichletCharacter::teichmuller_power(t, p)?;
                let l = z.padic_l(&z.integer(-(n as i64)), &chi)?;
                let corrected = z.embed(&z.trivial_euler_factor_removed(n, true)?);
                let printed = z.embed(&z.trivial_euler_factor_removed(n, false)?);
                let inputs = json!({"p": p, "q": q_json(&q), "n": n, "t": t});
                literal.push(json!({
                    "inputs": inputs.clone(),
                    "agreement": exponent_json(l.agreement(&printed)),
                }));
                b.padic(inputs, &l, &corrected, required(prec));
            }
        }
    }
    b.finding(
        "printed_euler_factor",
        json!({
            "form": "E_{n,q} - [p]_q^n E_{n,q^p}",
            "gated_form": "E_{n,q} - ([2]_q/[2]_{q^p}) [p]_q^n E_{n,q^p}",
            "cases": literal,
        }),
    );
    Ok(b.finish())
}

fn random_zp(rng: &mut impl Rng, p: u64, digits: u32) -> PadicNumber {
    let mut residue = BigInt::from(0);
    for _ in 0..digits {
        residue = residue * p + rng.gen_range(0..p);
    }
    PadicNumber::from_residue(&residue, p, digits as i64)
}

pub(super) fn eq21(params: &SuiteParams) -> Result<VerificationReport> {
    let prec = params.prec_or(6);
    let mut rng = params.rng();
    let mut b = ReportBuilder::new("eq21", params.json());
    for p in params.primes_or(&[3, 5, 7]) {
        let q = params.q.clone().unwrap_or_else(|| int(1 + p as i64));
        let z = zeta(p, &q, prec)?;
        let chi = DirichletCharacter::teichmuller_power(0, p)?;
        let digits = prec + 8;
        for i in 0..params.trials_or(10) {
            let s1 = random_zp(&mut rng, p, digits);
            let s2 = random_zp(&mut rng, p, digits);
            let l1 = z.padic_l(&s1, &chi)?;
            let l2 = z.padic_l(&s2, &chi)?;
            let integral = l1.valuation().is_none_or(|v| v >= 0);
            b.property(
                json!({"p": p, "trial": i, "s": padic_json(&s1), "check": "integral"}),
                padic_json(&l1),
                json!("v_p >= 0"),
                integral,
            );
            b.padic(
                json!({"p": p, "trial": i, "s1": padic_json(&s1), "s2": padic_json(&s2)}),
                &l1,
                &l2,
                1,
            );
        }
        for k in SuiteParams::range(params.k, 1, 3) {
            let a = z.padic_l(&z.integer(k as i64), &chi)?;
            let c = z.padic_l(&z.integer((k + p) as i64), &chi)?;
            b.padic(json!({"p": p, "k": k, "k_plus_p": k + p}), &a, &c, 1);
        }
    }
    Ok(b.finish())
}

pub(super) fn eq24(params: &SuiteParams) -> Result<VerificationReport> {
    let prec = params.prec_or(8);
    let mut b = ReportBuilder::new("eq24", params.json());
    for p in params.primes_or(&[3, 5]) {
        let q = params.q.clone().unwrap_or_else(|| int(1 + p as i64));
        let z = zeta(p, &q, prec)?;
        for n in SuiteParams::range(params.n, 0, 3) {
            for r in SuiteParams::range(params.r, 1, 3) {
                for a in 1..p as i64 {
                    let lhs = z.embed(&z.eq24_lhs(n, r, a)?);
                    let rhs = z.eq24_rhs(n, r, a)?;
                    b.padic(
                        json!({"p": p, "q": q_json(&q), "n": n, "r": r, "a": a}),
                        &lhs,
                        &rhs,
                        required(prec),
                    );
                }
            }
        }
    }
    Ok(b.finish())
}

pub(super) fn eq30(params: &SuiteParams) -> Result<VerificationReport> {
    let mut b = ReportBuilder::new("eq30", params.json());
    let mut printed = Vec::new();
    for p in params.primes_or(&[3, 5]) {
        for q in qs_for(params, p) {
            let z = zeta(p, &q, 4)?;
            for n in SuiteParams::range(params.n, 0, 3) {
                for r in SuiteParams::range(params.r, 1, 3) {
                    let lhs = z.theorem5_lhs_exact(n, r)?;
                    let regrouped = z.residue_regrouped_exact(n, r, true)?;
                    let without_q = z.residue_regrouped_exact(n, r, false)?;
                    let inputs = json!({"p": p, "q": q_json(&q), "n": n, "r": r});
                    printed.push(json!({
                        "inputs": inputs.clone(),
                        "equal": without_q == lhs,
                        "valuation_of_difference": exponent_json(rational_valuation(&(&without_q - &lhs), p)),
                    }));
                    b.exact(inputs, &regrouped, &lhs);
                }
            }
        }
    }
    b.finding(
        "printed_regrouping",
        json!({
            "form": "[2]_q Σ_a Σ_l (-1)^{a+pl} / [a+pl]_q^r (without q^{a+pl})",
            "cases": printed,
        }),
    );
    Ok(b.finish())
}

fn form_agreements(
    z: &PadicZeta,
    n: u64,
    r: u64,
    lhs: &PadicNumber,
    forms: &[Theorem5Form],
) -> Result<Value> {
    let mut out = serde_json::Map::new();
    for form in forms {
        let v = z.theorem5_rhs(n, r, *form)?;
        out.insert(form.label(), exponent_json(v.agreement(lhs)));
    }
    Ok(Value::Object(out))
}

pub(super) fn thm5(params: &SuiteParams) -> Result<VerificationReport> {
    let prec = params.prec_or(8);
    let mut b = ReportBuilder::new("thm5", params.json());
    let mut literal = Vec::new();
    let forms = [
        Theorem5Form::Literal { shift: 0 },
        Theorem5Form::Literal { shift: 1 },
        Theorem5Form::CorrectedFromOne,
    ];
    for p in params.primes_or(&[3, 5]) {
        let q = params.q.clone().unwrap_or_else(|| int(1 + p as i64));
        let z = zeta(p, &q, prec)?;
        for n in SuiteParams::range(params.n, 1, 2) {
            for r in SuiteParams::range(params.r, 1, 2) {
                let lhs = z.theorem5_lhs(n, r)?;
                let inputs =
                    |what: &str| json!({"p": p, "q": q_json(&q), "n": n, "r": r, "rhs": what});
                b.padic(
                    inputs("reconstruction"),
                    &lhs,
                    &z.reconstruction(n, r)?,
                    required(prec),
                );
                let corrected = z.theorem5_rhs(n, r, Theorem5Form::CorrectedLeading)?;
                b.padic(
                    inputs("corrected_leading"),
                    &lhs,
                    &corrected,
                    required(prec),
                );
                literal.push(json!({
                    "inputs": {"p": p, "q": q_json(&q), "n": n, "r": r},
                    "agreement": form_agreements(&z, n, r, &lhs, &forms)?,
                }));
            }
        }
    }
    b.finding(
        "displayed_aggregate",
        json!({
            "required": required(prec),
            "note": "agreement exponents of the displayed arrangement and its variants with the power sum",
            "cases": literal,
        }),
    );
    Ok(b.finish())
}

pub(super) fn q1_corollary(params: &SuiteParams) -> Result<VerificationReport> {
    let prec = params.prec_or(8);
    let mut b = ReportBuilder::new("q1-corollary", params.json());
    let mut literal = Vec::new();
    for p in params.primes_or(&[3, 5]) {
        let z = PadicZeta::new(PadicQContext::classical(p, prec)?, p)?;
        for n in SuiteParams::range(params.n, 0, 2) {
            for r in SuiteParams::range(params.r, 1, 2) {
                let lhs = z.theorem5_lhs(n, r)?;
                let inputs = |what: &str| json!({"p": p, "n": n, "r": r, "rhs": what});
                b.padic(
                    inputs("reconstruction"),
                    &lhs,
                    &z.reconstruction(n, r)?,
                    required(prec),
                );
                let corrected = z.theorem5_rhs(n, r, Theorem5Form::CorrectedLeading)?;
                b.padic(inputs("corrected"), &lhs, &corrected, required(prec));
                let printed = z.theorem5_rhs(n, r, Theorem5Form::Corollary)?;
                literal.push(json!({
                    "inputs": {"p": p, "n": n, "r": r},
                    "agreement": exponent_json(printed.agreement(&lhs)),
                    "holds": printed.agrees_to(&lhs, required(prec)),
                }));
            }
        }
    }
    b.finding(
        "displayed_corollary",
        json!({
            "form": "2 Σ (-1)^j/j^r = -Σ_k (r/(r+k)) C(-r-1,k) (-1)^n (pn)^k l_p(r+k, w^{-r-k})",
            "gated_form": "the same plus l_p(r, w^{-r})",
            "cases": literal,
        }),
    );
    Ok(b.finish())
}

pub(super) fn integrality(params: &SuiteParams) -> Result<VerificationReport> {
    let mut rng = params.rng();
    let mut b = ReportBuilder::new("integrality", params.json());
    for p in params.primes_or(&[3, 5, 7]) {
        let pi = p as i64;
        let qs = match &params.q {
            Some(q) => vec![q.clone()],
            None => {
                let mut qs = vec![int(1 + pi), int(1 - pi), int(1 + 2 * pi)];
                for _ in 0..params.trials_or(3) {
                    let u = loop {
                        let u = rng.gen_range(-5..=5i64);
                        if u != 0 {
                            break u;
                        }
                    };
                    let w = loop {
                        let w = rng.gen_range(1..=5i64);
                        if w % pi != 0 {
                            break w;
                        }
                    };
                    qs.push(int(1) + rat(pi * u, w));
                }
                qs
            }
        };
        for q in qs {
            let ctx = PadicQContext::new(p, 8, q.clone())?;
            for m in SuiteParams::range(params.m, 0, 12) {
                let e = ctx.exact().q_euler_number(m)?;
                let v = rational_valuation(&e, p);
                b.property(
                    json!({"p": p, "q": q_json(&q), "m": m}),
                    json!({"value": q_json(&e), "valuation": exponent_json(v)}),
                    json!("v_p >= 0"),
                    v.is_none_or(|v| v >= 0),
                );
            }
        }
    }
    Ok(b.finish())
}

pub(super) fn volkenborn(params: &SuiteParams) -> Result<VerificationReport> {
    let prec = params.prec_or(12);
    let mut b = ReportBuilder::new("volkenborn", params.json());
    for p in params.primes_or(&[3, 5]) {
        let q = params.q.clone().unwrap_or_else(|| int(1 + p as i64));
        let ctx = PadicQContext::new(p, prec, q.clone())?;
        for m in SuiteParams::range(params.m, 0, 3) {
            let target = ctx.q_euler_number(m, 1)?;
            let mut exps = Vec::new();
            for level in 1..=4 {
                let approx = ctx.volkenborn_approx(m, level)?;
                exps.push(approx.agreement(&target).unwrap_or(i64::MAX));
            }
            let monotone = exps.windows(2).all(|w| w[0] <= w[1]);
            let shown: Vec<Value> = exps
                .iter()
                .map(|&e| if e == i64::MAX { Value::Null } else { json!(e) })
                .collect();
            b.property(
                json!({"p": p, "q": q_json(&q), "m": m, "levels": [1, 2, 3, 4]}),
                json!(shown),
                padic_json(&target),
                monotone,
            );
        }
    }
    Ok(b.finish())
}
