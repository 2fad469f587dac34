//! Suites decided by exact rational equality.

use serde_json::json;

use super::{q_json, SuiteParams};
use crate::error::Result;
use crate::numerics::{check_binomial_identity, rat, BinomialIdentity, Rational};
use crate::qeuler::{QArg, QContext};
use crate::report::{ReportBuilder, VerificationReport};
use crate::zeta_padic::remark_a_sides;

pub(super) fn eq5(params: &SuiteParams) -> Result<VerificationReport> {
    let mut rng = params.rng();
    let mut b = ReportBuilder::new("eq5", params.json());
    for q in params.rational_qs(&mut rng, 20) {
        let ctx = QContext::rational(q.clone())?;
        for n in SuiteParams::range(params.n, 0, 8) {
            for x in 0..=5i64 {
                let direct = ctx.q_euler_polynomial(n, QArg::int(x))?;
                let expanded = ctx.q_euler_polynomial_binomial(n, QArg::int(x))?;
                b.exact(json!({"q": q_json(&q), "n": n, "x": x}), &direct, &expanded);
            }
        }
    }
    Ok(b.finish())
}

pub(super) fn eq13(params: &SuiteParams) -> Result<VerificationReport> {
    let mut rng = params.rng();
    let mut b = ReportBuilder::new("eq13", params.json());
    for q in params.rational_qs(&mut rng, 20) {
        let ctx = QContext::rational(q.clone())?;
        for n in SuiteParams::range(params.n, 1, 10) {
            for m in SuiteParams::range(params.m, 1, 8) {
                let direct = ctx.alt_power_sum(n, m)?;
                let closed = ctx.alt_power_sum_closed(n, m)?;
                b.exact(json!({"q": q_json(&q), "n": n, "m": m}), &direct, &closed);
            }
        }
    }
    Ok(b.finish())
}

pub(super) fn dist(params: &SuiteParams) -> Result<VerificationReport> {
    let qs: Vec<Rational> = match &params.q {
        Some(q) => vec![q.clone()],
        None => vec![rat(1, 2), rat(-2, 3), rat(3, 1)],
    };
    let xs = [QArg::int(0), QArg::int(1), QArg { num: 1, den: 3 }];
    let mut b = ReportBuilder::new("dist", params.json());
    for q in &qs {
        let ctx = QContext::rational(q.clone())?;
        for m in params.m.map_or_else(|| vec![1, 3, 5], |m| vec![m]) {
            for n in SuiteParams::range(params.n, 0, 5) {
                for x in xs {
                    let (lhs, rhs) = ctx.base(1).distribution_sides(n, m, x)?;
                    b.exact(
                        json!({"q": q_json(q), "m": m, "n": n, "x": x.to_string()}),
                        &lhs,
                        &rhs,
                    );
                }
            }
        }
    }
    Ok(b.finish())
}

pub(super) fn eq22_23(params: &SuiteParams) -> Result<VerificationReport> {
    let mut b = ReportBuilder::new("eq22-23", params.json());
    let mut skipped = 0usize;
    for r in SuiteParams::range(params.r, 1, 10) {
        for k in SuiteParams::range(params.k, 0, 10) {
            for j in SuiteParams::range(params.j, 0, 10) {
                if params.k.is_none() && params.j.is_none() && k + j > 10 {
                    continue;
                }
                for which in [
                    BinomialIdentity::First,
                    BinomialIdentity::Second,
                    BinomialIdentity::Third,
                ] {
                    match check_binomial_identity(which, r, k, j) {
                        Ok(holds) => {
                            b.property(
                                json!({"identity": which.label(), "r": r, "k": k, "j": j}),
                                json!(holds),
                                json!(true),
                                holds,
                            );
                        }
                        Err(_) => skipped += 1,
                    }
                }
            }
        }
    }
    if skipped > 0 {
        b.finding(
            "excluded_arguments",
            json!({"count": skipped, "reason": "outside the domain of the identity"}),
        );
    }
    Ok(b.finish())
}

pub(super) fn remark_a(params: &SuiteParams) -> Result<VerificationReport> {
    let mut rng = params.rng();
    let mut b = ReportBuilder::new("remark-a", params.json());
    let qs = params.rational_qs(&mut rng, 20);
    for p in params.primes_or(&[3, 5, 7, 11]) {
        for q in &qs {
            let (lhs, rhs, termwise) = remark_a_sides(p, q)?;
            let inputs = json!({"p": p, "q": q_json(q)});
            b.exact(inputs, &lhs, &rhs);
            b.property(
                json!({"p": p, "q": q_json(q), "check": "termwise"}),
                json!(termwise),
                json!(true),
                termwise,
            );
        }
    }
    Ok(b.finish())
}
