//! Complex-domain suites: series against exact values.

use num_complex::Complex64;
use rand::Rng;
use serde_json::json;

use super::SuiteParams;
use crate::characters::DirichletCharacter;
use crate::error::Result;
use crate::numerics::{rat, to_f64, Rational};
use crate::qeuler::{QArg, QContext};
use crate::report::{complex_json, ReportBuilder, VerificationReport};
use crate::zeta_arch::{dirichlet_l, partial_zeta, zeta_e, Truncation};

const TOLERANCE: f64 = 1e-8;

fn real_qs(params: &SuiteParams) -> Vec<Rational> {
    match &params.q {
        Some(q) => vec![q.clone()],
        None => vec![rat(1, 10), rat(3, 10), rat(1, 2)],
    }
}

fn contexts(q: &Rational) -> Result<(QContext<Rational>, QContext<Complex64>)> {
    let exact = QContext::rational(q.clone())?;
    let complex = QContext::complex(Complex64::new(to_f64(q), 0.0))?;
    Ok((exact, complex))
}

fn random_s(rng: &mut impl Rng) -> Complex64 {
    Complex64::new(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0))
}

pub(super) fn prop2(params: &SuiteParams) -> Result<VerificationReport> {
    let tol = params.tol_or(TOLERANCE);
    let tr = Truncation::default();
    let mut b = ReportBuilder::new("prop2", params.json());
    let mut flagged = Vec::new();
    for q in real_qs(params) {
        let (exact, complex) = contexts(&q)?;
        for x in [QArg::int(0), QArg::int(1), QArg { num: 1, den: 3 }] {
            for k in SuiteParams::range(params.k, 0, 6) {
                let series = zeta_e(Complex64::new(-(k as f64), 0.0), x, &complex, &tr)?;
                let closed = to_f64(&exact.q_euler_polynomial(k, x)?);
                if series.skipped_singular_term {
                    flagged.push(json!({"q": q.to_string(), "x": x.to_string(), "k": k}));
                }
                b.decimal(
                    json!({"q": q.to_string(), "x": x.to_string(), "k": k, "terms": series.terms}),
                    series.value,
                    Complex64::new(closed, 0.0),
                    tol,
                );
            }
        }
    }
    if !flagged.is_empty() {
        b.finding("skipped_singular_term", json!(flagged));
    }
    Ok(b.finish())
}

fn thm4_characters() -> Result<Vec<DirichletCharacter>> {
    Ok(vec![
        DirichletCharacter::trivial(1)?,
        DirichletCharacter::trivial(3)?,
        DirichletCharacter::quadratic(3)?,
    ])
}

pub(super) fn thm4(params: &SuiteParams) -> Result<VerificationReport> {
    let tol = params.tol_or(TOLERANCE);
    let tr = Truncation::default();
    let mut b = ReportBuilder::new("thm4", params.json());
    for q in real_qs(params) {
        let (exact, complex) = contexts(&q)?;
        let two = to_f64(&exact.q_int(2)?);
        for chi in thm4_characters()? {
            let values = chi.values_rational()?;
            for k in SuiteParams::range(params.k, 0, 6) {
                let series = dirichlet_l(Complex64::new(-(k as f64), 0.0), &chi, &complex, &tr)?;
                let mut value = series.value;
                // Modulus 1: the residue 0 is a unit, so the n = 0 term
                // [2]_q [0]_q^k belongs to E_{k,χ,q}.
                if chi.modulus() == 1 && k == 0 {
                    value += two;
                }
                let closed = to_f64(&exact.base(1).generalized_q_euler(k, &values)?);
                b.decimal(
                    json!({"q": q.to_string(), "chi": chi.label(), "k": k}),
                    value,
                    Complex64::new(closed, 0.0),
                    tol,
                );
            }
        }
    }
    b.finding(
        "modulus_one_convention",
        json!("for the character mod 1 the n = 0 term [2]_q [0]^k (nonzero only at k = 0) is added to the l-series"),
    );
    Ok(b.finish())
}

pub(super) fn eq14(params: &SuiteParams) -> Result<VerificationReport> {
    let tol = params.tol_or(TOLERANCE);
    let tr = Truncation::default();
    let mut rng = params.rng();
    let mut b = ReportBuilder::new("eq14", params.json());
    let mut printed_max: f64 = 0.0;
    let ss: Vec<Complex64> = (0..params.trials_or(4))
        .map(|_| random_s(&mut rng))
        .collect();
    for q in real_qs(params) {
        let (exact, complex) = contexts(&q)?;
        for f in params.p.map_or_else(|| vec![3u64, 5], |f| vec![f]) {
            for a in 1..f as i64 {
                for s in &ss {
                    let h = partial_zeta(*s, a, f, &complex, &tr)?;
                    printed_max = printed_max.max((h.printed_series - h.closed).norm());
                    b.decimal(
                        json!({"q": q.to_string(), "F": f, "a": a, "s": complex_json(*s)}),
                        h.series.value,
                        h.closed,
                        tol,
                    );
                }
                for n in SuiteParams::range(params.n, 0, 4) {
                    let s = Complex64::new(-(n as f64), 0.0);
                    let h = partial_zeta(s, a, f, &complex, &tr)?;
                    let exact_value = crate::zeta_arch::partial_zeta_negative(n, a, f, &exact)?;
                    b.decimal(
                        json!({"q": q.to_string(), "F": f, "a": a, "s": -(n as i64), "oracle": "exact"}),
                        h.closed,
                        Complex64::new(to_f64(&exact_value), 0.0),
                        tol,
                    );
                }
            }
        }
    }
    b.finding(
        "printed_two_forms",
        json!({
            "form": "([2]_q/[2]_{q^F}) Σ_{m≡a} q^m (-1)^m [m]_q^{-s} against the closed form",
            "max_difference": printed_max,
            "holds": printed_max <= tol,
        }),
    );
    Ok(b.finish())
}

pub(super) fn eq15(params: &SuiteParams) -> Result<VerificationReport> {
    let tol = params.tol_or(TOLERANCE);
    let tr = Truncation::default();
    let mut rng = params.rng();
    let mut b = ReportBuilder::new("eq15", params.json());
    let ss: Vec<Complex64> = (0..params.trials_or(4))
        .map(|_| random_s(&mut rng))
        .collect();
    let chars = [
        DirichletCharacter::quadratic(3)?,
        DirichletCharacter::quadratic(5)?,
        DirichletCharacter::trivial(5)?,
    ];
    for q in real_qs(params) {
        let (_, complex) = contexts(&q)?;
        let two = Complex64::new(1.0, 0.0) + complex.q();
        for chi in &chars {
            let f = chi.modulus();
            let values = chi.values_complex();
            for s in &ss {
                let l = dirichlet_l(*s, chi, &complex, &tr)?;
                let mut acc = Complex64::new(0.0, 0.0);
                for a in 1..f as i64 {
                    let c = values[a as usize];
                    if c.norm() == 0.0 {
                        continue;
                    }
                    acc += c * partial_zeta(*s, a, f, &complex, &tr)?.closed;
                }
                b.decimal(
                    json!({"q": q.to_string(), "chi": chi.label(), "s": complex_json(*s)}),
                    l.value,
                    two * acc,
                    tol,
                );
            }
        }
    }
    Ok(b.finish())
}
