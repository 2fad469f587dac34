//! Structured outcomes of verification suites.

use std::time::Instant;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::numerics::{PadicNumber, Scalar};

/// How closely the two sides of a case matched.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Agreement {
    /// Exact comparison in rational (or integer) arithmetic.
    Exact { equal: bool },
    /// Floating-point comparison.
    Decimal { error: f64, tolerance: f64 },
    /// `lhs ≡ rhs (mod p^exponent)`; `exponent` is `null` for exact equality.
    Padic {
        exponent: Option<i64>,
        required: i64,
    },
    /// A yes/no property such as integrality.
    Property { holds: bool },
}

impl Agreement {
    pub fn passes(&self) -> bool {
        match self {
            Self::Exact { equal } => *equal,
            Self::Decimal { error, tolerance } => error.is_finite() && error <= tolerance,
            Self::Padic { exponent, required } => exponent.is_none_or(|e| e >= *required),
            Self::Property { holds } => *holds,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Case {
    pub inputs: Value,
    pub lhs: Value,
    pub rhs: Value,
    pub agreement: Agreement,
    pub pass: bool,
}

/// Something worth reporting that does not decide pass/fail, such as the
/// agreement reached by a displayed formula known to be misprinted.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Finding {
    pub label: String,
    pub detail: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub params: Value,
    pub cases: Vec<Case>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub findings: Vec<Finding>,
    pub ok: bool,
    pub runtime_ms: u64,
}

impl VerificationReport {
    pub fn failures(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| !c.pass)
    }

    /// Smallest p-adic agreement exponent over the cases (exact counts as
    /// `i64::MAX`).
    pub fn min_padic_exponent(&self) -> Option<i64> {
        self.cases
            .iter()
            .filter_map(|c| match c.agreement {
                Agreement::Padic { exponent, .. } => Some(exponent.unwrap_or(i64::MAX)),
                _ => None,
            })
            .min()
    }

    /// Largest decimal error over the cases.
    pub fn max_decimal_error(&self) -> Option<f64> {
        self.cases
            .iter()
            .filter_map(|c| match c.agreement {
                Agreement::Decimal { error, .. } => Some(error),
                _ => None,
            })
            .reduce(f64::max)
    }
}

pub fn padic_json(x: &PadicNumber) -> Value {
    serde_json::to_value(x.to_record()).expect("records serialize")
}

pub fn complex_json(z: Complex64) -> Value {
    json!({ "re": z.re, "im": z.im })
}

/// Accumulates cases in the order they are added.
pub struct ReportBuilder {
    suite: String,
    params: Value,
    cases: Vec<Case>,
    findings: Vec<Finding>,
    started: Instant,
}

impl ReportBuilder {
    pub fn new(suite: impl Into<String>, params: Value) -> Self {
        Self {
            suite: suite.into(),
            params,
            cases: Vec::new(),
            findings: Vec::new(),
            started: Instant::now(),
        }
    }

    pub fn push(&mut self, inputs: Value, lhs: Value, rhs: Value, agreement: Agreement) -> bool {
        let pass = agreement.passes();
        self.cases.push(Case {
            inputs,
            lhs,
            rhs,
            agreement,
            pass,
        });
        pass
    }

    pub fn exact<S: Scalar>(&mut self, inputs: Value, lhs: &S, rhs: &S) -> bool {
        self.push(
            inputs,
            lhs.to_json(),
            rhs.to_json(),
            Agreement::Exact { equal: lhs == rhs },
        )
    }

    pub fn decimal(
        &mut self,
        inputs: Value,
        lhs: Complex64,
        rhs: Complex64,
        tolerance: f64,
    ) -> bool {
        self.push(
            inputs,
            complex_json(lhs),
            complex_json(rhs),
            Agreement::Decimal {
                error: (lhs - rhs).norm(),
                tolerance,
            },
        )
    }

    pub fn padic(
        &mut self,
        inputs: Value,
        lhs: &PadicNumber,
        rhs: &PadicNumber,
        required: i64,
    ) -> bool {
        self.push(
            inputs,
            padic_json(lhs),
            padic_json(rhs),
            Agreement::Padic {
                exponent: lhs.agreement(rhs),
                required,
            },
        )
    }

    pub fn property(&mut self, inputs: Value, lhs: Value, rhs: Value, holds: bool) -> bool {
        self.push(inputs, lhs, rhs, Agreement::Property { holds })
    }

    pub fn finding(&mut self, label: impl Into<String>, detail: Value) {
        self.findings.push(Finding {
            label: label.into(),
            detail,
        });
    }

    pub fn finish(self) -> VerificationReport {
        let ok = self.cases.iter().all(|c| c.pass);
        VerificationReport {
            suite: self.suite,
            params: self.params,
            cases: self.cases,
            findings: self.findings,
            ok,
            runtime_ms: self.started.elapsed().as_millis() as u64,
        }
    }
}
