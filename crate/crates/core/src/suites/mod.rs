//! Named verification suites.
//!
//! Each suite runs a grid of cases and returns a [`VerificationReport`].
//! Cases appear in grid enumeration order, so a report is a pure function of
//! its parameters and seed. Parameters left unset fall back to the default
//! grid of the suite; a set parameter pins that axis of the grid.

mod arch;
mod exact;
mod padic;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::numerics::{format_rational, int, rat, Rational};
use crate::report::VerificationReport;

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 2718;

/// All suite names accepted by [`run_suite`].
pub const SUITES: &[&str] = &[
    "eq5",
    "eq13",
    "dist",
    "prop2",
    "thm4",
    "eq14",
    "eq15",
    "eq17",
    "eq18-1",
    "eq20",
    "eq21",
    "eq22-23",
    "eq24",
    "eq30",
    "thm5",
    "q1-corollary",
    "remark-a",
    "integrality",
    "volkenborn",
];

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteParams {
    pub seed: u64,
    /// Number of random draws (values of `q` or of `s`).
    pub trials: Option<usize>,
    pub p: Option<u64>,
    #[serde(serialize_with = "opt_rational")]
    pub q: Option<Rational>,
    /// p-adic working precision `N`.
    pub prec: Option<u32>,
    pub n: Option<u64>,
    pub m: Option<u64>,
    pub r: Option<u64>,
    pub k: Option<u64>,
    pub j: Option<u64>,
    /// Tolerance of archimedean comparisons.
    pub tol: Option<f64>,
}

fn opt_rational<S: serde::Serializer>(
    q: &Option<Rational>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match q {
        Some(q) => s.serialize_str(&format_rational(q)),
        None => s.serialize_none(),
    }
}

impl Default for SuiteParams {
    fn default() -> Self {
        Self {
            seed: DEFAULT_SEED,
            trials: None,
            p: None,
            q: None,
            prec: None,
            n: None,
            m: None,
            r: None,
            k: None,
            j: None,
            tol: None,
        }
    }
}

impl SuiteParams {
    pub(crate) fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }

    pub(crate) fn trials_or(&self, d: usize) -> usize {
        self.trials.unwrap_or(d)
    }

    pub(crate) fn primes_or(&self, d: &[u64]) -> Vec<u64> {
        self.p.map_or_else(|| d.to_vec(), |p| vec![p])
    }

    pub(crate) fn prec_or(&self, d: u32) -> u32 {
        self.prec.unwrap_or(d)
    }

    pub(crate) fn tol_or(&self, d: f64) -> f64 {
        self.tol.unwrap_or(d)
    }

    /// `lo..=hi`, or the single pinned value.
    pub(crate) fn range(value: Option<u64>, lo: u64, hi: u64) -> Vec<u64> {
        value.map_or_else(|| (lo..=hi).collect(), |v| vec![v])
    }

    pub(crate) fn json(&self) -> Value {
        serde_json::to_value(self).expect("parameters serialize")
    }

    /// The pinned `q`, else `trials` random rationals outside `{0, ±1}`.
    pub(crate) fn rational_qs(&self, rng: &mut ChaCha8Rng, default_trials: usize) -> Vec<Rational> {
        if let Some(q) = &self.q {
            return vec![q.clone()];
        }
        (0..self.trials_or(default_trials))
            .map(|_| random_q(rng))
            .collect()
    }
}

/// A random rational with numerator and denominator of at most two digits,
/// avoiding `0` and `±1`.
pub(crate) fn random_q(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let q = rat(rng.gen_range(-12..=12), rng.gen_range(1..=12));
        if q != int(0) && q != int(1) && q != int(-1) {
            return q;
        }
    }
}

pub(crate) fn q_json(q: &Rational) -> Value {
    json!(format_rational(q))
}

/// Runs the named suite.
pub fn run_suite(name: &str, params: &SuiteParams) -> Result<VerificationReport> {
    match name {
        "eq5" => exact::eq5(params),
        "eq13" => exact::eq13(params),
        "dist" => exact::dist(params),
        "eq22-23" => exact::eq22_23(params),
        "eq30" => padic::eq30(params),
        "remark-a" => exact::remark_a(params),
        "prop2" => arch::prop2(params),
        "thm4" => arch::thm4(params),
        "eq14" => arch::eq14(params),
        "eq15" => arch::eq15(params),
        "eq17" => padic::eq17(params),
        "eq18-1" => padic::eq18_1(params),
        "eq20" => padic::eq20(params),
        "eq21" => padic::eq21(params),
        "eq24" => padic::eq24(params),
        "thm5" => padic::thm5(params),
        "q1-corollary" => padic::q1_corollary(params),
        "integrality" => padic::integrality(params),
        "volkenborn" => padic::volkenborn(params),
        other => Err(Error::Parse(format!(
            "unknown suite {other:?}; expected one of {}",
            SUITES.join(", ")
        ))),
    }
}
