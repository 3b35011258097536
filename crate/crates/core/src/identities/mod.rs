//! Verifiers for the symmetric-polynomial identities.
//!
//! Every verifier returns a [`CheckReport`]. A failed identity is a report
//! with a counterexample, never an `Err`.

mod kinds;
mod principal;
mod psi;
mod roots;

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::exactalg::{Int, Rat};

pub use kinds::{
    consistency_check, first_kind, first_kind_sides, first_kind_suite, genfun_expansion_check,
    second_kind, second_kind_sides, second_kind_suite, Kind, SymValues,
};
pub use principal::{principal_corollaries_check, principal_spec, q_point};
pub use psi::{
    psi_closed_form, psi_coefficients, psi_index_law, psi_inverse_substitution, psi_power_law,
    psi_quadratic,
};
pub use roots::{binomial_sum_identity, doubled_root_check, shifted_elementary_check};
pub(crate) use roots::{h_case_form, h_floor_form, p_pattern};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

/// Where an identity broke: the assignment and both sides rendered as text.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub assignment: String,
    pub lhs: String,
    pub rhs: String,
}

impl Counterexample {
    pub fn new(
        assignment: impl Into<String>,
        lhs: impl fmt::Display,
        rhs: impl fmt::Display,
    ) -> Self {
        Counterexample {
            assignment: assignment.into(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckReport {
    pub check: String,
    pub params: BTreeMap<String, i64>,
    pub status: Status,
    pub counterexample: Option<Counterexample>,
    pub elapsed: Duration,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// `check(k=v, ...)`, the key used for ordering and display.
    pub fn label(&self) -> String {
        let params: Vec<String> = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        format!("{}({})", self.check, params.join(","))
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.status, self.label())?;
        if let Some(ce) = &self.counterexample {
            write!(
                f,
                " at {}: lhs = {}, rhs = {}",
                ce.assignment, ce.lhs, ce.rhs
            )?;
        }
        Ok(())
    }
}

/// Runs `body`, timing it; `Ok(None)` is a pass, `Ok(Some(_))` a failure, and an
/// internal error becomes a failure carrying the error text.
pub(crate) fn run_check(
    check: &str,
    params: &[(&str, i64)],
    body: impl FnOnce() -> Result<Option<Counterexample>>,
) -> CheckReport {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    let counterexample = match outcome {
        Ok(ce) => ce,
        Err(e) => Some(Counterexample::new("evaluation", "error", e)),
    };
    CheckReport {
        check: check.to_string(),
        params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
        status: if counterexample.is_some() {
            Status::Fail
        } else {
            Status::Pass
        },
        counterexample,
        elapsed,
    }
}

/// Compares two values, producing a counterexample on mismatch.
pub(crate) fn compare<T: PartialEq + fmt::Display>(
    assignment: &str,
    lhs: &T,
    rhs: &T,
) -> Option<Counterexample> {
    (lhs != rhs).then(|| Counterexample::new(assignment, lhs, rhs))
}

/// Sorts by check id, then parameters.
pub fn sort_reports(reports: &mut [CheckReport]) {
    reports.sort_by(|a, b| (&a.check, &a.params).cmp(&(&b.check, &b.params)));
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyMode {
    /// Both sides expanded as Laurent polynomials.
    Symbolic,
    /// Both sides evaluated at `trials` random rational points drawn from `seed`.
    Random { trials: u32, seed: u64 },
}

/// Seed for one check, mixed from the run seed and the check's identity with FNV-1a.
pub(crate) fn derive_seed(seed: u64, key: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325 ^ seed;
    for b in key.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

/// `count` pairwise distinct nonzero rationals `±a/b` with `1 <= a, b <= 10^6`.
pub fn random_point(rng: &mut ChaCha8Rng, count: usize) -> Vec<Rat> {
    let mut out: Vec<Rat> = Vec::with_capacity(count);
    while out.len() < count {
        let a: i64 = rng.random_range(1..=1_000_000);
        let b: i64 = rng.random_range(1..=1_000_000);
        let sign = if rng.random_bool(0.5) { -1 } else { 1 };
        let x = Rat::new(Int::from(sign * a), Int::from(b));
        if !out.contains(&x) {
            out.push(x);
        }
    }
    out
}

/// The random points used by a check, reproducible from `(seed, key)`.
pub fn random_points(seed: u64, key: &str, trials: u32, count: usize) -> Vec<Vec<Rat>> {
    let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, key));
    (0..trials).map(|_| random_point(&mut rng, count)).collect()
}

pub(crate) fn render_point(z: &[Rat]) -> String {
    let parts: Vec<String> = z.iter().map(Rat::to_string).collect();
    format!("z=({})", parts.join(", "))
}

/// `floor(a / b)` for `b > 0`.
pub(crate) fn floor_div(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

pub(crate) fn sign(k: i64) -> Int {
    if k.rem_euclid(2) == 0 {
        Int::from(1)
    } else {
        Int::from(-1)
    }
}
