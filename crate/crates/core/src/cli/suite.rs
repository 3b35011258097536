//! Check groups behind `report`, with the index windows each group covers.

use std::fmt;
use std::ops::RangeInclusive;

use rayon::prelude::*;

use crate::cyclotomic::is_prime;
use crate::error::Result;
use crate::identities::{self as id, sort_reports, CheckReport, VerifyMode};
use crate::sequences::{self as seq, TableKind};
use crate::symfun::Family;

type Job = Box<dyn FnOnce() -> Result<Vec<CheckReport>> + Send>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, clap::ValueEnum)]
pub enum Group {
    Tables,
    Symbolic,
    Random,
    Psi,
    Principal,
    Roots,
    Sequences,
    Inversion,
    Specializations,
    Congruences,
    Discriminant,
}

impl Group {
    pub const ALL: [Group; 11] = [
        Group::Tables,
        Group::Symbolic,
        Group::Random,
        Group::Psi,
        Group::Principal,
        Group::Roots,
        Group::Sequences,
        Group::Inversion,
        Group::Specializations,
        Group::Congruences,
        Group::Discriminant,
    ];
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = format!("{self:?}").to_lowercase();
        f.write_str(&name)
    }
}

/// `(r, q)` pairs for the congruence scan.
pub const CONGRUENCE_PAIRS: [(usize, u64); 10] = [
    (2, 11),
    (2, 19),
    (2, 29),
    (2, 31),
    (3, 13),
    (3, 29),
    (3, 41),
    (3, 43),
    (5, 23),
    (5, 43),
];

pub const RANDOM_RS: RangeInclusive<usize> = 4..=6;
pub const RANDOM_MAX_INDEX: usize = 16;

/// Symbolic first-kind window: `m <= 3r+2`, from 1 for power sums.
pub fn first_kind_window(family: Family, r: usize) -> RangeInclusive<usize> {
    usize::from(family == Family::P)..=3 * r + 2
}

/// Symbolic second-kind window: `n <= 2r` for `e`, `n <= 2r+6` otherwise.
pub fn second_kind_window(family: Family, r: usize) -> RangeInclusive<usize> {
    match family {
        Family::E => 0..=2 * r,
        Family::H => 0..=2 * r + 6,
        Family::P => 1..=2 * r + 6,
    }
}

/// Random-mode window: every index up to [`RANDOM_MAX_INDEX`] the identity is stated for.
pub fn random_window(second_kind: bool, family: Family, r: usize) -> RangeInclusive<usize> {
    match family {
        Family::E if second_kind => 0..=(2 * r).min(RANDOM_MAX_INDEX),
        Family::P => 1..=RANDOM_MAX_INDEX,
        _ => 0..=RANDOM_MAX_INDEX,
    }
}

fn one(f: impl FnOnce() -> Result<CheckReport> + Send + 'static) -> Job {
    Box::new(move || f().map(|r| vec![r]))
}

fn many(f: impl FnOnce() -> Result<Vec<CheckReport>> + Send + 'static) -> Job {
    Box::new(f)
}

fn jobs(group: Group, seed: u64, trials: u32) -> Vec<Job> {
    let mut out: Vec<Job> = Vec::new();
    match group {
        Group::Tables => {
            for kind in TableKind::ALL {
                out.push(one(move || Ok(seq::golden_check(kind))));
            }
        }
        Group::Symbolic => {
            for r in 1..=3 {
                for family in Family::ALL {
                    let (w1, w2) = (first_kind_window(family, r), second_kind_window(family, r));
                    out.push(many(move || {
                        id::first_kind_suite(family, r, w1, VerifyMode::Symbolic)
                    }));
                    out.push(many(move || {
                        id::second_kind_suite(family, r, w2, VerifyMode::Symbolic)
                    }));
                }
            }
            for r in 1..=2 {
                for m in 0..=6 {
                    out.push(one(move || Ok(id::consistency_check(r, m))));
                }
                for family in [Family::E, Family::H] {
                    out.push(one(move || id::genfun_expansion_check(family, r, 10)));
                }
            }
        }
        Group::Random => {
            let mode = VerifyMode::Random { trials, seed };
            for r in RANDOM_RS {
                for family in Family::ALL {
                    let (w1, w2) = (
                        random_window(false, family, r),
                        random_window(true, family, r),
                    );
                    out.push(many(move || id::first_kind_suite(family, r, w1, mode)));
                    out.push(many(move || id::second_kind_suite(family, r, w2, mode)));
                }
            }
        }
        Group::Psi => {
            const ORDER: usize = 30;
            out.push(one(|| Ok(id::psi_quadratic(ORDER))));
            out.push(one(|| Ok(id::psi_inverse_substitution(ORDER))));
            for a in 1..=8 {
                out.push(one(move || Ok(id::psi_coefficients(a, ORDER))));
                out.push(one(move || Ok(id::psi_closed_form(a as u32, ORDER))));
                out.push(one(move || Ok(id::psi_power_law(a as u32, ORDER))));
                for b in 1..=8 {
                    out.push(one(move || Ok(id::psi_index_law(a, b, ORDER))));
                }
            }
        }
        Group::Principal => {
            for r in 1..=4 {
                for family in Family::ALL {
                    out.push(many(move || {
                        (usize::from(family == Family::P)..=10)
                            .map(|n| id::principal_spec(family, r, n))
                            .collect()
                    }));
                }
                out.push(one(move || id::principal_corollaries_check(r, 10)));
            }
        }
        Group::Roots => {
            for r in 1..=8 {
                out.push(one(move || id::doubled_root_check(r, 6 * (2 * r + 1))));
                out.push(one(move || id::shifted_elementary_check(r)));
                out.push(one(move || id::binomial_sum_identity(r)));
            }
        }
        Group::Sequences => {
            for r in 1..=8 {
                out.push(one(move || seq::cross_oracle_check(r, 60)));
                out.push(one(move || seq::determinant_formulas_check(r, 10)));
                out.push(one(move || seq::recursion_genfun_check(r, 30)));
                out.push(one(move || seq::partition_relations_check(r, 10)));
                out.push(one(move || seq::initial_block_check(r)));
                out.push(one(move || seq::c_coeff_check(r)));
            }
        }
        Group::Inversion => {
            for r in 1..=8 {
                out.push(many(move || {
                    (0..=60).map(|n| seq::inversion_check_f(r, n)).collect()
                }));
                out.push(many(move || {
                    (1..=60).map(|n| seq::inversion_check_l(r, n)).collect()
                }));
            }
        }
        Group::Specializations => {
            out.push(one(|| seq::fibonacci_specializations_check(60)));
            out.push(one(|| seq::lucas_specializations_check(60)));
        }
        Group::Congruences => {
            for (r, q) in CONGRUENCE_PAIRS {
                out.push(one(move || seq::congruence_check(r, q, 200)));
            }
        }
        Group::Discriminant => {
            for r in (1..=6).filter(|&r| is_prime(2 * r as u64 + 1)) {
                out.push(one(move || seq::discriminant_check(r, 6)));
            }
        }
    }
    out
}

/// Runs the given groups in parallel and returns the reports in canonical order.
/// `seed` and `trials` only affect [`Group::Random`].
pub fn run_groups(groups: &[Group], seed: u64, trials: u32) -> Result<Vec<CheckReport>> {
    let all: Vec<Job> = groups.iter().flat_map(|&g| jobs(g, seed, trials)).collect();
    let nested = all
        .into_par_iter()
        .map(|job| job())
        .collect::<Result<Vec<_>>>()?;
    let mut reports: Vec<CheckReport> = nested.into_iter().flatten().collect();
    sort_reports(&mut reports);
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn windows() {
        assert_eq!(first_kind_window(Family::P, 2), 1..=8);
        assert_eq!(second_kind_window(Family::E, 3), 0..=6);
        assert_eq!(random_window(true, Family::E, 6), 0..=12);
        assert_eq!(random_window(false, Family::P, 4), 1..=16);
    }

    #[test]
    fn small_groups_pass() {
        let reports = run_groups(
            &[Group::Tables, Group::Specializations, Group::Discriminant],
            1,
            1,
        )
        .unwrap();
        assert_eq!(reports.len(), 3 + 2 + 5);
        assert!(reports.iter().all(CheckReport::passed), "{reports:?}");
    }
}
