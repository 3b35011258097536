//! Principal specialization `z = (q^r, ..., q)`: closed forms at the doubled
//! q-point and their substitution into both expansions.

use super::kinds::{first_kind_sides, second_kind_sides, SymValues};
use super::{compare, run_check, sign, CheckReport};
use crate::combinat::q_binom;
use crate::error::{Error, Result};
use crate::exactalg::{Int, Ring, UniLaurent};
use crate::symfun::{Family, PointVector};

fn q(e: i64) -> UniLaurent {
    UniLaurent::power_of_var('q', e)
}

/// `(q^r, ..., q)` and `(q^-r, ..., q^-1)`.
pub fn q_point(r: usize) -> (Vec<UniLaurent>, Vec<UniLaurent>) {
    let z = (1..=r as i64).rev().map(q).collect();
    let zinv = (1..=r as i64).rev().map(|j| q(-j)).collect();
    (z, zinv)
}

/// Alternating q-binomial sum for `e_n^(2r)` at the doubled q-point.
fn closed_e(r: usize, n: usize) -> UniLaurent {
    let s = 2 * r as i64 + 1;
    (0..=(n as i64).min(s)).fold(UniLaurent::zero('q'), |acc, k| {
        let t = (&q_binom(s as u32, k) * &q(k * (k - s) / 2)).scaled(&sign(n as i64 - k));
        &acc + &t
    })
}

fn closed_h(r: usize, n: usize) -> UniLaurent {
    let (ri, ni) = (r as i64, n as i64);
    let top = q_binom((2 * r + n) as u32, ni);
    let low = if n == 0 {
        UniLaurent::zero('q')
    } else {
        &q_binom((2 * r + n - 1) as u32, ni - 1) * &q(ri)
    };
    &(&top - &low) * &q(-ni * ri)
}

/// `sum_{i=-r}^{r} q^(i j)`, obtained by dividing out `1 - q^j`.
fn geometric_s(r: usize, j: usize) -> Result<UniLaurent> {
    let (ri, ji) = (r as i64, j as i64);
    if j == 0 {
        return Ok(UniLaurent::constant('q', Int::from(2 * ri + 1)));
    }
    let one = UniLaurent::one('q');
    let num = &(&one - &q((2 * ri + 1) * ji)) * &q(-ri * ji);
    num.exact_div(&(&one - &q(ji)))
}

/// The doubled-point values given by the closed forms, with `p_n = S_n - 1`.
fn closed_values(r: usize, nmax: usize) -> Result<SymValues<UniLaurent>> {
    let p = (0..=nmax)
        .map(|j| geometric_s(r, j).map(|s| &s - &UniLaurent::one('q')))
        .collect::<Result<Vec<_>>>()?;
    Ok(SymValues {
        e: (0..=nmax).map(|n| closed_e(r, n)).collect(),
        h: (0..=nmax).map(|n| closed_h(r, n)).collect(),
        p,
    })
}

fn actual_values(r: usize, nmax: usize, shifted: bool) -> SymValues<UniLaurent> {
    let (z, zinv) = q_point(r);
    let v = if shifted {
        PointVector::shifted(&z, &zinv)
    } else {
        PointVector::doubled(&z, &zinv)
    };
    SymValues::new(&v.expect("q^j and q^-j are inverse"), nmax)
}

/// Compares `f_n^(2r)` at the doubled q-point with its closed form.
/// The power-sum form is compared after multiplying through by `1 - q^n`.
pub fn principal_spec(family: Family, r: usize, n: usize) -> Result<CheckReport> {
    if r == 0 {
        return Err(Error::Domain("r must be positive".into()));
    }
    if family == Family::P && n == 0 {
        return Err(Error::Domain("power-sum form needs n >= 1".into()));
    }
    let id = format!("principal_spec_{family}");
    Ok(run_check(&id, &[("r", r as i64), ("n", n as i64)], || {
        let d = actual_values(r, n, false);
        let at = "z=(q^r..q, q^-1..q^-r)";
        Ok(match family {
            Family::E => compare(at, &d.e[n], &closed_e(r, n)),
            Family::H => compare(at, &d.h[n], &closed_h(r, n)),
            Family::P => {
                let (ri, ni) = (r as i64, n as i64);
                let one = UniLaurent::one('q');
                let lhs = &(&d.p[n] + &one) * &(&one - &q(ni));
                let rhs = &q(-ri * ni) * &(&one - &q((2 * ri + 1) * ni));
                compare(at, &lhs, &rhs)
            }
        })
    }))
}

/// All six q-identities obtained by feeding the closed forms into both
/// expansions, for indices `0..=bound` (second-kind e only up to `2r`).
pub fn principal_corollaries_check(r: usize, bound: usize) -> Result<CheckReport> {
    if r == 0 {
        return Err(Error::Domain("r must be positive".into()));
    }
    Ok(run_check(
        "principal_corollaries",
        &[("r", r as i64), ("bound", bound as i64)],
        || {
            let d = closed_values(r, bound)?;
            let s = actual_values(r, bound, true);
            for i in 0..=bound {
                for family in Family::ALL {
                    let (l, rr) = first_kind_sides(family, r, i, &d, &s);
                    if let Some(ce) = compare(&format!("first_kind_{family} m={i}"), &l, &rr) {
                        return Ok(Some(ce));
                    }
                    if (family == Family::E && i > 2 * r) || (family == Family::P && i == 0) {
                        continue;
                    }
                    let (l, rr) = second_kind_sides(family, r, i, &d, &s);
                    if let Some(ce) = compare(&format!("second_kind_{family} n={i}"), &l, &rr) {
                        return Ok(Some(ce));
                    }
                }
            }
            Ok(None)
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms_small_cases() {
        assert_eq!(closed_e(1, 1).to_string(), "q^-1 + q");
        assert_eq!(closed_e(1, 3), UniLaurent::zero('q'));
        assert_eq!(closed_h(1, 0), UniLaurent::one('q'));
        assert_eq!(geometric_s(1, 1).unwrap().to_string(), "q^-1 + 1 + q");
        assert_eq!(
            geometric_s(2, 0).unwrap(),
            UniLaurent::constant('q', Int::from(5))
        );
    }

    #[test]
    fn principal_specialization() {
        for r in 1..=4 {
            for n in 0..=10 {
                for family in Family::ALL {
                    if family == Family::P && n == 0 {
                        continue;
                    }
                    let rep = principal_spec(family, r, n).unwrap();
                    assert!(rep.passed(), "{rep}");
                }
            }
        }
    }

    #[test]
    fn closed_forms_in_expansions() {
        for r in 1..=3 {
            let rep = principal_corollaries_check(r, 8).unwrap();
            assert!(rep.passed(), "{rep}");
        }
    }
}
