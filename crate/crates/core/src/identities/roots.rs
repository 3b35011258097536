//! Evaluations at `-zeta^(+-j)` and `-zeta^j - zeta^-j` with `zeta` a primitive
//! `(2r+1)`-th root of unity, computed exactly in the cyclotomic ring.

use super::{floor_div, run_check, sign, CheckReport, Counterexample};
use crate::combinat::{binom, c};
use crate::cyclotomic::{as_integer, zeta_doubled_vector, zeta_shift_vector};
use crate::error::{Error, Result};
use crate::exactalg::Int;
use crate::symfun::{complete_upto, elementary_upto, power_sums_with_count};

fn mismatch(at: String, got: &Int, want: &Int) -> Option<Counterexample> {
    (got != want).then(|| Counterexample::new(at, got, want))
}

/// `h_n` at the doubled point as the half-difference of floor signs.
pub(crate) fn h_floor_form(r: usize, n: i64) -> Int {
    let m = 2 * r as i64 + 1;
    (sign(floor_div(n, m)) - sign(floor_div(n - 2, m))) / 2
}

/// `h_n` at the doubled point by residue of `n` mod `2(2r+1)`.
pub(crate) fn h_case_form(r: usize, n: i64) -> Int {
    let m = 2 * r as i64 + 1;
    Int::from(match n.rem_euclid(2 * m) {
        0 | 1 => 1,
        k if k == m || k == m + 1 => -1,
        _ => 0,
    })
}

/// `p_n` at the doubled point: `(-1)^n (-1 + (2r+1) [2r+1 | n])`.
pub(crate) fn p_pattern(r: usize, n: i64) -> Int {
    let m = 2 * r as i64 + 1;
    sign(n) * Int::from(if n % m == 0 { m - 1 } else { -1 })
}

/// `e`, `h` and `p` at `(-zeta^(+-1), ..., -zeta^(+-r))` for `n <= nmax`: `e_n` is 1
/// through `2r` and then 0, `h_n` follows the mod `2(2r+1)` pattern in both its
/// case and floor forms, and `p_n` the divisibility pattern.
pub fn doubled_root_check(r: usize, nmax: usize) -> Result<CheckReport> {
    if r == 0 {
        return Err(Error::Domain("r must be positive".into()));
    }
    Ok(run_check(
        "doubled_root_values",
        &[("r", r as i64), ("nmax", nmax as i64)],
        || {
            let v = zeta_doubled_vector(r);
            let e = elementary_upto(nmax, &v);
            let h = complete_upto(nmax, &v);
            let p = power_sums_with_count(nmax, &v);
            for n in 0..=nmax {
                let ni = n as i64;
                let en = as_integer(&e[n])?;
                if let Some(ce) = mismatch(format!("e_{n}"), &en, &Int::from((n <= 2 * r) as i64)) {
                    return Ok(Some(ce));
                }
                let hn = as_integer(&h[n])?;
                if let Some(ce) = mismatch(format!("h_{n} case form"), &hn, &h_case_form(r, ni))
                    .or_else(|| mismatch(format!("h_{n} floor form"), &hn, &h_floor_form(r, ni)))
                {
                    return Ok(Some(ce));
                }
                if n >= 1 {
                    if let Some(ce) =
                        mismatch(format!("p_{n}"), &as_integer(&p[n])?, &p_pattern(r, ni))
                    {
                        return Ok(Some(ce));
                    }
                }
            }
            Ok(None)
        },
    ))
}

/// `e_m(-zeta^j - zeta^-j)` for `0 <= m <= r` against
/// `(-1)^floor(m/2) binom(r - floor((m+1)/2), floor(m/2))`, the sum
/// `sum_k c(m-r-1, k)` and `binom(m-r-1, floor(m/2))`.
pub fn shifted_elementary_check(r: usize) -> Result<CheckReport> {
    if r == 0 {
        return Err(Error::Domain("r must be positive".into()));
    }
    Ok(run_check("shifted_elementary", &[("r", r as i64)], || {
        let ri = r as i64;
        let e = elementary_upto(r, &zeta_shift_vector(r));
        for m in 0..=ri {
            let got = as_integer(&e[m as usize])?;
            let closed = sign(m / 2) * binom(ri - (m + 1) / 2, m / 2);
            let csum: Int = (0..=m / 2).map(|k| c(m - ri - 1, k)).sum();
            let found = mismatch(format!("m={m} closed form"), &got, &closed)
                .or_else(|| mismatch(format!("m={m} c-sum"), &csum, &closed))
                .or_else(|| {
                    mismatch(
                        format!("m={m} negative binomial"),
                        &binom(m - ri - 1, m / 2),
                        &closed,
                    )
                });
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }))
}

/// `sum_k binom(r-n+2k, k) binom(n-2k-r-1, floor(n/2)-k) = 1` for `0 <= n <= 2r`.
pub fn binomial_sum_identity(r: usize) -> Result<CheckReport> {
    if r == 0 {
        return Err(Error::Domain("r must be positive".into()));
    }
    Ok(run_check(
        "binomial_sum_identity",
        &[("r", r as i64)],
        || {
            let ri = r as i64;
            Ok((0..=2 * ri).find_map(|n| {
                let lo = floor_div(n - ri, 2).max(0);
                let s: Int = (lo..=n / 2)
                    .map(|k| binom(ri - n + 2 * k, k) * binom(n - 2 * k - ri - 1, n / 2 - k))
                    .sum();
                mismatch(format!("n={n}"), &s, &Int::from(1))
            }))
        },
    ))
}
