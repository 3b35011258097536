//! The series `psi(alpha; x)` against its closed form, index law and the
//! quadratic relation behind the first-kind expansion.

use super::{run_check, CheckReport, Counterexample};
use crate::combinat::{c, psi_series};
use crate::error::Result;
use crate::exactalg::{rat, Rat, Series};

fn series_match(at: &str, lhs: &Series, rhs: &Series) -> Result<Option<Counterexample>> {
    Ok((!lhs.try_eq(rhs)?).then(|| Counterexample::new(at, lhs, rhs)))
}

/// `(1 - sqrt(1 - 4x)) / (2x)` to order `order`.
fn catalan_closed(order: usize) -> Result<Series> {
    let s = Series::from_ints(&[1, -4], order + 1).sqrt()?;
    Ok((&Series::one(order + 1) - &s)
        .shift_down(1)?
        .scale(&rat(1, 2)))
}

/// `Y = x psi(1; x^2)` to order `order`.
fn y_series(order: usize) -> Result<Series> {
    Ok(psi_series(1, order)?
        .substitute_power(2)
        .shift_up(1)
        .truncate(order))
}

/// Coefficient `k` of `psi(alpha; x)` is `c(alpha + 2k - 1, k)`.
pub fn psi_coefficients(alpha: i64, order: usize) -> CheckReport {
    run_check(
        "psi_coefficients",
        &[("alpha", alpha), ("order", order as i64)],
        || {
            let psi = psi_series(alpha, order)?;
            Ok((0..=order).find_map(|k| {
                let want = Rat::from_integer(c(alpha + 2 * k as i64 - 1, k as i64));
                (*psi.coeff(k) != want)
                    .then(|| Counterexample::new(format!("x^{k}"), psi.coeff(k), want))
            }))
        },
    )
}

pub fn psi_closed_form(alpha: u32, order: usize) -> CheckReport {
    run_check(
        "psi_closed_form",
        &[("alpha", alpha as i64), ("order", order as i64)],
        || {
            let closed = catalan_closed(order)?.pow(alpha);
            series_match("series", &psi_series(alpha as i64, order)?, &closed)
        },
    )
}

pub fn psi_index_law(alpha: i64, beta: i64, order: usize) -> CheckReport {
    run_check(
        "psi_index_law",
        &[("alpha", alpha), ("beta", beta), ("order", order as i64)],
        || {
            let prod = &psi_series(alpha, order)? * &psi_series(beta, order)?;
            series_match("series", &prod, &psi_series(alpha + beta, order)?)
        },
    )
}

/// `x Y^2 - Y + x = 0` with `Y = x psi(1; x^2)`.
pub fn psi_quadratic(order: usize) -> CheckReport {
    run_check("psi_quadratic", &[("order", order as i64)], || {
        let y = y_series(order)?;
        let lhs = &(&y.pow(2).shift_up(1).truncate(order) - &y) + &Series::x(order);
        series_match("series", &lhs, &Series::zero(order))
    })
}

/// `Y^N = x^N psi(N; x^2)`.
pub fn psi_power_law(n: u32, order: usize) -> CheckReport {
    run_check(
        "psi_power_law",
        &[("n", n as i64), ("order", order as i64)],
        || {
            let lhs = y_series(order)?.pow(n);
            let rhs = psi_series(n as i64, order)?
                .substitute_power(2)
                .shift_up(n as usize)
                .truncate(order);
            series_match("series", &lhs, &rhs)
        },
    )
}

/// `Y` inverts `x = y / (1 + y^2)`: both the composition and `Y / (1 + Y^2)` give `x`.
pub fn psi_inverse_substitution(order: usize) -> CheckReport {
    run_check(
        "psi_inverse_substitution",
        &[("order", order as i64)],
        || {
            let y = y_series(order)?;
            let x = Series::x(order);
            let outer = Series::new(
                (0..=order as i64)
                    .map(|k| match k.rem_euclid(4) {
                        1 => rat(1, 1),
                        3 => rat(-1, 1),
                        _ => rat(0, 1),
                    })
                    .collect(),
                order,
            );
            if let Some(ce) = series_match("composition", &outer.compose(&y)?, &x)? {
                return Ok(Some(ce));
            }
            let direct = &y * &(&Series::one(order) + &y.pow(2)).inverse()?;
            series_match("quotient", &direct, &x)
        },
    )
}
