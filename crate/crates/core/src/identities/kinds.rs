//! Expansions of `f^(2r)` at `(z, z^-1)` in terms of `f^(r)` at `z + z^-1` and back.

use std::fmt;
use std::ops::RangeInclusive;

use super::{
    compare, floor_div, random_points, render_point, run_check, sign, CheckReport, Counterexample,
    VerifyMode,
};
use crate::combinat::{binom, c};
use crate::error::{Error, Result};
use crate::exactalg::{trunc_mul, Int, MultiLaurent, Rat, Ring};
use crate::symfun::{complete_upto, elementary_upto, power_sums_with_count, Family, PointVector};

/// Direction of an expansion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    /// `f^(r)(z + z^-1)` as a combination of `f^(2r)(z, z^-1)`.
    First,
    /// `f^(2r)(z, z^-1)` as a combination of `f^(r)(z + z^-1)`.
    Second,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::First => "first_kind",
            Kind::Second => "second_kind",
        })
    }
}

/// `e`, `h` and `p` of one point vector up to a fixed degree, with `p[0]` the arity.
#[derive(Clone, Debug)]
pub struct SymValues<T> {
    pub e: Vec<T>,
    pub h: Vec<T>,
    pub p: Vec<T>,
}

impl<T: Ring> SymValues<T> {
    pub fn new(v: &PointVector<T>, nmax: usize) -> Self {
        SymValues {
            e: elementary_upto(nmax, v),
            h: complete_upto(nmax, v),
            p: power_sums_with_count(nmax, v),
        }
    }

    fn family(&self, family: Family) -> &[T] {
        match family {
            Family::E => &self.e,
            Family::H => &self.h,
            Family::P => &self.p,
        }
    }
}

fn accumulate<T: Ring>(zero: &T, terms: impl IntoIterator<Item = (Int, T)>) -> T {
    terms.into_iter().fold(zero.clone(), |acc, (k, t)| {
        if k == Int::from(0) {
            acc
        } else {
            acc.plus(&t.scaled(&k))
        }
    })
}

/// `(expansion, target)` for the first-kind identity of degree `m`.
///
/// For `p` both sides are doubled to stay integral, with `p_0^(2r) = 2r`.
/// For `e` with `m > r` the target is zero.
pub fn first_kind_sides<T: Ring>(
    family: Family,
    r: usize,
    m: usize,
    doubled: &SymValues<T>,
    shifted: &SymValues<T>,
) -> (T, T) {
    let (ri, mi) = (r as i64, m as i64);
    let zero = doubled.e[0].zero_like();
    match family {
        Family::E => {
            let lo = (floor_div(mi, 2) - ri).max(0);
            let lhs = accumulate(
                &zero,
                (lo..=mi / 2).map(|k| (c(mi - ri - 1, k), doubled.e[m - 2 * k as usize].clone())),
            );
            let rhs = if m <= r { shifted.e[m].clone() } else { zero };
            (lhs, rhs)
        }
        Family::H => {
            let lhs = accumulate(
                &zero,
                (0..=mi / 2).map(|k| (c(mi + ri - 1, k), doubled.h[m - 2 * k as usize].clone())),
            );
            (lhs, shifted.h[m].clone())
        }
        Family::P => {
            let lhs = accumulate(
                &zero,
                (0..=mi).map(|k| {
                    (
                        binom(mi, k),
                        doubled.p[(mi - 2 * k).unsigned_abs() as usize].clone(),
                    )
                }),
            );
            (lhs, shifted.p[m].scaled(&Int::from(2)))
        }
    }
}

/// `(expansion, target)` for the second-kind identity of degree `n`, with `p_0^(r) = r`.
pub fn second_kind_sides<T: Ring>(
    family: Family,
    r: usize,
    n: usize,
    doubled: &SymValues<T>,
    shifted: &SymValues<T>,
) -> (T, T) {
    let (ri, ni) = (r as i64, n as i64);
    let zero = doubled.e[0].zero_like();
    let at = |vals: &[T], k: i64| vals[(ni - 2 * k) as usize].clone();
    let lhs = match family {
        Family::E => {
            let lo = floor_div(ni - ri, 2).max(0);
            accumulate(
                &zero,
                (lo..=ni / 2).map(|k| (binom(ri - ni + 2 * k, k), at(&shifted.e, k))),
            )
        }
        Family::H => accumulate(
            &zero,
            (0..=ni / 2).map(|k| (sign(k) * binom(ni - k + ri - 1, k), at(&shifted.h, k))),
        ),
        Family::P => {
            // k = (n+1)/2 only appears with a vanishing binomial when n is odd.
            let twice = (0..=(ni + 1) / 2)
                .filter(|&k| ni - 2 * k >= 0)
                .map(|k| (binom(2 * k - ni - 1, k) * 2, at(&shifted.p, k)));
            let once = (0..=ni / 2).map(|k| (-binom(2 * k - ni, k), at(&shifted.p, k)));
            accumulate(&zero, twice.chain(once))
        }
    };
    (lhs, doubled.family(family)[n].clone())
}

fn validate(kind: Kind, family: Family, r: usize, idx: &RangeInclusive<usize>) -> Result<()> {
    if r == 0 {
        return Err(Error::Domain("r must be positive".into()));
    }
    if kind == Kind::First && family == Family::P && *idx.start() == 0 {
        return Err(Error::Domain("first-kind p identity needs m >= 1".into()));
    }
    if kind == Kind::Second && family == Family::P && *idx.start() == 0 {
        return Err(Error::Domain("second-kind p identity needs n >= 1".into()));
    }
    if kind == Kind::Second && family == Family::E && *idx.end() > 2 * r {
        return Err(Error::Domain(format!(
            "second-kind e identity needs n <= 2r = {}",
            2 * r
        )));
    }
    Ok(())
}

/// Symbolic tables: `(z_1..z_r, z_1^-1..z_r^-1)` and `(z_j + z_j^-1)` as Laurent polynomials.
pub(crate) fn laurent_tables(
    r: usize,
    nmax: usize,
) -> (SymValues<MultiLaurent>, SymValues<MultiLaurent>) {
    let z: Vec<MultiLaurent> = (0..r).map(|i| MultiLaurent::var(r, i)).collect();
    let zinv: Vec<MultiLaurent> = (0..r).map(|i| MultiLaurent::var_pow(r, i, -1)).collect();
    tables(&z, &zinv, nmax)
}

pub(crate) fn rat_tables(z: &[Rat], nmax: usize) -> (SymValues<Rat>, SymValues<Rat>) {
    let zinv: Vec<Rat> = z.iter().map(Rat::recip).collect();
    tables(z, &zinv, nmax)
}

fn tables<T: Ring>(z: &[T], zinv: &[T], nmax: usize) -> (SymValues<T>, SymValues<T>) {
    let doubled = PointVector::doubled(z, zinv).expect("z and z^-1 are inverse pairs");
    let shifted = PointVector::shifted(z, zinv).expect("z and z^-1 are inverse pairs");
    (
        SymValues::new(&doubled, nmax),
        SymValues::new(&shifted, nmax),
    )
}

fn sides<T: Ring>(
    kind: Kind,
    family: Family,
    r: usize,
    i: usize,
    d: &SymValues<T>,
    s: &SymValues<T>,
) -> (T, T) {
    match kind {
        Kind::First => first_kind_sides(family, r, i, d, s),
        Kind::Second => second_kind_sides(family, r, i, d, s),
    }
}

fn suite(
    kind: Kind,
    family: Family,
    r: usize,
    idx: RangeInclusive<usize>,
    mode: VerifyMode,
) -> Result<Vec<CheckReport>> {
    validate(kind, family, r, &idx)?;
    let id = format!("{kind}_{family}");
    let key = if kind == Kind::First { "m" } else { "n" };
    let nmax = *idx.end();
    let params = |i: usize| {
        let mut p = vec![("r", r as i64), (key, i as i64)];
        if let VerifyMode::Random { trials, .. } = mode {
            p.push(("trials", trials as i64));
        }
        p
    };
    let reports = match mode {
        VerifyMode::Symbolic => {
            let (d, s) = laurent_tables(r, nmax);
            idx.map(|i| {
                run_check(&id, &params(i), || {
                    let (lhs, rhs) = sides(kind, family, r, i, &d, &s);
                    Ok(compare("symbolic", &lhs, &rhs))
                })
            })
            .collect()
        }
        VerifyMode::Random { trials, seed } => {
            let points = random_points(seed, &format!("{id}|r={r}"), trials, r);
            let tabs: Vec<_> = points.iter().map(|z| rat_tables(z, nmax)).collect();
            idx.map(|i| {
                run_check(&id, &params(i), || {
                    Ok(points.iter().zip(&tabs).find_map(|(z, (d, s))| {
                        let (lhs, rhs) = sides(kind, family, r, i, d, s);
                        compare(&render_point(z), &lhs, &rhs)
                    }))
                })
            })
            .collect()
        }
    };
    Ok(reports)
}

/// First-kind checks for every `m` in `ms`.
pub fn first_kind_suite(
    family: Family,
    r: usize,
    ms: RangeInclusive<usize>,
    mode: VerifyMode,
) -> Result<Vec<CheckReport>> {
    suite(Kind::First, family, r, ms, mode)
}

/// Second-kind checks for every `n` in `ns`.
pub fn second_kind_suite(
    family: Family,
    r: usize,
    ns: RangeInclusive<usize>,
    mode: VerifyMode,
) -> Result<Vec<CheckReport>> {
    suite(Kind::Second, family, r, ns, mode)
}

pub fn first_kind(family: Family, r: usize, m: usize, mode: VerifyMode) -> Result<CheckReport> {
    Ok(first_kind_suite(family, r, m..=m, mode)?.remove(0))
}

pub fn second_kind(family: Family, r: usize, n: usize, mode: VerifyMode) -> Result<CheckReport> {
    Ok(second_kind_suite(family, r, n..=n, mode)?.remove(0))
}

/// Substitutes the second-kind `h` expansion into the first-kind one and checks
/// that the combined coefficient of `h_j^(r)` is `[j = m]`, then compares the
/// composite with `h_m^(r)` symbolically.
pub fn consistency_check(r: usize, m: usize) -> CheckReport {
    run_check("consistency_h", &[("r", r as i64), ("m", m as i64)], || {
        let (ri, mi) = (r as i64, m as i64);
        let mut coeffs = vec![Int::from(0); m + 1];
        for k in 0..=mi / 2 {
            let n = mi - 2 * k;
            for i in 0..=n / 2 {
                coeffs[(n - 2 * i) as usize] +=
                    c(mi + ri - 1, k) * sign(i) * binom(n - i + ri - 1, i);
            }
        }
        for (j, cj) in coeffs.iter().enumerate() {
            let want = Int::from((j == m) as i64);
            if *cj != want {
                return Ok(Some(Counterexample::new(
                    format!("coefficient of h_{j}"),
                    cj,
                    want,
                )));
            }
        }
        let (d, s) = laurent_tables(r, m);
        let zero = MultiLaurent::zero(r);
        let composite = accumulate(
            &zero,
            (0..=mi / 2).map(|k| {
                (
                    c(mi + ri - 1, k),
                    second_kind_sides(Family::H, r, m - 2 * k as usize, &d, &s).0,
                )
            }),
        );
        Ok(compare("symbolic", &composite, &s.h[m]))
    })
}

/// `sum_n f_n^(2r)(z, z^-1) y^n` against `(1+y^2)^(+-r) sum_m f_m^(r)(z + z^-1) X^m`
/// with `X = y/(1+y^2)`, coefficientwise through `y^order`. Only `e` and `h` apply.
pub fn genfun_expansion_check(family: Family, r: usize, order: usize) -> Result<CheckReport> {
    if family == Family::P {
        return Err(Error::Domain(
            "the generating-function expansion covers e and h".into(),
        ));
    }
    if r == 0 {
        return Err(Error::Domain("r must be positive".into()));
    }
    Ok(run_check(
        &format!("genfun_expansion_{family}"),
        &[("r", r as i64), ("order", order as i64)],
        || {
            let (d, s) = laurent_tables(r, order);
            let one = MultiLaurent::one(r);
            let zero = MultiLaurent::zero(r);
            let x: Vec<MultiLaurent> = (0..=order)
                .map(|k| {
                    if k % 2 == 1 {
                        one.scaled(&sign((k as i64 - 1) / 2))
                    } else {
                        zero.clone()
                    }
                })
                .collect();
            let mut inner = vec![zero.clone(); order + 1];
            let mut xm = vec![zero.clone(); order + 1];
            xm[0] = one.clone();
            let top = if family == Family::E { r } else { order };
            for m in 0..=top {
                let coeff = if family == Family::E {
                    &s.e[m]
                } else {
                    &s.h[m]
                };
                for (acc, t) in inner.iter_mut().zip(&xm) {
                    *acc = acc.plus(&t.times(coeff));
                }
                xm = trunc_mul(&xm, &x, order);
            }
            // (1+y^2)^r, or its inverse sum_j binom(-r, j) y^(2j).
            let ri = r as i64;
            let factor: Vec<MultiLaurent> = (0..=order as i64)
                .map(|k| {
                    if k % 2 == 1 {
                        zero.clone()
                    } else if family == Family::E {
                        one.scaled(&binom(ri, k / 2))
                    } else {
                        one.scaled(&binom(-ri, k / 2))
                    }
                })
                .collect();
            let rhs = trunc_mul(&factor, &inner, order);
            let lhs = if family == Family::E { &d.e } else { &d.h };
            Ok((0..=order).find_map(|k| compare(&format!("y^{k}"), &lhs[k], &rhs[k])))
        },
    ))
}
