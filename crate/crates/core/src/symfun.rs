//! Symmetric polynomials over any [`Ring`]: elementary `e`, complete `h`,
//! power sums `p`, monomial and Schur polynomials, and the classical
//! relations between them.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::combinat::Partition;
use crate::error::{Error, Result};
use crate::exactalg::{determinant, Int, Ring};

/// How a point vector was built.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// `(z_1, ..., z_r)`
    Plain,
    /// `(z_1, ..., z_r, z_1^-1, ..., z_r^-1)`
    Doubled,
    /// `(z_1 + z_1^-1, ..., z_r + z_r^-1)`
    Shifted,
}

/// Arguments of a symmetric polynomial together with how they were formed.
#[derive(Clone, Debug)]
pub struct PointVector<T> {
    entries: Vec<T>,
    provenance: Provenance,
}

impl<T: Ring> PointVector<T> {
    /// Panics on an empty vector: the ring context comes from the entries.
    pub fn plain(entries: Vec<T>) -> Self {
        assert!(!entries.is_empty(), "point vectors need at least one entry");
        PointVector {
            entries,
            provenance: Provenance::Plain,
        }
    }

    /// `(z, zinv)`; every `z_j * zinv_j` must equal one.
    pub fn doubled(z: &[T], zinv: &[T]) -> Result<Self> {
        check_inverse_pairs(z, zinv)?;
        let mut entries = z.to_vec();
        entries.extend_from_slice(zinv);
        Ok(PointVector {
            entries,
            provenance: Provenance::Doubled,
        })
    }

    /// `(z_j + zinv_j)_j`; every `z_j * zinv_j` must equal one.
    pub fn shifted(z: &[T], zinv: &[T]) -> Result<Self> {
        check_inverse_pairs(z, zinv)?;
        let entries = z.iter().zip(zinv).map(|(a, b)| a.plus(b)).collect();
        Ok(PointVector {
            entries,
            provenance: Provenance::Shifted,
        })
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn arity(&self) -> usize {
        self.entries.len()
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn one(&self) -> T {
        self.entries[0].one_like()
    }

    pub fn zero(&self) -> T {
        self.entries[0].zero_like()
    }
}

fn check_inverse_pairs<T: Ring>(z: &[T], zinv: &[T]) -> Result<()> {
    if z.is_empty() || z.len() != zinv.len() {
        return Err(Error::Domain(format!(
            "mismatched halves: {} and {} entries",
            z.len(),
            zinv.len()
        )));
    }
    for (a, b) in z.iter().zip(zinv) {
        if !a.times(b).is_one_elem() {
            return Err(Error::Domain(format!("{b} is not the inverse of {a}")));
        }
    }
    Ok(())
}

/// The three families of symmetric polynomials the identities are stated for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    E,
    H,
    P,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::E, Family::H, Family::P];
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::E => "e",
            Family::H => "h",
            Family::P => "p",
        })
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "e" => Ok(Family::E),
            "h" => Ok(Family::H),
            "p" => Ok(Family::P),
            other => Err(Error::Usage(format!(
                "unknown family '{other}', expected e, h or p"
            ))),
        }
    }
}

/// `e_0, ..., e_nmax` by the recurrence `e^(j)_n = e^(j-1)_n + v_j e^(j-1)_{n-1}`.
pub fn elementary_upto<T: Ring>(nmax: usize, v: &PointVector<T>) -> Vec<T> {
    let mut e = vec![v.zero(); nmax + 1];
    e[0] = v.one();
    for (j, z) in v.entries.iter().enumerate() {
        for n in (1..=nmax.min(j + 1)).rev() {
            let t = z.times(&e[n - 1]);
            e[n] = e[n].plus(&t);
        }
    }
    e
}

pub fn elementary<T: Ring>(n: i64, v: &PointVector<T>) -> T {
    if n < 0 || n as usize > v.arity() {
        return v.zero();
    }
    elementary_upto(n as usize, v).swap_remove(n as usize)
}

/// `h_0, ..., h_nmax` by the recurrence `h^(j)_n = h^(j-1)_n + v_j h^(j)_{n-1}`.
pub fn complete_upto<T: Ring>(nmax: usize, v: &PointVector<T>) -> Vec<T> {
    let mut h = vec![v.zero(); nmax + 1];
    h[0] = v.one();
    for z in &v.entries {
        for n in 1..=nmax {
            let t = z.times(&h[n - 1]);
            h[n] = h[n].plus(&t);
        }
    }
    h
}

/// `h_n` for any integer `n`; negative indices use the one-row Schur
/// alternant `s_(n)`, which needs invertible, pairwise distinct entries.
pub fn complete<T: Ring>(n: i64, v: &PointVector<T>) -> Result<T> {
    if n < 0 {
        return schur(&[n], v);
    }
    Ok(complete_upto(n as usize, v).swap_remove(n as usize))
}

/// `p_n = sum_j v_j^n` for `n >= 1`.
pub fn power<T: Ring>(n: i64, v: &PointVector<T>) -> Result<T> {
    if n < 1 {
        return Err(Error::Domain(format!(
            "power sum p_{n} is undefined; need n >= 1"
        )));
    }
    Ok(v.entries
        .iter()
        .fold(v.zero(), |acc, z| acc.plus(&z.pow(n as u32))))
}

/// `p_1, ..., p_nmax`, returned with `p_0` set to the arity in slot zero.
pub fn power_sums_with_count<T: Ring>(nmax: usize, v: &PointVector<T>) -> Vec<T> {
    let mut p = vec![v.one().scaled(&Int::from(v.arity()))];
    let mut pows: Vec<T> = v.entries.clone();
    for n in 1..=nmax {
        p.push(pows.iter().fold(v.zero(), |acc, z| acc.plus(z)));
        if n < nmax {
            for (zp, z) in pows.iter_mut().zip(&v.entries) {
                *zp = zp.times(z);
            }
        }
    }
    p
}

/// `m_lambda`: sum over the distinct rearrangements of `lambda` padded to the arity.
pub fn monomial<T: Ring>(lambda: &Partition, v: &PointVector<T>) -> Result<T> {
    let r = v.arity();
    if lambda.length() > r {
        return Err(Error::Domain(format!(
            "partition {lambda} has more parts than the {r} variables"
        )));
    }
    let mut exps: Vec<i64> = lambda.padded(r);
    exps.sort_unstable();
    let mut acc = v.zero();
    loop {
        let term = v
            .entries
            .iter()
            .zip(&exps)
            .fold(v.one(), |t, (z, e)| t.times(&z.pow(*e as u32)));
        acc = acc.plus(&term);
        if !next_permutation(&mut exps) {
            break;
        }
    }
    Ok(acc)
}

/// Advances to the next lexicographic permutation; false after the last one.
fn next_permutation(a: &mut [i64]) -> bool {
    let Some(i) = (1..a.len()).rev().find(|&i| a[i - 1] < a[i]) else {
        return false;
    };
    let j = (i..a.len()).rev().find(|&j| a[j] > a[i - 1]).unwrap();
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

fn signed_pow<T: Ring>(z: &T, e: i64) -> Result<T> {
    if e >= 0 {
        Ok(z.pow(e as u32))
    } else {
        Ok(z.inverse()?.pow(e.unsigned_abs() as u32))
    }
}

/// Schur polynomial as the alternant `det(v_i^(lambda_j + r - j)) / prod_{i<j}(v_i - v_j)`.
///
/// `lambda` is a weakly decreasing tuple of nonnegative parts, or the single
/// row `(-n)`. Repeated entries make the Vandermonde vanish and give
/// [`Error::DivisionByZero`].
pub fn schur<T: Ring>(lambda: &[i64], v: &PointVector<T>) -> Result<T> {
    let r = v.arity();
    let one_negative_row = lambda.len() == 1 && lambda[0] < 0;
    if !one_negative_row {
        if lambda.iter().any(|&p| p < 0) || lambda.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain(format!("unsupported Schur shape {lambda:?}")));
        }
        if lambda.iter().filter(|&&p| p > 0).count() > r {
            return Ok(v.zero());
        }
    }
    let shape: Vec<i64> = (0..r)
        .map(|j| lambda.get(j).copied().unwrap_or(0))
        .collect();
    let mut rows = Vec::with_capacity(r);
    for z in &v.entries {
        let row = (0..r)
            .map(|j| signed_pow(z, shape[j] + (r - 1 - j) as i64))
            .collect::<Result<Vec<T>>>()?;
        rows.push(row);
    }
    let one = v.one();
    let alternant = determinant(&rows, &one);
    let mut vandermonde = one;
    for i in 0..r {
        for j in i + 1..r {
            vandermonde = vandermonde.times(&v.entries[i].minus(&v.entries[j]));
        }
    }
    if vandermonde.is_zero_elem() {
        return Err(Error::DivisionByZero);
    }
    alternant.exact_div(&vandermonde)
}

/// `sum_{j=0}^{min(n,r)} (-1)^j e_j h_{n-j} == 0` for `n >= 1`.
pub fn wronski_check<T: Ring>(n: usize, v: &PointVector<T>) -> Result<bool> {
    if n == 0 {
        return Err(Error::Domain("the Wronski relation needs n >= 1".into()));
    }
    let e = elementary_upto(n, v);
    let h = complete_upto(n, v);
    let mut acc = v.zero();
    for j in 0..=n.min(v.arity()) {
        let t = e[j].times(&h[n - j]);
        acc = if j % 2 == 0 {
            acc.plus(&t)
        } else {
            acc.minus(&t)
        };
    }
    Ok(acc.is_zero_elem())
}

/// `sum_{j=0}^{min(n,r)} (-1)^(n-j) p_{n-j+1} e_j == (n+1) e_{n+1}`.
pub fn newton_check<T: Ring>(n: usize, v: &PointVector<T>) -> bool {
    let e = elementary_upto(n + 1, v);
    let p = power_sums_with_count(n + 1, v);
    let mut lhs = v.zero();
    for j in 0..=n.min(v.arity()) {
        let t = p[n - j + 1].times(&e[j]);
        lhs = if (n - j).is_multiple_of(2) {
            lhs.plus(&t)
        } else {
            lhs.minus(&t)
        };
    }
    lhs == e[n + 1].scaled(&BigInt::from(n + 1))
}

/// Coefficients of `y^0..y^order` in the generating function of `family`,
/// expanded directly as a truncated product (e, h) or sum (p) of geometric pieces.
pub fn genfun_truncation<T: Ring>(family: Family, v: &PointVector<T>, order: usize) -> Vec<T> {
    let zero = v.zero();
    let one = v.one();
    let geometric = |z: &T, sign: bool| -> Vec<T> {
        let mut out = Vec::with_capacity(order + 1);
        let mut cur = one.clone();
        for k in 0..=order {
            out.push(if sign && k % 2 == 1 {
                cur.negated()
            } else {
                cur.clone()
            });
            cur = cur.times(z);
        }
        out
    };
    match family {
        Family::E => {
            let mut acc = vec![one.clone()];
            for z in &v.entries {
                acc = crate::exactalg::trunc_mul(&acc, &[one.clone(), z.clone()], order);
            }
            acc.resize(order + 1, zero);
            acc
        }
        Family::H => {
            let mut acc = vec![one.clone()];
            for z in &v.entries {
                acc = crate::exactalg::trunc_mul(&acc, &geometric(z, false), order);
            }
            acc.resize(order + 1, zero);
            acc
        }
        Family::P => {
            let mut acc = vec![zero; order + 1];
            for z in &v.entries {
                for (a, g) in acc.iter_mut().zip(geometric(z, false)) {
                    *a = a.plus(&g);
                }
            }
            acc
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::{c, partitions_of};
    use crate::exactalg::{int, rat, MultiLaurent, Rat, UniLaurent};
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> PointVector<Int> {
        PointVector::plain(v.iter().map(|&x| int(x)).collect())
    }

    fn symbolic(r: usize) -> PointVector<MultiLaurent> {
        PointVector::plain((0..r).map(|i| MultiLaurent::var(r, i)).collect())
    }

    fn doubled_symbolic(r: usize) -> PointVector<MultiLaurent> {
        let z: Vec<_> = (0..r).map(|i| MultiLaurent::var(r, i)).collect();
        let zi: Vec<_> = (0..r).map(|i| MultiLaurent::var_pow(r, i, -1)).collect();
        PointVector::doubled(&z, &zi).unwrap()
    }

    #[test]
    fn elementary_values() {
        assert_eq!(elementary(0, &ints(&[5, 7])), int(1));
        assert_eq!(elementary(3, &ints(&[1, 2, 3])), int(6));
        assert_eq!(elementary(4, &ints(&[1, 2, 3])), int(0));
        assert_eq!(elementary(-1, &ints(&[1, 2, 3])), int(0));
        assert_eq!(elementary(2, &doubled_symbolic(1)), MultiLaurent::one(1));
    }

    #[test]
    fn complete_values() {
        let v = symbolic(2);
        let (a, b) = (MultiLaurent::var(2, 0), MultiLaurent::var(2, 1));
        let expected = &(&(&a * &a) + &(&a * &b)) + &(&b * &b);
        assert_eq!(complete(2, &v).unwrap(), expected);
        assert_eq!(complete(0, &v).unwrap(), MultiLaurent::one(2));
        let q = PointVector::plain(vec![rat(1, 2), rat(-3, 1), rat(7, 5)]);
        assert_eq!(complete(-1, &q).unwrap(), Rat::from_integer(int(0)));
        assert_eq!(complete(-2, &q).unwrap(), Rat::from_integer(int(0)));
        assert_ne!(complete(-3, &q).unwrap(), Rat::from_integer(int(0)));
        assert_eq!(complete(3, &ints(&[1, 1])).unwrap(), int(4));
    }

    #[test]
    fn negative_complete_vanishes_symbolically() {
        for r in 2..=4 {
            let v = symbolic(r);
            for n in 1..r as i64 {
                assert!(complete(-n, &v).unwrap().is_empty(), "h_-{n} for r = {r}");
            }
        }
    }

    #[test]
    fn power_values() {
        assert_eq!(power(2, &ints(&[1, 2, 3])).unwrap(), int(14));
        let v = ints(&[4, -2, 9]);
        assert_eq!(power(1, &v).unwrap(), elementary(1, &v));
        let d = doubled_symbolic(1);
        let expected = &MultiLaurent::var_pow(1, 0, 3) + &MultiLaurent::var_pow(1, 0, -3);
        assert_eq!(power(3, &d).unwrap(), expected);
        assert!(matches!(power(0, &v), Err(Error::Domain(_))));
    }

    #[test]
    fn monomial_values() {
        let v = symbolic(3);
        for n in 1..5u32 {
            let row = Partition::new(vec![n]).unwrap();
            assert_eq!(monomial(&row, &v).unwrap(), power(n as i64, &v).unwrap());
        }
        assert_eq!(
            monomial(&Partition::new(vec![1, 1]).unwrap(), &v).unwrap(),
            elementary(2, &v)
        );
        let v2 = symbolic(2);
        let (a, b) = (MultiLaurent::var(2, 0), MultiLaurent::var(2, 1));
        let expected = &(&(&a * &a) * &b) + &(&(&b * &b) * &a);
        assert_eq!(
            monomial(&Partition::new(vec![2, 1]).unwrap(), &v2).unwrap(),
            expected
        );
        assert!(monomial(&Partition::new(vec![1, 1, 1]).unwrap(), &v2).is_err());
    }

    #[test]
    fn monomials_expand_complete() {
        // h_n is the sum of all monomial polynomials of weight n.
        let v = ints(&[2, -1, 3, 5]);
        for n in 0..7u32 {
            let total = partitions_of(n, 4)
                .iter()
                .fold(int(0), |acc, l| acc + monomial(l, &v).unwrap());
            assert_eq!(total, complete(n as i64, &v).unwrap());
        }
    }

    #[test]
    fn schur_special_shapes_symbolic() {
        for r in 1..=4 {
            let v = symbolic(r);
            let e = elementary_upto(8, &v);
            let h = complete_upto(8, &v);
            for n in 0..=8usize {
                assert_eq!(schur(&vec![1; n], &v).unwrap(), e[n], "s_(1^{n}) r={r}");
                assert_eq!(schur(&[n as i64], &v).unwrap(), h[n], "s_({n}) r={r}");
            }
        }
    }

    #[test]
    fn schur_two_variable_characters() {
        for (l1, l2) in [(0, 0), (1, 0), (3, 1), (5, 5), (6, 2)] {
            let z = UniLaurent::power_of_var('z', 1);
            let zi = UniLaurent::power_of_var('z', -1);
            let v =
                PointVector::doubled(std::slice::from_ref(&z), std::slice::from_ref(&zi)).unwrap();
            let s = schur(&[l1, l2], &v).unwrap();
            let d = l1 - l2 + 1;
            let rhs = &UniLaurent::power_of_var('z', d) - &UniLaurent::power_of_var('z', -d);
            assert_eq!(&s * &(&z - &zi), rhs);
        }
    }

    #[test]
    fn schur_errors() {
        assert_eq!(schur(&[2, 1], &ints(&[3, 3])), Err(Error::DivisionByZero));
        assert!(matches!(
            schur(&[1, 2], &ints(&[1, 2])),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            schur(&[-1, -2], &ints(&[1, 2])),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn wronski_and_newton_symbolic() {
        for r in 1..=4 {
            let v = symbolic(r);
            for n in 1..=10 {
                assert!(wronski_check(n, &v).unwrap(), "r={r} n={n}");
            }
            for n in 0..=10 {
                assert!(newton_check(n, &v), "r={r} n={n}");
            }
        }
        assert!(wronski_check(0, &symbolic(2)).is_err());
    }

    #[test]
    fn generating_functions() {
        let v = symbolic(2);
        let (a, b) = (MultiLaurent::var(2, 0), MultiLaurent::var(2, 1));
        let e = genfun_truncation(Family::E, &v, 4);
        assert_eq!(e[1], &a + &b);
        assert_eq!(e[2], &a * &b);
        assert!(e[3].is_empty() && e[4].is_empty());
        assert_eq!(genfun_truncation(Family::H, &ints(&[1, 1]), 3)[3], int(4));
        assert_eq!(
            genfun_truncation(Family::P, &ints(&[4, 5, 6]), 3)[0],
            int(3)
        );
        for r in 1..=4 {
            let v = symbolic(r);
            let e = elementary_upto(10, &v);
            let h = complete_upto(10, &v);
            let p = power_sums_with_count(10, &v);
            assert_eq!(genfun_truncation(Family::E, &v, 10), e);
            assert_eq!(genfun_truncation(Family::H, &v, 10), h);
            assert_eq!(genfun_truncation(Family::P, &v, 10), p);
        }
    }

    #[test]
    fn clebsch_gordan_rule() {
        let z = UniLaurent::power_of_var('z', 1);
        let zi = UniLaurent::power_of_var('z', -1);
        let sum = &z + &zi;
        let diff = &z - &zi;
        let mut pow = UniLaurent::one('z');
        for n in 0..=20i64 {
            let lhs = &pow * &diff;
            let mut rhs = UniLaurent::zero('z');
            for k in 0..=n / 2 {
                let d = n - 2 * k + 1;
                let chi = &UniLaurent::power_of_var('z', d) - &UniLaurent::power_of_var('z', -d);
                rhs = &rhs + &chi.scaled(&c(n, k));
            }
            assert_eq!(lhs, rhs, "n = {n}");
            pow = &pow * &sum;
        }
    }

    /// Standard Young tableaux of shape (n-k, k), counted by trying every
    /// choice of second-row entries.
    fn kostka_two_row(n: usize, k: usize) -> u64 {
        let mut count = 0;
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != k {
                continue;
            }
            let second: Vec<usize> = (0..n)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| i + 1)
                .collect();
            let first: Vec<usize> = (0..n)
                .filter(|i| mask & (1 << i) == 0)
                .map(|i| i + 1)
                .collect();
            // Rows increase by construction; columns need first[j] < second[j].
            if second.iter().enumerate().all(|(j, s)| first[j] < *s) {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn kostka_numbers_are_ballot_coefficients() {
        for n in 0..=10usize {
            for k in 0..=n / 2 {
                assert_eq!(
                    int(kostka_two_row(n, k) as i64),
                    c(n as i64, k as i64),
                    "n={n} k={k}"
                );
            }
        }
    }

    fn small_rat() -> impl Strategy<Value = Rat> {
        (-50i64..50, 1i64..20).prop_map(|(a, b)| rat(a, b))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(20))]

        #[test]
        fn relations_at_random_points(pts in prop::collection::vec(small_rat(), 1..=4)) {
            let v = PointVector::plain(pts);
            for n in 1..=10 {
                prop_assert!(wronski_check(n, &v).unwrap());
            }
            for n in 0..=10 {
                prop_assert!(newton_check(n, &v));
            }
            let h = complete_upto(6, &v);
            if let Ok(s) = schur(&[5], &v) {
                prop_assert_eq!(s, h[5].clone());
            }
        }
    }
}
