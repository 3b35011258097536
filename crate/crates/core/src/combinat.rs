//! Binomials with arbitrary integer upper index, the ballot coefficients
//! `c(n,k)`, raising factorials, Gaussian binomials, partitions and the
//! series `psi(alpha; x)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{Int, Rat, Ring, Series, UniLaurent};

/// `n(n-1)...(n-k+1)/k!` for any integer `n`; zero for `k < 0`.
pub fn binom(n: i64, k: i64) -> Int {
    if k < 0 {
        return Int::zero();
    }
    let n = Int::from(n);
    let mut acc = Int::one();
    for i in 0..k {
        // acc is binom(n, i) here, so the division is exact.
        acc = acc * (&n - i) / (i + 1);
    }
    acc
}

/// Ballot coefficient `c(n,k) = binom(n,k) - binom(n,k-1)`.
pub fn c(n: i64, k: i64) -> Int {
    binom(n, k) - binom(n, k - 1)
}

/// Entry of the ballot table: `c(n,k)` for `k <= n/2`, and zero beyond the
/// half-way column when `n > 0` (the table is blank there, while the binomial
/// difference goes negative).
pub fn ballot_table(n: i64, k: i64) -> Int {
    if n > 0 && k > n / 2 {
        return Int::zero();
    }
    c(n, k)
}

/// `a(a+1)...(a+m-1)`, with `(a)_0 = 1`.
pub fn raising_factorial(a: &Rat, m: u32) -> Rat {
    (0..m).fold(Rat::one(), |acc, i| {
        acc * (a + Rat::from_integer(Int::from(i)))
    })
}

pub fn factorial(n: u32) -> Int {
    (1..=n).fold(Int::one(), |acc, i| acc * i)
}

/// Gaussian binomial coefficient as a polynomial in `q`.
///
/// Built with the q-Pascal rule `[n,k] = [n-1,k-1] + q^k [n-1,k]`.
pub fn q_binom(n: u32, k: i64) -> UniLaurent {
    if k < 0 || k > n as i64 {
        return UniLaurent::zero('q');
    }
    let k = k as usize;
    let mut row = vec![UniLaurent::one('q')];
    for m in 1..=n as usize {
        let mut next = Vec::with_capacity(m + 1);
        for j in 0..=m.min(k) {
            let left = if j == 0 {
                UniLaurent::zero('q')
            } else {
                row[j - 1].clone()
            };
            let right = if j < row.len() {
                row[j].shift(j as i64)
            } else {
                UniLaurent::zero('q')
            };
            next.push(&left + &right);
        }
        row = next;
    }
    row.swap_remove(k)
}

/// `psi(alpha; x) = sum_k (alpha)_{2k} / (k! (alpha+1)_k) x^k` truncated at `order`.
pub fn psi_series(alpha: i64, order: usize) -> Result<Series> {
    let a = Rat::from_integer(Int::from(alpha));
    let a1 = &a + Rat::one();
    let mut coeffs = Vec::with_capacity(order + 1);
    for k in 0..=order as u32 {
        let den = raising_factorial(&a1, k) * Rat::from_integer(factorial(k));
        if den.is_zero() {
            return Err(Error::Domain(format!(
                "(alpha+1)_k vanishes for alpha = {alpha}, k = {k}"
            )));
        }
        coeffs.push(raising_factorial(&a, 2 * k) / den);
    }
    Ok(Series::new(coeffs, order))
}

/// A partition stored as weakly decreasing nonnegative parts; trailing zeros
/// are allowed and ignored by [`Partition::length`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Nonzero parts only.
    pub fn nonzero_parts(&self) -> &[u32] {
        &self.parts[..self.length()]
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    pub fn length(&self) -> usize {
        self.parts.iter().take_while(|&&p| p > 0).count()
    }

    /// Number of parts equal to `i` (for `i >= 1`).
    pub fn multiplicity(&self, i: u32) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    /// Distinct nonzero parts with their multiplicities, largest part first.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in self.nonzero_parts() {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Parts padded with zeros (or cut) to exactly `len` entries.
    pub fn padded(&self, len: usize) -> Vec<i64> {
        (0..len)
            .map(|i| self.parts.get(i).copied().unwrap_or(0) as i64)
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.nonzero_parts().iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Partitions of `n` with at most `max_parts` nonzero parts, in reverse
/// lexicographic order: `(n)` first, `(1,...,1)` last.
pub fn partitions_of(n: u32, max_parts: usize) -> Vec<Partition> {
    fn go(rest: u32, cap: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=cap.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, max_parts, &mut Vec::new(), &mut out);
    out
}

/// `z_lambda = prod_i i^{m_i} m_i!`.
pub fn z_lambda(lambda: &Partition) -> Int {
    lambda
        .multiplicities()
        .into_iter()
        .fold(BigInt::one(), |acc, (i, m)| {
            acc * Ring::pow(&Int::from(i), m as u32) * factorial(m as u32)
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, rat};
    use proptest::prelude::*;

    #[test]
    fn binomials() {
        assert_eq!(binom(5, 2), int(10));
        assert_eq!(binom(-2, 3), int(-4));
        // (-1)^k binom(k-n-1, k) with n = -2, k = 3
        assert_eq!(binom(-2, 3), -binom(4, 3));
        assert_eq!(binom(7, -1), int(0));
        assert_eq!(binom(3, 5), int(0));
        assert_eq!(binom(-1, 4), int(1));
    }

    #[test]
    fn ballot_values() {
        assert_eq!(c(14, 5), int(1001));
        assert_eq!(c(21, 10), int(58786));
        assert_eq!(c(8, 4), int(14));
        assert_eq!(c(0, 0), int(1));
        assert_eq!(c(11, 7), int(-132));
        assert_eq!(ballot_table(11, 7), int(0));
        assert_eq!(c(11, 6), int(0));
    }

    #[test]
    fn raising_factorials() {
        assert_eq!(raising_factorial(&rat(1, 1), 4), rat(24, 1));
        assert_eq!(raising_factorial(&rat(-7, 3), 0), rat(1, 1));
        assert_eq!(raising_factorial(&rat(1, 2), 2), rat(3, 4));
    }

    #[test]
    fn gaussian_binomials() {
        let one = UniLaurent::one('q');
        assert_eq!(q_binom(2, 1), &one + &UniLaurent::power_of_var('q', 1));
        assert_eq!(q_binom(9, 0), one);
        assert_eq!(q_binom(4, 2).eval(&rat(1, 1)).unwrap(), rat(6, 1));
        assert!(q_binom(3, 4).is_empty());
        assert!(q_binom(3, -1).is_empty());
        // [4,2] = 1 + q + 2q^2 + q^3 + q^4
        assert_eq!(q_binom(4, 2).to_string(), "1 + q + 2*q^2 + q^3 + q^4");
    }

    #[test]
    fn psi_values() {
        let p = psi_series(1, 5).unwrap();
        assert!(p
            .try_eq(&Series::from_ints(&[1, 1, 2, 5, 14, 42], 5))
            .unwrap());
        assert!(psi_series(0, 6).unwrap().try_eq(&Series::one(6)).unwrap());
        let p3 = psi_series(3, 10).unwrap();
        for k in 0..=10 {
            assert_eq!(
                *p3.coeff(k as usize),
                Rat::from_integer(c(3 + 2 * k - 1, k))
            );
        }
        assert!(matches!(psi_series(-1, 3), Err(Error::Domain(_))));
        assert!(psi_series(-1, 0).is_ok());
    }

    #[test]
    fn partition_enumeration() {
        let p22 = partitions_of(2, 2);
        assert_eq!(
            p22,
            vec![
                Partition::new(vec![2]).unwrap(),
                Partition::new(vec![1, 1]).unwrap()
            ]
        );
        assert_eq!(partitions_of(0, 3), vec![Partition::empty()]);
        assert_eq!(partitions_of(6, 6).len(), 11);
        assert_eq!(partitions_of(6, 2).len(), 4);
        assert!(Partition::new(vec![1, 2]).is_err());
        let lam = Partition::new(vec![3, 1, 1, 0]).unwrap();
        assert_eq!((lam.weight(), lam.length(), lam.multiplicity(1)), (5, 3, 2));
        assert_eq!(lam.to_string(), "(3,1,1)");
    }

    #[test]
    fn z_lambda_values() {
        assert_eq!(z_lambda(&Partition::new(vec![1, 1]).unwrap()), int(2));
        assert_eq!(z_lambda(&Partition::new(vec![2]).unwrap()), int(2));
        // Cycle types of S_4 partition the group.
        let total: Int = partitions_of(4, 4)
            .iter()
            .map(|l| factorial(4) / z_lambda(l))
            .sum();
        assert_eq!(total, int(24));
    }

    #[test]
    fn partition_counts_match_brute_force() {
        // Count weakly decreasing tuples directly.
        fn brute(n: u32, max: u32, slots: usize) -> usize {
            if n == 0 {
                return 1;
            }
            if slots == 0 {
                return 0;
            }
            (1..=max.min(n)).map(|p| brute(n - p, p, slots - 1)).sum()
        }
        for n in 0..12 {
            for k in 0..6 {
                let ps = partitions_of(n, k);
                assert_eq!(ps.len(), brute(n, n, k));
                assert!(
                    ps.windows(2).all(|w| w[0] > w[1]),
                    "reverse lexicographic order"
                );
                assert!(ps.iter().all(|p| p.weight() == n as u64 && p.length() <= k));
            }
        }
    }

    proptest! {
        #[test]
        fn ballot_pascal(n in 1i64..=40, k in 1i64..=40) {
            prop_assume!(k <= n);
            prop_assert_eq!(c(n, k), c(n - 1, k - 1) + c(n - 1, k));
        }

        #[test]
        fn ballot_table_boundary(n in 1i64..=40, k in 0i64..=40) {
            if k == 0 {
                prop_assert_eq!(ballot_table(n, 0), int(1));
            } else if k > n / 2 {
                prop_assert_eq!(ballot_table(n, k), int(0));
            } else {
                prop_assert_eq!(ballot_table(n, k), ballot_table(n - 1, k - 1) + ballot_table(n - 1, k));
            }
        }

        #[test]
        fn negative_upper_reflection(n in -30i64..0, k in 0i64..15) {
            let sign = if k % 2 == 0 { int(1) } else { int(-1) };
            prop_assert_eq!(binom(n, k), sign * binom(k - n - 1, k));
        }

        #[test]
        fn q_binom_symmetry(n in 0u32..=14, k in 0i64..=14) {
            prop_assume!(k <= n as i64);
            prop_assert_eq!(q_binom(n, k), q_binom(n, n as i64 - k));
            prop_assert_eq!(q_binom(n, k).eval(&rat(1, 1)).unwrap(), Rat::from_integer(binom(n as i64, k)));
        }
    }
}
