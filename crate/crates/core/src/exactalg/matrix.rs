use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::ring::Ring;

/// Determinant over an arbitrary ring by cofactor expansion, memoized on the
/// set of columns already used. Costs `O(n 2^n)` ring operations and needs no
/// division, so it works in rings without exact quotients.
///
/// `one` supplies the ring context for the empty matrix.
pub fn determinant<T: Ring>(rows: &[Vec<T>], one: &T) -> T {
    let n = rows.len();
    assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
    assert!(n < 24, "cofactor expansion limited to n < 24");
    let mut memo: HashMap<u32, T> = HashMap::new();
    expand(rows, 0, 0, one, &mut memo)
}

fn expand<T: Ring>(
    rows: &[Vec<T>],
    row: usize,
    used: u32,
    one: &T,
    memo: &mut HashMap<u32, T>,
) -> T {
    let n = rows.len();
    if row == n {
        return one.clone();
    }
    if let Some(v) = memo.get(&used) {
        return v.clone();
    }
    let mut acc = one.zero_like();
    let mut position = 0usize;
    for col in 0..n {
        if used & (1 << col) != 0 {
            continue;
        }
        let entry = &rows[row][col];
        if !entry.is_zero_elem() {
            let minor = expand(rows, row + 1, used | (1 << col), one, memo);
            let term = entry.times(&minor);
            acc = if position.is_multiple_of(2) {
                acc.plus(&term)
            } else {
                acc.minus(&term)
            };
        }
        position += 1;
    }
    memo.insert(used, acc.clone());
    acc
}

/// Fraction-free Gaussian elimination (Bareiss) over the integers.
///
/// Every intermediate division is exact, so the whole computation stays in ℤ.
pub fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "matrix must be square");
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}
