//! Higher-order Fibonacci and Lucas numbers
//! `F_(n+1) = h_n(-zeta^j - zeta^-j)` and `L_n = p_n(-zeta^j - zeta^-j)`,
//! `zeta = exp(2 pi i / (2r+1))`, from several independent routes.

mod checks;
mod determinants;
mod table;

use num_traits::{One, Zero};

use crate::combinat::{binom, c};
use crate::cyclotomic::{as_integer, zeta_shift_vector};
use crate::error::{Error, Result};
use crate::exactalg::{Int, Rat};
use crate::symfun::{complete_upto, power_sums_with_count};

pub use checks::{
    c_coeff_check, congruence_check, cross_oracle_check, fibonacci_specializations_check,
    initial_block_check, inversion_check_f, inversion_check_l, lucas_specializations_check,
    partition_relations_check, recursion_genfun_check,
};
pub use determinants::{determinant_formulas_check, discriminant_check, vandermonde_numerator};
pub use table::{golden, golden_check, known_typos, table, KnownTypo, SeqTable, TableKind};

fn floor_div(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

fn sign(k: i64) -> Int {
    if k.rem_euclid(2) == 0 {
        Int::one()
    } else {
        -Int::one()
    }
}

fn to_int(x: Rat, what: &str) -> Result<Int> {
    if x.is_integer() {
        Ok(x.to_integer())
    } else {
        Err(Error::Inconsistent(format!(
            "{what} = {x} is not an integer"
        )))
    }
}

fn pow2(e: i64) -> Rat {
    if e >= 0 {
        Rat::from_integer(Int::one() << e as usize)
    } else {
        Rat::new(Int::one(), Int::one() << (-e) as usize)
    }
}

/// `(lag, coefficient)` pairs of `a_(n+r) = sum coefficient * a_(n+r-lag)`.
pub fn recurrence_coefficients(r: usize) -> Vec<(usize, Int)> {
    let ri = r as i64;
    let mut out = Vec::with_capacity(r);
    for j in 0..=floor_div(ri - 1, 2) {
        out.push((1 + 2 * j as usize, sign(j) * binom(ri - 1 - j, j)));
    }
    for j in 0..=floor_div(ri - 2, 2) {
        out.push((2 + 2 * j as usize, sign(j) * binom(ri - 1 - j, j + 1)));
    }
    out.sort_by_key(|(lag, _)| *lag);
    out
}

fn extend(values: &mut Vec<Int>, r: usize, len: usize) {
    let coeffs = recurrence_coefficients(r);
    while values.len() < len {
        let n = values.len();
        let next = coeffs
            .iter()
            .fold(Int::zero(), |acc, (lag, k)| acc + k * &values[n - lag]);
        values.push(next);
    }
}

/// `F_n^(r)` for `2 - r <= n <= n_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HigherFib {
    r: usize,
    values: Vec<Int>,
}

impl HigherFib {
    pub fn r(&self) -> usize {
        self.r
    }

    pub fn min_index(&self) -> i64 {
        2 - self.r as i64
    }

    pub fn max_index(&self) -> i64 {
        self.min_index() + self.values.len() as i64 - 1
    }

    /// `None` outside the stored window.
    pub fn get(&self, n: i64) -> Option<&Int> {
        usize::try_from(n - self.min_index())
            .ok()
            .and_then(|i| self.values.get(i))
    }

    /// Panicking accessor for indices known to be stored.
    pub fn at(&self, n: i64) -> &Int {
        self.get(n)
            .unwrap_or_else(|| panic!("F_{n}^({}) is outside the stored window", self.r))
    }

    /// `F_k` for `k >= 1`, zero otherwise, as in the Jacobi-Trudi matrices.
    fn jt(&self, k: i64) -> Int {
        if k >= 1 {
            self.at(k).clone()
        } else {
            Int::zero()
        }
    }
}

/// `L_n^(r)` for `0 <= n <= n_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HigherLucas {
    r: usize,
    values: Vec<Int>,
}

impl HigherLucas {
    pub fn r(&self) -> usize {
        self.r
    }

    pub fn max_index(&self) -> i64 {
        self.values.len() as i64 - 1
    }

    pub fn get(&self, n: i64) -> Option<&Int> {
        usize::try_from(n).ok().and_then(|i| self.values.get(i))
    }

    pub fn at(&self, n: i64) -> &Int {
        self.get(n)
            .unwrap_or_else(|| panic!("L_{n}^({}) is outside the stored window", self.r))
    }

    pub fn values(&self) -> &[Int] {
        &self.values
    }
}

/// `F_n^(r)` from the zero block `F_(2-r) = ... = F_0 = 0`, `F_1 = 1` and the recursion.
pub fn fib_recurrence(r: usize, n_max: i64) -> HigherFib {
    assert!(r >= 1, "r must be positive");
    let mut values = vec![Int::zero(); r - 1];
    values.push(Int::one());
    let len = (n_max - (2 - r as i64) + 1).max(r as i64) as usize;
    extend(&mut values, r, len);
    values.truncate((n_max - (2 - r as i64) + 1).max(0) as usize);
    HigherFib { r, values }
}

/// `L_n^(r)` from the small-index closed forms for `n < r` and the recursion.
pub fn lucas_recurrence(r: usize, n_max: i64) -> HigherLucas {
    assert!(r >= 1, "r must be positive");
    let mut values: Vec<Int> = (0..r as i64)
        .map(|n| lucas_small_index(r, n).expect("closed form is integral"))
        .collect();
    extend(&mut values, r, (n_max + 1).max(r as i64) as usize);
    values.truncate((n_max + 1).max(0) as usize);
    HigherLucas { r, values }
}

/// `-2^(2m-1) + (2r+1)/2 binom(2m, m)` for `n = 2m`, `4^m` for `n = 2m+1`.
pub fn lucas_small_index(r: usize, n: i64) -> Result<Int> {
    let m = n / 2;
    if n % 2 == 1 {
        return Ok(Int::one() << (2 * m) as usize);
    }
    let v = -pow2(2 * m - 1)
        + Rat::new(Int::from(2 * r + 1), Int::from(2)) * Rat::from_integer(binom(2 * m, m));
    to_int(v, &format!("L_{n}^({r}) small-index form"))
}

/// First explicit form: half-differences of floor signs against `c(n+r-2, k)`.
pub fn fib_explicit_floor(r: usize, n: i64) -> Int {
    let (ri, p) = (r as i64, 2 * r as i64 + 1);
    (0..=floor_div(n - 1, 2))
        .map(|k| {
            (sign(floor_div(n - 1 - 2 * k, p)) - sign(floor_div(n - 2 * k - 3, p))) / 2
                * c(n + ri - 2, k)
        })
        .sum()
}

/// Second explicit form: `sum_k (-1)^k c(n+r-2, floor((n-1-(2r+1)k)/2))`.
pub fn fib_explicit_alternating(r: usize, n: i64) -> Int {
    let (ri, p) = (r as i64, 2 * r as i64 + 1);
    (0..=floor_div(n - 1, p))
        .map(|k| sign(k) * c(n + ri - 2, floor_div(n - 1 - p * k, 2)))
        .sum()
}

/// `F_n^(r)` for `n >= 1`; both explicit forms must agree.
pub fn fib_explicit(r: usize, n: i64) -> Result<Int> {
    if r == 0 || n < 1 {
        return Err(Error::Domain(format!(
            "explicit F_n^(r) needs r >= 1 and n >= 1, got r={r}, n={n}"
        )));
    }
    let a = fib_explicit_floor(r, n);
    let b = fib_explicit_alternating(r, n);
    if a != b {
        return Err(Error::Inconsistent(format!(
            "F_{n}^({r}): floor form {a}, alternating form {b}"
        )));
    }
    Ok(a)
}

/// `(-1)^(n+1) 2^(n-1) + (-1)^n (2r+1)/2 sum_k binom(n,k) [2r+1 | n-2k]`.
pub fn lucas_explicit_delta(r: usize, n: i64) -> Result<Int> {
    let p = 2 * r as i64 + 1;
    let s: Int = (0..=n)
        .filter(|k| (n - 2 * k) % p == 0)
        .map(|k| binom(n, k))
        .sum();
    let v = Rat::from_integer(-sign(n)) * pow2(n - 1)
        + Rat::from_integer(sign(n) * s) * Rat::new(Int::from(p), Int::from(2));
    to_int(v, &format!("L_{n}^({r}) divisibility form"))
}

/// The even/odd case form of the explicit Lucas formula.
pub fn lucas_explicit_cases(r: usize, n: i64) -> Result<Int> {
    let (ri, p) = (r as i64, 2 * r as i64 + 1);
    let m = n / 2;
    let half_p = Rat::new(Int::from(p), Int::from(2));
    let v = if n % 2 == 0 {
        let s: Int = (-floor_div(m, p)..=floor_div(m, p))
            .map(|k| binom(2 * m, m - p * k))
            .sum();
        -pow2(2 * m - 1) + half_p * Rat::from_integer(s)
    } else {
        let s: Int = (-floor_div(m + ri + 1, p)..=floor_div(m - ri, p))
            .map(|k| binom(2 * m + 1, m - p * k - ri))
            .sum();
        pow2(2 * m) - half_p * Rat::from_integer(s)
    };
    to_int(v, &format!("L_{n}^({r}) case form"))
}

/// `L_n^(r)` for `n >= 0`; both explicit forms must agree.
pub fn lucas_explicit(r: usize, n: i64) -> Result<Int> {
    if r == 0 || n < 0 {
        return Err(Error::Domain(format!(
            "explicit L_n^(r) needs r >= 1 and n >= 0, got r={r}, n={n}"
        )));
    }
    let a = lucas_explicit_delta(r, n)?;
    let b = lucas_explicit_cases(r, n)?;
    if a != b {
        return Err(Error::Inconsistent(format!(
            "L_{n}^({r}): divisibility form {a}, case form {b}"
        )));
    }
    Ok(a)
}

/// `F_1 ..= F_(n_max+1)` as `h_0 ..= h_(n_max)` at `-zeta^j - zeta^-j`.
pub fn fib_cyclotomic_upto(r: usize, n_max: usize) -> Result<Vec<Int>> {
    complete_upto(n_max, &zeta_shift_vector(r))
        .iter()
        .map(as_integer)
        .collect()
}

/// `L_0 ..= L_(n_max)` as `p_0 ..= p_(n_max)` at `-zeta^j - zeta^-j`, with `p_0 = r`.
pub fn lucas_cyclotomic_upto(r: usize, n_max: usize) -> Result<Vec<Int>> {
    power_sums_with_count(n_max, &zeta_shift_vector(r))
        .iter()
        .map(as_integer)
        .collect()
}

/// `F_(n+1)^(r) = h_n(-zeta^j - zeta^-j)`.
pub fn fib_cyclotomic(r: usize, n: usize) -> Result<Int> {
    Ok(fib_cyclotomic_upto(r, n)?.swap_remove(n))
}

/// `L_n^(r) = p_n(-zeta^j - zeta^-j)` for `n >= 1`.
pub fn lucas_cyclotomic(r: usize, n: usize) -> Result<Int> {
    if n == 0 {
        return Err(Error::Domain("cyclotomic L_n needs n >= 1".into()));
    }
    Ok(lucas_cyclotomic_upto(r, n)?.swap_remove(n))
}

/// `C_n^(r) = e_n(-zeta^j - zeta^-j)`, zero outside `0..=r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CCoeff {
    r: usize,
    values: Vec<Int>,
}

impl CCoeff {
    pub fn r(&self) -> usize {
        self.r
    }

    pub fn values(&self) -> &[Int] {
        &self.values
    }

    pub fn get(&self, n: i64) -> Int {
        usize::try_from(n)
            .ok()
            .and_then(|i| self.values.get(i))
            .cloned()
            .unwrap_or_default()
    }
}

/// `C_n = (-1)^floor(n/2) binom(r - floor((n+1)/2), floor(n/2))`.
pub fn c_coeff(r: usize) -> CCoeff {
    let ri = r as i64;
    let values = (0..=ri)
        .map(|n| sign(n / 2) * binom(ri - (n + 1) / 2, n / 2))
        .collect();
    CCoeff { r, values }
}
