//! Exact arithmetic in `Z[x]/Phi_m(x)` and the root-of-unity evaluation
//! points `-zeta^j`, `-zeta^-j`, `-zeta^j - zeta^-j`.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{determinant, Int, Rat, Ring, UniLaurent};
use crate::symfun::PointVector;

/// The `m`-th cyclotomic polynomial in `x`, by dividing `x^m - 1` by every
/// `Phi_d` with `d | m`, `d < m`.
pub fn cyclotomic_poly(m: u64) -> UniLaurent {
    assert!(m >= 1, "cyclotomic polynomials are indexed from 1");
    let mut acc = &UniLaurent::power_of_var('x', m as i64) - &UniLaurent::one('x');
    for d in 1..m {
        if m.is_multiple_of(d) {
            acc = acc
                .exact_div(&cyclotomic_poly(d))
                .expect("Phi_d divides x^m - 1");
        }
    }
    acc
}

pub fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

/// The ring `Z[x]/Phi_m`, with `x` standing for a primitive `m`-th root of unity.
#[derive(Debug, PartialEq, Eq)]
pub struct CycField {
    m: u64,
    /// Ascending coefficients of `Phi_m`, leading 1 included.
    phi: Vec<Int>,
}

impl CycField {
    pub fn new(m: u64) -> Arc<Self> {
        let poly = cyclotomic_poly(m);
        let deg = poly.max_exp().unwrap() as usize;
        let phi = (0..=deg as i64).map(|e| poly.coeff(e)).collect();
        Arc::new(CycField { m, phi })
    }

    pub fn order(&self) -> u64 {
        self.m
    }

    /// Euler's totient of `m`.
    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    pub fn phi(&self) -> &[Int] {
        &self.phi
    }

    /// Reduces a dense polynomial modulo the monic `Phi_m`.
    fn reduce(&self, mut coeffs: Vec<Int>) -> Vec<Int> {
        let d = self.degree();
        for top in (d..coeffs.len()).rev() {
            let c = std::mem::take(&mut coeffs[top]);
            if c.is_zero() {
                continue;
            }
            for (i, p) in self.phi[..d].iter().enumerate() {
                coeffs[top - d + i] -= &c * p;
            }
        }
        coeffs.resize(d, Int::zero());
        coeffs
    }
}

/// Element of `Z[x]/Phi_m` in the power basis `1, zeta, ..., zeta^(deg-1)`.
#[derive(Clone)]
pub struct CycInt {
    field: Arc<CycField>,
    coords: Vec<Int>,
}

impl CycInt {
    pub fn from_int(field: &Arc<CycField>, c: Int) -> Self {
        let mut coords = vec![Int::zero(); field.degree()];
        coords[0] = c;
        CycInt {
            field: field.clone(),
            coords,
        }
    }

    pub fn from_poly(field: &Arc<CycField>, coeffs: Vec<Int>) -> Self {
        CycInt {
            field: field.clone(),
            coords: field.reduce(coeffs),
        }
    }

    /// `zeta^k` for any integer `k`.
    pub fn zeta(field: &Arc<CycField>, k: i64) -> Self {
        let e = k.rem_euclid(field.m as i64) as usize;
        let mut coeffs = vec![Int::zero(); e + 1];
        coeffs[e] = Int::one();
        Self::from_poly(field, coeffs)
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn coords(&self) -> &[Int] {
        &self.coords
    }

    fn check_field(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.field, &other.field) || self.field.m == other.field.m,
            "mixed cyclotomic fields"
        );
    }

    /// Matrix of multiplication by `self` on the power basis (columns are `self * zeta^j`).
    fn multiplication_matrix(&self) -> Vec<Vec<Rat>> {
        let d = self.field.degree();
        let mut cols = Vec::with_capacity(d);
        let mut cur = self.clone();
        for _ in 0..d {
            cols.push(cur.coords.clone());
            let mut shifted = vec![Int::zero()];
            shifted.extend(cur.coords.iter().cloned());
            cur = Self::from_poly(&self.field, shifted);
        }
        (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| Rat::from_integer(cols[j][i].clone()))
                    .collect()
            })
            .collect()
    }
}

/// The constant coordinate, provided every other coordinate vanishes.
pub fn as_integer(x: &CycInt) -> Result<Int> {
    if x.coords[1..].iter().any(|c| !c.is_zero()) {
        return Err(Error::NotAnInteger(
            x.coords.iter().map(Int::to_string).collect(),
        ));
    }
    Ok(x.coords[0].clone())
}

/// Solves `a u = b` over the rationals by Gaussian elimination; `None` when singular.
fn solve(mut a: Vec<Vec<Rat>>, mut b: Vec<Rat>) -> Option<Vec<Rat>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].recip();
        for row in 0..n {
            if row == col || a[row][col].is_zero() {
                continue;
            }
            let f = &a[row][col] * &inv;
            for k in col..n {
                let t = &f * &a[col][k];
                a[row][k] -= t;
            }
            let t = &f * &b[col];
            b[row] -= t;
        }
    }
    Some((0..n).map(|i| &b[i] / &a[i][i]).collect())
}

impl PartialEq for CycInt {
    fn eq(&self, other: &Self) -> bool {
        self.field.m == other.field.m && self.coords == other.coords
    }
}

impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "ζ")?,
                (1, false) => write!(f, "{mag}*ζ")?,
                (_, true) => write!(f, "ζ^{k}")?,
                (_, false) => write!(f, "{mag}*ζ^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycInt[{}]({self})", self.field.m)
    }
}

impl Ring for CycInt {
    fn zero_like(&self) -> Self {
        Self::from_int(&self.field, Int::zero())
    }
    fn one_like(&self) -> Self {
        Self::from_int(&self.field, Int::one())
    }
    fn is_zero_elem(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.check_field(rhs);
        CycInt {
            field: self.field.clone(),
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.check_field(rhs);
        CycInt {
            field: self.field.clone(),
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
    fn times(&self, rhs: &Self) -> Self {
        self.check_field(rhs);
        let d = self.field.degree();
        let mut prod = vec![Int::zero(); 2 * d - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coords.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        Self::from_poly(&self.field, prod)
    }
    fn negated(&self) -> Self {
        CycInt {
            field: self.field.clone(),
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
    fn scaled(&self, k: &Int) -> Self {
        CycInt {
            field: self.field.clone(),
            coords: self.coords.iter().map(|c| c * k).collect(),
        }
    }
    fn exact_div(&self, rhs: &Self) -> Result<Self> {
        self.check_field(rhs);
        if rhs.is_zero_elem() {
            return Err(Error::DivisionByZero);
        }
        let b = self
            .coords
            .iter()
            .map(|c| Rat::from_integer(c.clone()))
            .collect();
        // Nonzero elements of a domain give invertible multiplication matrices.
        let u = solve(rhs.multiplication_matrix(), b).ok_or(Error::DivisionByZero)?;
        if u.iter().any(|x| !x.is_integer()) {
            return Err(Error::InexactDivision(format!("({self}) / ({rhs})")));
        }
        Ok(CycInt {
            field: self.field.clone(),
            coords: u.into_iter().map(|x| x.to_integer()).collect(),
        })
    }
}

/// `(-zeta^j - zeta^-j)_{j=1..r}` in `Z[x]/Phi_(2r+1)`.
pub fn zeta_shift_vector(r: usize) -> PointVector<CycInt> {
    let (z, zi) = zeta_halves(r);
    PointVector::shifted(&z, &zi).expect("zeta^j and zeta^-j are inverse")
}

/// `(-zeta^1, ..., -zeta^r, -zeta^-1, ..., -zeta^-r)` in `Z[x]/Phi_(2r+1)`.
pub fn zeta_doubled_vector(r: usize) -> PointVector<CycInt> {
    let (z, zi) = zeta_halves(r);
    PointVector::doubled(&z, &zi).expect("zeta^j and zeta^-j are inverse")
}

fn zeta_halves(r: usize) -> (Vec<CycInt>, Vec<CycInt>) {
    assert!(r >= 1);
    let field = CycField::new(2 * r as u64 + 1);
    let z = (1..=r as i64)
        .map(|j| CycInt::zeta(&field, j).negated())
        .collect();
    let zi = (1..=r as i64)
        .map(|j| CycInt::zeta(&field, -j).negated())
        .collect();
    (z, zi)
}

/// The conjugates `-zeta^k - zeta^-k` for `k = r, r-1, ..., 1` of the
/// generator of the real subfield, in the row order used by the discriminant.
pub fn real_conjugates(r: usize) -> Vec<CycInt> {
    let field = CycField::new(2 * r as u64 + 1);
    (1..=r as i64)
        .map(|i| {
            let k = r as i64 + 1 - i;
            CycInt::zeta(&field, k)
                .plus(&CycInt::zeta(&field, -k))
                .negated()
        })
        .collect()
}

/// `det(alpha_i^(r-j))` over the real conjugates: a Vandermonde determinant.
pub fn conjugate_vandermonde(r: usize) -> CycInt {
    let alpha = real_conjugates(r);
    let rows: Vec<Vec<CycInt>> = alpha
        .iter()
        .map(|a| (1..=r).map(|j| a.pow((r - j) as u32)).collect())
        .collect();
    let one = alpha[0].one_like();
    determinant(&rows, &one)
}

/// Checks `det(alpha_i^(r-j))^2 = p^(r-1)` for the prime `p = 2r+1`.
pub fn discriminant_square_check(r: usize) -> Result<bool> {
    let p = 2 * r as u64 + 1;
    if r == 0 || !is_prime(p) {
        return Err(Error::Domain(format!("2r+1 = {p} is not prime")));
    }
    let d = conjugate_vandermonde(r);
    let square = d.times(&d);
    Ok(as_integer(&square).ok() == Some(Ring::pow(&Int::from(p), r as u32 - 1)))
}
