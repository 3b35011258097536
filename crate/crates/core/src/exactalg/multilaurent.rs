use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Zero};

use super::ring::{rat_pow, sign_str, Int, Rat, Ring};
use super::unilaurent::forward_ops;
use crate::error::{Error, Result};

/// Sparse Laurent polynomial in `z1..zv` with integer coefficients.
///
/// Monomials are keyed by exponent vectors in lexicographic order and zero
/// coefficients are never stored, so `==` is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiLaurent {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, Int>,
}

impl MultiLaurent {
    pub fn zero(nvars: usize) -> Self {
        MultiLaurent {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Int::one())
    }

    pub fn constant(nvars: usize, c: Int) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn monomial(exps: Vec<i64>, c: Int) -> Self {
        let nvars = exps.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        MultiLaurent { nvars, terms }
    }

    /// The variable `z_{i+1}` (zero-based index).
    pub fn var(nvars: usize, i: usize) -> Self {
        Self::var_pow(nvars, i, 1)
    }

    /// `z_{i+1}^e`.
    pub fn var_pow(nvars: usize, i: usize, e: i64) -> Self {
        assert!(
            i < nvars,
            "variable index {i} out of range for {nvars} variables"
        );
        let mut exps = vec![0; nvars];
        exps[i] = e;
        Self::monomial(exps, Int::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i64], &Int)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn coeff(&self, exps: &[i64]) -> Int {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, exps: Vec<i64>, c: Int) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(slot) => {
                *slot += c;
                if slot.is_zero() {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    /// Evaluates at a rational point; a zero coordinate under a negative
    /// exponent is a domain error.
    pub fn eval(&self, point: &[Rat]) -> Result<Rat> {
        if point.len() != self.nvars {
            return Err(Error::Domain(format!(
                "point has {} coordinates, expected {}",
                point.len(),
                self.nvars
            )));
        }
        let mut acc = Rat::zero();
        for (exps, c) in &self.terms {
            let mut term = Rat::from_integer(c.clone());
            for (x, e) in point.iter().zip(exps) {
                if *e != 0 {
                    term *= rat_pow(x, *e)?;
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Per-variable minimum and maximum exponents.
    fn degree_box(&self) -> (Vec<i64>, Vec<i64>) {
        let mut lo = vec![i64::MAX; self.nvars];
        let mut hi = vec![i64::MIN; self.nvars];
        for exps in self.terms.keys() {
            for (i, e) in exps.iter().enumerate() {
                lo[i] = lo[i].min(*e);
                hi[i] = hi[i].max(*e);
            }
        }
        (lo, hi)
    }

    fn check_vars(&self, other: &Self) {
        assert_eq!(
            self.nvars, other.nvars,
            "Laurent polynomials over different variable counts"
        );
    }

    fn mul_impl(&self, other: &Self) -> Self {
        self.check_vars(other);
        let mut acc: HashMap<Vec<i64>, Int> = HashMap::with_capacity(self.len() * other.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let key: Vec<i64> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                *acc.entry(key).or_default() += ca * cb;
            }
        }
        MultiLaurent {
            nvars: self.nvars,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    fn div_impl(&self, divisor: &Self) -> Result<Self> {
        self.check_vars(divisor);
        if divisor.is_empty() {
            return Err(Error::DivisionByZero);
        }
        if self.is_empty() {
            return Ok(self.clone());
        }
        let inexact = || Error::InexactDivision(format!("({self}) / ({divisor})"));
        // Every exact quotient's monomials lie in this box; leaving it proves inexactness.
        let (alo, ahi) = self.degree_box();
        let (blo, bhi) = divisor.degree_box();
        let qlo: Vec<i64> = alo.iter().zip(&blo).map(|(a, b)| a - b).collect();
        let qhi: Vec<i64> = ahi.iter().zip(&bhi).map(|(a, b)| a - b).collect();
        let (lead_exp, lead_c) = divisor.terms.iter().next_back().unwrap();
        let mut rem = self.clone();
        let mut quot = Self::zero(self.nvars);
        while let Some((top_exp, top_c)) = rem.terms.iter().next_back() {
            let d: Vec<i64> = top_exp.iter().zip(lead_exp).map(|(a, b)| a - b).collect();
            if d.iter()
                .enumerate()
                .any(|(i, e)| *e < qlo[i] || *e > qhi[i])
            {
                return Err(inexact());
            }
            let (c, r) = top_c.div_rem(lead_c);
            if !r.is_zero() {
                return Err(inexact());
            }
            let t = Self::monomial(d, c);
            rem = rem.minus(&t.mul_impl(divisor));
            quot = quot.plus(&t);
        }
        Ok(quot)
    }
}

impl fmt::Display for MultiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (exps, c)) in self.terms.iter().rev().enumerate() {
            let (sign, mag) = sign_str(c);
            if i == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let factors: Vec<String> = exps
                .iter()
                .enumerate()
                .filter(|(_, e)| **e != 0)
                .map(|(j, e)| {
                    if *e == 1 {
                        format!("z{}", j + 1)
                    } else {
                        format!("z{}^{e}", j + 1)
                    }
                })
                .collect();
            match (factors.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => write!(f, "{}", factors.join("*"))?,
                (false, false) => write!(f, "{mag}*{}", factors.join("*"))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiLaurent[{}]({self})", self.nvars)
    }
}

impl Ring for MultiLaurent {
    fn zero_like(&self) -> Self {
        Self::zero(self.nvars)
    }
    fn one_like(&self) -> Self {
        Self::one(self.nvars)
    }
    fn is_zero_elem(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.check_vars(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.check_vars(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
    fn times(&self, rhs: &Self) -> Self {
        self.mul_impl(rhs)
    }
    fn negated(&self) -> Self {
        MultiLaurent {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
    fn scaled(&self, k: &Int) -> Self {
        if k.is_zero() {
            return self.zero_like();
        }
        MultiLaurent {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }
    fn exact_div(&self, rhs: &Self) -> Result<Self> {
        self.div_impl(rhs)
    }
}

forward_ops!(MultiLaurent);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, rat};

    fn z(i: usize) -> MultiLaurent {
        MultiLaurent::var(3, i)
    }

    #[test]
    fn canonical_after_cancellation() {
        let a = &z(0) + &z(1);
        let b = &a - &z(1);
        assert_eq!(b, z(0));
        assert!((&a - &a).is_empty());
    }

    #[test]
    fn display_form() {
        let p = &(&z(0).scaled(&int(3)) * &MultiLaurent::var_pow(3, 1, -1)) - &MultiLaurent::one(3);
        assert_eq!(p.to_string(), "3*z1*z2^-1 - 1");
    }

    #[test]
    fn division_recovers_factor() {
        let a = &(&z(0) + &z(1)) + &MultiLaurent::var_pow(3, 2, -2);
        let b = &(&z(0) * &z(1)) - &MultiLaurent::constant(3, int(2));
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&b).unwrap(), a);
        assert_eq!(prod.exact_div(&a).unwrap(), b);
    }

    #[test]
    fn inexact_division_is_reported() {
        let a = &z(0) + &z(1);
        let b = &z(0) - &z(1);
        assert!(matches!(a.exact_div(&b), Err(Error::InexactDivision(_))));
        assert!(matches!(
            z(0).exact_div(&z(0).scaled(&int(2))),
            Err(Error::InexactDivision(_))
        ));
        assert_eq!(
            a.exact_div(&MultiLaurent::zero(3)),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn evaluation() {
        let p = &MultiLaurent::var_pow(3, 0, 2) + &MultiLaurent::var_pow(3, 2, -1);
        assert_eq!(
            p.eval(&[rat(1, 2), rat(5, 1), rat(3, 1)]).unwrap(),
            rat(7, 12)
        );
        assert!(p.eval(&[rat(1, 2), rat(5, 1), rat(0, 1)]).is_err());
    }
}
