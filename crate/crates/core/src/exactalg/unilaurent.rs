use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::ring::{rat_pow, sign_str, Int, Rat, Ring};
use crate::error::{Error, Result};

/// Laurent polynomial in one named variable with integer coefficients.
///
/// Canonical form: no zero coefficients are stored, so structural equality is
/// polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniLaurent {
    var: char,
    terms: BTreeMap<i64, Int>,
}

impl UniLaurent {
    pub fn zero(var: char) -> Self {
        UniLaurent {
            var,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(var: char) -> Self {
        Self::constant(var, BigInt::one())
    }

    pub fn constant(var: char, c: Int) -> Self {
        Self::monomial(var, c, 0)
    }

    pub fn monomial(var: char, c: Int, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        UniLaurent { var, terms }
    }

    /// `var^exp`.
    pub fn power_of_var(var: char, exp: i64) -> Self {
        Self::monomial(var, BigInt::one(), exp)
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents are summed.
    pub fn from_terms<I: IntoIterator<Item = (i64, Int)>>(var: char, terms: I) -> Self {
        let mut out = Self::zero(var);
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    pub fn var(&self) -> char {
        self.var
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Int)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> Int {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    fn add_term(&mut self, exp: i64, c: Int) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// Multiplies by `var^by`.
    pub fn shift(&self, by: i64) -> Self {
        UniLaurent {
            var: self.var,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e + by, c.clone()))
                .collect(),
        }
    }

    pub fn eval(&self, at: &Rat) -> Result<Rat> {
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            acc += rat_pow(at, *e)? * Rat::from_integer(c.clone());
        }
        Ok(acc)
    }

    fn check_var(&self, other: &Self) {
        assert_eq!(
            self.var, other.var,
            "Laurent polynomials in different variables"
        );
    }

    fn mul_impl(&self, other: &Self) -> Self {
        self.check_var(other);
        let mut out = Self::zero(self.var);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }

    fn div_impl(&self, divisor: &Self) -> Result<Self> {
        self.check_var(divisor);
        if divisor.is_empty() {
            return Err(Error::DivisionByZero);
        }
        if self.is_empty() {
            return Ok(self.clone());
        }
        // Strip the monomial parts; both become polynomials with nonzero constant term.
        let a_low = self.min_exp().unwrap();
        let b_low = divisor.min_exp().unwrap();
        let a: Vec<Int> = dense(self, a_low);
        let b: Vec<Int> = dense(divisor, b_low);
        if a.len() < b.len() {
            return Err(Error::InexactDivision(format!("({self}) / ({divisor})")));
        }
        let lead = b.last().unwrap().clone();
        let mut rem = a;
        let qlen = rem.len() - b.len() + 1;
        let mut quot = vec![Int::zero(); qlen];
        for i in (0..qlen).rev() {
            let top = rem[i + b.len() - 1].clone();
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision(format!("({self}) / ({divisor})")));
            }
            for (j, bj) in b.iter().enumerate() {
                rem[i + j] -= &q * bj;
            }
            quot[i] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision(format!("({self}) / ({divisor})")));
        }
        Ok(Self::from_terms(
            self.var,
            quot.into_iter()
                .enumerate()
                .map(|(i, c)| (i as i64 + a_low - b_low, c)),
        ))
    }
}

fn dense(p: &UniLaurent, low: i64) -> Vec<Int> {
    let high = p.max_exp().unwrap();
    let mut v = vec![Int::zero(); (high - low + 1) as usize];
    for (e, c) in &p.terms {
        v[(e - low) as usize] = c.clone();
    }
    v
}

impl fmt::Display for UniLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let (sign, mag) = sign_str(c);
            if i == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            match (*e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "{}", self.var)?,
                (1, false) => write!(f, "{mag}*{}", self.var)?,
                (e, true) => write!(f, "{}^{e}", self.var)?,
                (e, false) => write!(f, "{mag}*{}^{e}", self.var)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniLaurent({self})")
    }
}

impl Ring for UniLaurent {
    fn zero_like(&self) -> Self {
        Self::zero(self.var)
    }
    fn one_like(&self) -> Self {
        Self::one(self.var)
    }
    fn is_zero_elem(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.check_var(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.plus(&rhs.negated())
    }
    fn times(&self, rhs: &Self) -> Self {
        self.mul_impl(rhs)
    }
    fn negated(&self) -> Self {
        UniLaurent {
            var: self.var,
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
    fn scaled(&self, k: &Int) -> Self {
        if k.is_zero() {
            return self.zero_like();
        }
        UniLaurent {
            var: self.var,
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }
    fn exact_div(&self, rhs: &Self) -> Result<Self> {
        self.div_impl(rhs)
    }
}

macro_rules! forward_ops {
    ($t:ty) => {
        impl Add for &$t {
            type Output = $t;
            fn add(self, rhs: Self) -> $t {
                self.plus(rhs)
            }
        }
        impl Sub for &$t {
            type Output = $t;
            fn sub(self, rhs: Self) -> $t {
                self.minus(rhs)
            }
        }
        impl Mul for &$t {
            type Output = $t;
            fn mul(self, rhs: Self) -> $t {
                self.times(rhs)
            }
        }
        impl Add for $t {
            type Output = $t;
            fn add(self, rhs: Self) -> $t {
                self.plus(&rhs)
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, rhs: Self) -> $t {
                self.minus(&rhs)
            }
        }
        impl Mul for $t {
            type Output = $t;
            fn mul(self, rhs: Self) -> $t {
                self.times(&rhs)
            }
        }
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                self.negated()
            }
        }
        impl Neg for &$t {
            type Output = $t;
            fn neg(self) -> $t {
                self.negated()
            }
        }
    };
}
pub(crate) use forward_ops;

forward_ops!(UniLaurent);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, rat};

    fn q(e: i64) -> UniLaurent {
        UniLaurent::power_of_var('q', e)
    }

    #[test]
    fn difference_of_squares() {
        let a = &q(1) + &q(-1);
        let b = &q(1) - &q(-1);
        assert_eq!(&a * &b, &q(2) - &q(-2));
    }

    #[test]
    fn display_is_ascending() {
        let p = UniLaurent::from_terms('q', [(2, int(-3)), (-1, int(1)), (0, int(2)), (1, int(1))]);
        assert_eq!(p.to_string(), "q^-1 + 2 + q - 3*q^2");
        assert_eq!(UniLaurent::zero('q').to_string(), "0");
    }

    #[test]
    fn exact_division_of_geometric_sums() {
        // (1 - q^6) / (1 - q^2) = 1 + q^2 + q^4
        let num = &UniLaurent::one('q') - &q(6);
        let den = &UniLaurent::one('q') - &q(2);
        let expected = &(&UniLaurent::one('q') + &q(2)) + &q(4);
        assert_eq!(num.exact_div(&den).unwrap(), expected);
        assert_eq!(q(-3).exact_div(&q(2)).unwrap(), q(-5));
        assert!(matches!(
            num.exact_div(&(&q(1) + &q(0).scaled(&int(3)))),
            Err(Error::InexactDivision(_))
        ));
        assert_eq!(
            num.exact_div(&UniLaurent::zero('q')),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn evaluation() {
        let p = &q(2) + &q(-1);
        assert_eq!(p.eval(&rat(1, 2)).unwrap(), rat(9, 4));
        assert!(p.eval(&rat(0, 1)).is_err());
    }
}
