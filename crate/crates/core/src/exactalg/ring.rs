use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(v: i64) -> Int {
    BigInt::from(v)
}

pub fn rat(num: i64, den: i64) -> Rat {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// A commutative ring with exact equality.
///
/// Zero and one are produced from an existing value because some domains carry
/// context (the variable count of a [`super::MultiLaurent`], the cyclotomic field
/// of a [`crate::cyclotomic::CycInt`]).
///
/// `exact_div` returns the unique `q` with `q * rhs == self`, or an error when
/// no such `q` exists in the ring.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    fn scaled(&self, k: &Int) -> Self;
    fn exact_div(&self, rhs: &Self) -> Result<Self>;

    fn from_int_like(&self, k: &Int) -> Self {
        self.one_like().scaled(k)
    }

    fn is_one_elem(&self) -> bool {
        *self == self.one_like()
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.times(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.times(&base);
            }
        }
        acc
    }

    fn inverse(&self) -> Result<Self> {
        self.one_like().exact_div(self)
    }
}

impl Ring for BigInt {
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn scaled(&self, k: &Int) -> Self {
        self * k
    }
    fn exact_div(&self, rhs: &Self) -> Result<Self> {
        if Zero::is_zero(rhs) {
            return Err(Error::DivisionByZero);
        }
        let (q, r) = self.div_rem(rhs);
        if !Zero::is_zero(&r) {
            return Err(Error::InexactDivision(format!("{self} / {rhs}")));
        }
        Ok(q)
    }
}

impl Ring for BigRational {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn scaled(&self, k: &Int) -> Self {
        self * BigRational::from_integer(k.clone())
    }
    fn exact_div(&self, rhs: &Self) -> Result<Self> {
        if Zero::is_zero(rhs) {
            return Err(Error::DivisionByZero);
        }
        Ok(self / rhs)
    }
}

/// `a^e` for a possibly negative exponent; zero to a negative power is an error.
pub(crate) fn rat_pow(a: &Rat, e: i64) -> Result<Rat> {
    if e >= 0 {
        return Ok(Ring::pow(a, e as u32));
    }
    if Zero::is_zero(a) {
        return Err(Error::Domain(
            "zero substituted into a negative exponent".into(),
        ));
    }
    Ok(Ring::pow(&a.recip(), e.unsigned_abs() as u32))
}

pub(crate) fn sign_str(c: &Int) -> (&'static str, BigInt) {
    if c.is_negative() {
        ("-", -c)
    } else {
        ("+", c.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_is_canonical() {
        let r = rat(6, -4);
        assert_eq!(r.numer(), &int(-3));
        assert_eq!(r.denom(), &int(2));
        assert_eq!(rat(0, 5), Rat::zero());
        assert_eq!(rat(0, 5).denom(), &int(1));
    }

    #[test]
    fn integer_exact_division() {
        assert_eq!(int(12).exact_div(&int(-4)).unwrap(), int(-3));
        assert!(matches!(
            int(7).exact_div(&int(2)),
            Err(Error::InexactDivision(_))
        ));
        assert_eq!(int(7).exact_div(&int(0)), Err(Error::DivisionByZero));
    }

    #[test]
    fn pow_by_squaring() {
        assert_eq!(Ring::pow(&int(3), 13), int(1_594_323));
        assert_eq!(Ring::pow(&rat(1, 2), 0), Rat::one());
        assert_eq!(rat_pow(&rat(2, 3), -2).unwrap(), rat(9, 4));
        assert!(rat_pow(&Rat::zero(), -1).is_err());
    }
}
