use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::ring::{Int, Rat, Ring};
use crate::error::{Error, Result};

/// Truncated power series `c0 + c1 x + ... + cK x^K + O(x^(K+1))` over the rationals.
///
/// There is deliberately no `PartialEq`: comparing series of different
/// orders is refused through [`Series::try_eq`].
#[derive(Clone)]
pub struct Series {
    coeffs: Vec<Rat>,
}

impl Series {
    /// Pads with zeros or truncates so that exactly `order + 1` coefficients are kept.
    pub fn new(mut coeffs: Vec<Rat>, order: usize) -> Self {
        coeffs.resize(order + 1, Rat::zero());
        Series { coeffs }
    }

    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|c| Rat::from_integer(Int::from(*c)))
                .collect(),
            order,
        )
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![Rat::one()], order)
    }

    pub fn constant(c: Rat, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    /// The formal variable `x`.
    pub fn x(order: usize) -> Self {
        Self::monomial(Rat::one(), 1, order)
    }

    pub fn monomial(c: Rat, exp: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exp <= order {
            s.coeffs[exp] = c;
        }
        s
    }

    /// `1/(1 - x)`.
    pub fn geometric(order: usize) -> Self {
        Self::new(vec![Rat::one(); order + 1], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &Rat {
        &self.coeffs[k]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(
            order <= self.order(),
            "cannot raise truncation order {} to {order}",
            self.order()
        );
        Self::new(self.coeffs[..=order].to_vec(), order)
    }

    /// Coefficientwise equality; series of different orders are not comparable.
    pub fn try_eq(&self, other: &Self) -> Result<bool> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch(self.order(), other.order()));
        }
        Ok(self.coeffs == other.coeffs)
    }

    pub fn scale(&self, k: &Rat) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&Rat, &Rat) -> Rat) -> Self {
        let order = self.order().min(rhs.order());
        Series {
            coeffs: (0..=order)
                .map(|i| f(&self.coeffs[i], &rhs.coeffs[i]))
                .collect(),
        }
    }

    fn mul_impl(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        Series {
            coeffs: trunc_mul(&self.coeffs[..=order], &rhs.coeffs[..=order], order),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        Series {
            coeffs: trunc_pow(&self.coeffs, e, self.order()),
        }
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::Domain(
                "series with zero constant term is not invertible".into(),
            ));
        }
        let inv0 = a0.recip();
        let mut out: Vec<Rat> = Vec::with_capacity(self.coeffs.len());
        out.push(inv0.clone());
        for n in 1..=self.order() {
            let mut acc = Rat::zero();
            for k in 1..=n {
                acc += &self.coeffs[k] * &out[n - k];
            }
            out.push(-acc * &inv0);
        }
        Ok(Series { coeffs: out })
    }

    /// The square root with constant term 1, by Newton iteration `t <- (t + s/t)/2`,
    /// which doubles the number of correct coefficients per step.
    pub fn sqrt(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::Domain(format!(
                "square root needs constant term 1, got {}",
                self.coeffs[0]
            )));
        }
        let target = self.order();
        let half = Rat::new(Int::one(), Int::from(2));
        let mut t = Series::one(0);
        let mut prec = 0usize;
        while prec < target {
            prec = (2 * prec + 1).min(target);
            let t_ext = Series::new(t.coeffs.clone(), prec);
            let quotient = &self.truncate(prec) * &t_ext.inverse()?;
            t = (&t_ext + &quotient).scale(&half);
        }
        Ok(t)
    }

    /// `self(inner(x))`; the inner series must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::Domain(
                "inner series of a composition must have zero constant term".into(),
            ));
        }
        let order = self.order().min(inner.order());
        let g = inner.truncate(order);
        let mut acc = Series::zero(order);
        for c in self.coeffs[..=order].iter().rev() {
            acc = &acc * &g;
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    /// Multiplies by `x^d`; the truncation order grows by `d`.
    pub fn shift_up(&self, d: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); d];
        coeffs.extend(self.coeffs.iter().cloned());
        Series { coeffs }
    }

    /// Divides by `x^d`; the first `d` coefficients must vanish.
    pub fn shift_down(&self, d: usize) -> Result<Self> {
        if d > self.order() || self.coeffs[..d].iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision(format!("({self}) / x^{d}")));
        }
        Ok(Series {
            coeffs: self.coeffs[d..].to_vec(),
        })
    }

    /// `f(x^k)`; coefficients are known exactly through `x^(k*(K+1) - 1)`.
    pub fn substitute_power(&self, k: usize) -> Self {
        assert!(k >= 1);
        let order = k * (self.order() + 1) - 1;
        let mut out = Series::zero(order);
        for (i, c) in self.coeffs.iter().enumerate() {
            out.coeffs[i * k] = c.clone();
        }
        out
    }
}

/// Truncated product of coefficient slices: the first `order + 1` coefficients of `a * b`.
///
/// Missing coefficients are treated as zero; both slices must be nonempty.
pub fn trunc_mul<T: Ring>(a: &[T], b: &[T], order: usize) -> Vec<T> {
    let zero = a[0].zero_like();
    let mut out = vec![zero; order + 1];
    for (i, ai) in a.iter().enumerate().take(order + 1) {
        if ai.is_zero_elem() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(order + 1 - i) {
            if !bj.is_zero_elem() {
                out[i + j] = out[i + j].plus(&ai.times(bj));
            }
        }
    }
    out
}

/// Truncated power `a^e` of a coefficient slice.
pub fn trunc_pow<T: Ring>(a: &[T], mut e: u32, order: usize) -> Vec<T> {
    let mut acc = vec![a[0].one_like()];
    let mut base: Vec<T> = a.iter().take(order + 1).cloned().collect();
    while e > 0 {
        if e & 1 == 1 {
            acc = trunc_mul(&acc, &base, order);
        }
        e >>= 1;
        if e > 0 {
            base = trunc_mul(&base, &base, order);
        }
    }
    acc.resize(order + 1, a[0].zero_like());
    acc
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
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
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}*x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{mag}*x^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series({self})")
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: Self) -> Series {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: Self) -> Series {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: Self) -> Series {
        self.mul_impl(rhs)
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}
