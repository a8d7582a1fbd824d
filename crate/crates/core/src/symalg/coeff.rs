use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{fmt_rational, Rational};

/// Exact field coefficients for [`super::GradedPolynomial`].
pub trait Coeff: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero_value() -> Self;
    fn one_value() -> Self;
    fn vanishes(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn from_rational(r: &Rational) -> Self;
    /// `None` only for zero.
    fn inverse(&self) -> Option<Self>;

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }

    fn power(&self, e: u32) -> Self {
        (0..e).fold(Self::one_value(), |acc, _| acc.times(self))
    }
}

impl Coeff for Rational {
    fn zero_value() -> Self {
        Zero::zero()
    }
    fn one_value() -> Self {
        One::one()
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn inverse(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
}

/// `a + b·√D` for a squarefree integer `D ≠ 1`. Values with `b = 0` are
/// rational and combine with any radicand; mixing two different radicands
/// with nonzero `b` panics, since callers only ever work in one field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadNum {
    a: Rational,
    b: Rational,
    d: BigInt,
}

impl QuadNum {
    pub fn new(a: Rational, b: Rational, d: BigInt) -> Result<Self> {
        if d.is_zero() || d.is_one() || !squarefree(&d) {
            return Err(Error::Precondition(format!("radicand {d} must be squarefree and not 0 or 1")));
        }
        Ok(QuadNum { a, b, d }.canon())
    }

    pub fn rational(a: Rational) -> Self {
        QuadNum { a, b: Zero::zero(), d: BigInt::zero() }
    }

    /// `√D` itself.
    pub fn sqrt(d: BigInt) -> Result<Self> {
        QuadNum::new(Zero::zero(), One::one(), d)
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn irrational_part(&self) -> &Rational {
        &self.b
    }

    pub fn radicand(&self) -> Option<&BigInt> {
        (!self.b.is_zero()).then_some(&self.d)
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.b.is_zero().then(|| self.a.clone())
    }

    pub fn conj(&self) -> Self {
        QuadNum { a: self.a.clone(), b: -&self.b, d: self.d.clone() }
    }

    /// `a² − D b²`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - Rational::from_integer(self.d.clone()) * &self.b * &self.b
    }

    fn canon(mut self) -> Self {
        if self.b.is_zero() {
            self.d = BigInt::zero();
        }
        self
    }

    fn radicand_with(&self, other: &Self) -> BigInt {
        match (self.b.is_zero(), other.b.is_zero()) {
            (true, _) => other.d.clone(),
            (_, true) => self.d.clone(),
            _ => {
                assert_eq!(self.d, other.d, "quadratic numbers from different fields");
                self.d.clone()
            }
        }
    }
}

fn squarefree(d: &BigInt) -> bool {
    let n = d.abs();
    let mut k = BigInt::from(2);
    while &k * &k <= n {
        if (&n % (&k * &k)).is_zero() {
            return false;
        }
        k += 1;
    }
    true
}

impl Coeff for QuadNum {
    fn zero_value() -> Self {
        QuadNum::rational(Zero::zero())
    }
    fn one_value() -> Self {
        QuadNum::rational(One::one())
    }
    fn vanishes(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn plus(&self, o: &Self) -> Self {
        let d = self.radicand_with(o);
        QuadNum { a: &self.a + &o.a, b: &self.b + &o.b, d }.canon()
    }
    fn times(&self, o: &Self) -> Self {
        let d = self.radicand_with(o);
        let dr = Rational::from_integer(d.clone());
        QuadNum { a: &self.a * &o.a + dr * &self.b * &o.b, b: &self.a * &o.b + &self.b * &o.a, d }.canon()
    }
    fn negated(&self) -> Self {
        QuadNum { a: -&self.a, b: -&self.b, d: self.d.clone() }
    }
    fn from_rational(r: &Rational) -> Self {
        QuadNum::rational(r.clone())
    }
    fn inverse(&self) -> Option<Self> {
        if self.vanishes() {
            return None;
        }
        // The norm vanishes only at zero because D is not a square.
        let n = self.norm();
        Some(QuadNum { a: &self.a / &n, b: -&self.b / &n, d: self.d.clone() }.canon())
    }
}

impl fmt::Display for QuadNum {
    /// `a`, `b*sqrt(D)` or `(a + b*sqrt(D))`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", fmt_rational(&self.a));
        }
        let r = format!("{}*sqrt({})", fmt_rational(&self.b), self.d);
        if self.a.is_zero() {
            write!(f, "{r}")
        } else {
            write!(f, "({} + {r})", fmt_rational(&self.a))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, ratio};

    #[test]
    fn field_arithmetic() {
        let s = QuadNum::sqrt(BigInt::from(-3)).unwrap();
        assert_eq!(s.times(&s), QuadNum::rational(rat(-3)));
        let x = QuadNum::new(ratio(1, 2), ratio(3, 2), BigInt::from(-3)).unwrap();
        assert_eq!(x.times(&x.inverse().unwrap()), QuadNum::one_value());
        assert_eq!(x.plus(&x.conj()).to_rational(), Some(rat(1)));
        assert!(QuadNum::new(rat(1), rat(1), BigInt::from(8)).is_err());
    }

    #[test]
    fn rationals_mix_with_any_field() {
        let s = QuadNum::sqrt(BigInt::from(5)).unwrap();
        let r = QuadNum::rational(rat(2));
        assert_eq!(r.times(&s).radicand(), Some(&BigInt::from(5)));
        assert_eq!(s.minus(&s), QuadNum::zero_value());
    }
}
