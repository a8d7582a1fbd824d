use std::fmt;

use num_traits::{One, Zero};

use super::{fmt_rational, parse_rational, Rational, UniPoly};
use crate::error::{Error, Result};

/// `F(u, v) = sum_i coefficients[i] * u^(n-i) * v^i` with `n = degree`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BinaryForm {
    coefficients: Vec<Rational>,
}

/// A point `[u : v]` of the projective line, stored as the ratio `u / v`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum ProjPoint {
    Finite(Rational),
    Infinity,
}

impl ProjPoint {
    pub fn from_coords(u: &Rational, v: &Rational) -> Option<ProjPoint> {
        if v.is_zero() {
            (!u.is_zero()).then_some(ProjPoint::Infinity)
        } else {
            Some(ProjPoint::Finite(u / v))
        }
    }

    /// Homogeneous coordinates `(u, v)`.
    pub fn coords(&self) -> (Rational, Rational) {
        match self {
            ProjPoint::Finite(r) => (r.clone(), Rational::one()),
            ProjPoint::Infinity => (Rational::one(), Rational::zero()),
        }
    }

    /// Accepts `inf`, `∞`, or a rational.
    pub fn parse(s: &str) -> Result<ProjPoint> {
        match s.trim() {
            "inf" | "∞" | "infinity" => Ok(ProjPoint::Infinity),
            other => parse_rational(other).map(ProjPoint::Finite),
        }
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjPoint::Finite(r) => write!(f, "{}", fmt_rational(r)),
            ProjPoint::Infinity => write!(f, "inf"),
        }
    }
}

impl BinaryForm {
    /// Panics on an empty coefficient list.
    pub fn new(coefficients: Vec<Rational>) -> Self {
        assert!(!coefficients.is_empty(), "a binary form needs degree + 1 coefficients");
        BinaryForm { coefficients }
    }

    pub fn from_i64(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&v| super::rat(v)).collect())
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(Zero::is_zero)
    }

    pub fn eval(&self, u: &Rational, v: &Rational) -> Rational {
        let n = self.degree();
        let mut acc = Rational::zero();
        for (i, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            acc += c * num_traits::pow(u.clone(), n - i) * num_traits::pow(v.clone(), i);
        }
        acc
    }

    pub fn mul(&self, other: &BinaryForm) -> BinaryForm {
        let mut out = vec![Rational::zero(); self.coefficients.len() + other.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, b) in other.coefficients.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        BinaryForm::new(out)
    }

    /// `F(u, 1)` as a polynomial in `u`.
    pub fn dehomogenize(&self) -> UniPoly {
        UniPoly::new(self.coefficients.iter().rev().cloned().collect())
    }

    /// Multiplicity of the root `[1 : 0]`, i.e. the number of leading zero coefficients.
    pub fn multiplicity_at_infinity(&self) -> usize {
        self.coefficients.iter().take_while(|c| c.is_zero()).count()
    }

    /// Distinct roots defined over `Q`, finite ones by height then value, `inf` last.
    pub fn rational_roots(&self) -> Vec<ProjPoint> {
        let mut out: Vec<ProjPoint> = self.dehomogenize().rational_roots().into_iter().map(ProjPoint::Finite).collect();
        if self.multiplicity_at_infinity() > 0 && !self.is_zero() {
            out.push(ProjPoint::Infinity);
        }
        out
    }
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.coefficients.iter().map(fmt_rational).collect();
        write!(f, "[{}]", c.join(", "))
    }
}

/// `(isSquarefree, distinctProjectiveRoots)` over the algebraic closure.
pub fn squarefree_and_root_count(b: &BinaryForm) -> Result<(bool, usize)> {
    if b.is_zero() {
        return Err(Error::Precondition("the zero binary form has no root count".into()));
    }
    let p = b.dehomogenize();
    let at_inf = b.multiplicity_at_infinity();
    let finite = p.squarefree_part().degree().unwrap_or(0);
    let roots = finite + usize::from(at_inf > 0);
    Ok((p.is_squarefree() && at_inf <= 1, roots))
}

#[cfg(test)]
mod tests {
    use super::super::rat;
    use super::*;

    #[test]
    fn spec_examples() {
        // w^3
        assert_eq!(squarefree_and_root_count(&BinaryForm::from_i64(&[1, 0, 0, 0])).unwrap(), (false, 1));
        // w^3 + t^3
        assert_eq!(squarefree_and_root_count(&BinaryForm::from_i64(&[1, 0, 0, 1])).unwrap(), (true, 3));
        // w t (w - t) = w^2 t - w t^2 in (w, t)
        assert_eq!(squarefree_and_root_count(&BinaryForm::from_i64(&[0, 1, -1, 0])).unwrap(), (true, 3));
        assert!(squarefree_and_root_count(&BinaryForm::from_i64(&[0, 0])).is_err());
    }

    #[test]
    fn derivative_oracle_for_w3_plus_t3() {
        // F(u,1) = u^3 + 1, F' = 3u^2: the only common factor candidate is u, and F(0) = 1.
        let p = BinaryForm::from_i64(&[1, 0, 0, 1]).dehomogenize();
        assert_eq!(p.gcd(&p.derivative()).degree(), Some(0));
    }

    #[test]
    fn double_root_at_infinity() {
        // v^2 (u - v): [1:0] twice
        let b = BinaryForm::from_i64(&[0, 0, 1, -1]);
        assert_eq!(squarefree_and_root_count(&b).unwrap(), (false, 2));
    }

    #[test]
    fn rational_roots_include_infinity() {
        let b = BinaryForm::from_i64(&[0, 1, -1, 0]);
        assert_eq!(b.rational_roots(), vec![ProjPoint::Finite(rat(0)), ProjPoint::Finite(rat(1)), ProjPoint::Infinity]);
    }

    #[test]
    fn point_parsing() {
        assert_eq!(ProjPoint::parse("inf").unwrap(), ProjPoint::Infinity);
        assert_eq!(ProjPoint::parse("-1/2").unwrap().to_string(), "-1/2");
    }
}
