use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::exactmath::{fmt_rational, Rational};

/// Polynomial over `Q` in the unknown constants `c_0, c_1, …` of a coordinate
/// change template. Exponent vectors are trimmed of trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ParamPoly {
    terms: BTreeMap<Vec<u32>, Rational>,
}

fn trim(mut e: Vec<u32>) -> Vec<u32> {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

impl ParamPoly {
    pub fn zero() -> Self {
        ParamPoly::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = ParamPoly::zero();
        p.add_term(Vec::new(), c);
        p
    }

    pub fn unknown(i: usize) -> Self {
        let mut e = vec![0; i + 1];
        e[i] = 1;
        let mut p = ParamPoly::zero();
        p.add_term(e, Rational::one());
        p
    }

    fn add_term(&mut self, e: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = trim(e);
        let v = self.terms.entry(e.clone()).or_insert_with(Rational::zero);
        *v += c;
        if v.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Rational> {
        &self.terms
    }

    pub fn add(&self, other: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &ParamPoly) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let n = ea.len().max(eb.len());
                let e = (0..n).map(|i| ea.get(i).unwrap_or(&0) + eb.get(i).unwrap_or(&0)).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    /// `Some(c)` when no unknown occurs.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Vec::new()).cloned(),
            _ => None,
        }
    }

    /// Indices of unknowns that occur.
    pub fn unknowns(&self) -> Vec<usize> {
        let mut out: Vec<usize> =
            self.terms.keys().flat_map(|e| e.iter().enumerate().filter(|(_, &k)| k > 0).map(|(i, _)| i)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    /// Replaces each known unknown by its value.
    pub fn substitute(&self, values: &[Option<Rational>]) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for (e, c) in &self.terms {
            let mut coef = c.clone();
            let mut rest = e.clone();
            for (i, k) in e.iter().enumerate() {
                if *k > 0 {
                    if let Some(Some(v)) = values.get(i) {
                        coef *= num_traits::pow(v.clone(), *k as usize);
                        rest[i] = 0;
                    }
                }
            }
            out.add_term(rest, coef);
        }
        out
    }

    /// For a polynomial of total degree ≤ 1: the coefficients of the unknowns and the constant.
    pub fn linear_parts(&self) -> Option<(BTreeMap<usize, Rational>, Rational)> {
        if self.total_degree() > 1 {
            return None;
        }
        let mut lin = BTreeMap::new();
        let mut constant = Rational::zero();
        for (e, c) in &self.terms {
            match e.iter().position(|&k| k == 1) {
                Some(i) => {
                    lin.insert(i, c.clone());
                }
                None => constant = c.clone(),
            }
        }
        Some((lin, constant))
    }

    /// Coefficients, low to high, when only unknown `i` occurs.
    pub fn univariate_in(&self, i: usize) -> Option<Vec<Rational>> {
        let mut out = Vec::new();
        for (e, c) in &self.terms {
            if e.iter().enumerate().any(|(j, &k)| j != i && k > 0) {
                return None;
            }
            let k = e.get(i).copied().unwrap_or(0) as usize;
            if out.len() <= k {
                out.resize(k + 1, Rational::zero());
            }
            out[k] = c.clone();
        }
        Some(out)
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let vars: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| if k == 1 { format!("c{i}") } else { format!("c{i}^{k}") })
                    .collect();
                if vars.is_empty() {
                    fmt_rational(c)
                } else {
                    format!("{}*{}", fmt_rational(c), vars.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    #[test]
    fn arithmetic_and_partial_evaluation() {
        let c0 = ParamPoly::unknown(0);
        let c1 = ParamPoly::unknown(1);
        let p = c0.mul(&c0).add(&c1.scale(&rat(3))).add(&ParamPoly::constant(rat(-2)));
        assert_eq!(p.unknowns(), vec![0, 1]);
        assert_eq!(p.total_degree(), 2);
        let q = p.substitute(&[None, Some(rat(1))]);
        assert_eq!(q.univariate_in(0), Some(vec![rat(1), rat(0), rat(1)]));
        assert_eq!(p.substitute(&[Some(rat(2)), Some(rat(1))]).as_constant(), Some(rat(5)));
        let (lin, k) = c1.scale(&rat(2)).add(&ParamPoly::constant(rat(7))).linear_parts().unwrap();
        assert_eq!(lin.get(&1), Some(&rat(2)));
        assert_eq!(k, rat(7));
        assert!(p.linear_parts().is_none());
    }
}
