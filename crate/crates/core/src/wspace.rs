//! Weighted projective 4-space `P(a1,...,a5)`: weight systems, monomials and
//! their enumeration.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const NVARS: usize = 5;
pub const VAR_NAMES: [&str; NVARS] = ["x", "y", "z", "t", "w"];

/// Five sorted weights and a degree `d`; the index is `I = sum(a) - d`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightSystem {
    weights: [u32; NVARS],
    degree: u32,
}

impl WeightSystem {
    /// Weights must be positive and ascending; the degree positive.
    pub fn new(weights: [u32; NVARS], degree: u32) -> Result<Self> {
        if weights.contains(&0) || degree == 0 {
            return Err(Error::Usage(format!("weights and degree must be positive: {weights:?}, {degree}")));
        }
        if weights.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Usage(format!("weights must be ascending: {weights:?}")));
        }
        Ok(WeightSystem { weights, degree })
    }

    /// Sorts the weights first.
    pub fn sorted(mut weights: [u32; NVARS], degree: u32) -> Result<Self> {
        weights.sort_unstable();
        Self::new(weights, degree)
    }

    /// From `(a1,...,a5,d)` or `(a1,...,a5,d,I)`; a supplied `I` must agree.
    pub fn from_septuple(values: &[u32]) -> Result<Self> {
        match values {
            [a @ .., d] if a.len() == NVARS => Self::new(a.try_into().unwrap(), *d),
            [a @ .., d, i] if a.len() == NVARS => {
                let ws = Self::new(a.try_into().unwrap(), *d)?;
                if ws.index() != i64::from(*i) {
                    return Err(Error::Usage(format!("index {i} does not match sum(a) - d = {}", ws.index())));
                }
                Ok(ws)
            }
            _ => Err(Error::Usage(format!("a septuple needs 6 or 7 integers, got {}", values.len()))),
        }
    }

    pub fn weights(&self) -> [u32; NVARS] {
        self.weights
    }

    pub fn weight(&self, i: usize) -> u32 {
        self.weights[i]
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn weight_sum(&self) -> u32 {
        self.weights.iter().sum()
    }

    /// Fano index; may be `<= 0` for non-Fano input.
    pub fn index(&self) -> i64 {
        i64::from(self.weight_sum()) - i64::from(self.degree)
    }

    /// Same weights, another degree.
    pub fn with_degree(&self, degree: u32) -> WeightSystem {
        WeightSystem { weights: self.weights, degree }
    }

    pub fn septuple(&self) -> [i64; 7] {
        let a = self.weights.map(i64::from);
        [a[0], a[1], a[2], a[3], a[4], i64::from(self.degree), self.index()]
    }
}

impl fmt::Display for WeightSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.septuple().map(|v| v.to_string());
        write!(f, "({})", s.join(","))
    }
}

/// Comma separated list of non-negative integers, e.g. `1,2,3,3,4`.
pub fn parse_uint_list(s: &str) -> Result<Vec<u32>> {
    s.split(',')
        .map(|p| p.trim().parse::<u32>().map_err(|_| Error::Parse(format!("not a non-negative integer: {p:?}"))))
        .collect()
}

/// Exponent vector in `x, y, z, t, w`.
///
/// Ordered so that iteration runs graded-lexicographically with `x` first:
/// a larger `x` exponent sorts earlier, then `y`, and so on.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
pub struct Monomial(pub [u32; NVARS]);

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other.0.cmp(&self.0)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NVARS]);

    pub fn var(i: usize) -> Monomial {
        let mut e = [0; NVARS];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> [u32; NVARS] {
        self.0
    }

    pub fn weighted_degree(&self, ws: &WeightSystem) -> u32 {
        self.0.iter().zip(ws.weights.iter()).map(|(e, a)| e * a).sum()
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a += b;
        }
        Monomial(e)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides it.
    pub fn quotient(&self, other: &Monomial) -> Option<Monomial> {
        self.divides(other).then(|| {
            let mut e = other.0;
            for (a, b) in e.iter_mut().zip(self.0.iter()) {
                *a -= b;
            }
            Monomial(e)
        })
    }

    /// Bitmask of the variables that occur.
    pub fn support_mask(&self) -> u8 {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).fold(0, |m, (i, _)| m | (1 << i))
    }

    pub fn uses_only(&self, mask: u8) -> bool {
        self.support_mask() & !mask == 0
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.0[var]
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .zip(VAR_NAMES)
            .filter(|(&e, _)| e > 0)
            .map(|(&e, v)| if e == 1 { v.to_string() } else { format!("{v}^{e}") })
            .collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

impl FromStr for Monomial {
    type Err = Error;

    /// Grammar: `1` or `factor ('*' factor)*` with `factor = var ('^' uint)?`;
    /// repeated variables accumulate.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" {
            return Ok(Monomial::ONE);
        }
        let bad = || Error::Parse(format!("not a monomial: {s:?}"));
        if s.is_empty() {
            return Err(bad());
        }
        let mut e = [0u32; NVARS];
        for factor in s.split('*') {
            let (v, p) = match factor.trim().split_once('^') {
                Some((v, p)) => (v.trim(), p.trim().parse::<u32>().map_err(|_| bad())?),
                None => (factor.trim(), 1),
            };
            let i = VAR_NAMES.iter().position(|n| *n == v).ok_or_else(bad)?;
            e[i] += p;
        }
        Ok(Monomial(e))
    }
}

/// All monomials of weighted degree `k`, in canonical order.
pub fn enumerate_monomials(ws: &WeightSystem, k: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = [0u32; NVARS];
    rec(&ws.weights, 0, k, &mut cur, &mut out);
    out.sort();
    out
}

fn rec(a: &[u32; NVARS], i: usize, rem: u32, cur: &mut [u32; NVARS], out: &mut Vec<Monomial>) {
    if i == NVARS - 1 {
        if rem.is_multiple_of(a[i]) {
            cur[i] = rem / a[i];
            out.push(Monomial(*cur));
        }
        return;
    }
    for e in 0..=rem / a[i] {
        cur[i] = e;
        rec(a, i + 1, rem - e * a[i], cur, out);
    }
    cur[i] = 0;
}

/// `|enumerate_monomials(ws, k)|` by dynamic programming over the weights.
pub fn count_monomials(ws: &WeightSystem, k: u32) -> u64 {
    let k = k as usize;
    let mut ways = vec![0u64; k + 1];
    ways[0] = 1;
    for &a in &ws.weights {
        let a = a as usize;
        for n in a..=k {
            ways[n] += ways[n - a];
        }
    }
    ways[k]
}

/// For each `i`, the other four weights are coprime.
pub fn wps_well_formed(ws: &WeightSystem) -> bool {
    (0..NVARS).all(|i| {
        let g = (0..NVARS).filter(|&j| j != i).fold(0u32, |g, j| g.gcd(&ws.weights[j]));
        g == 1
    })
}

/// Whether `n >= 0` is a non-negative combination of the weights selected by `mask`.
pub fn representable(ws: &WeightSystem, mask: u8, n: i64) -> bool {
    if n < 0 {
        return false;
    }
    let n = n as usize;
    let mut ok = vec![false; n + 1];
    ok[0] = true;
    for i in (0..NVARS).filter(|i| mask & (1 << i) != 0) {
        let a = ws.weights[i] as usize;
        for m in a..=n {
            if ok[m - a] {
                ok[m] = true;
            }
        }
    }
    ok[n]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ws(a: [u32; 5], d: u32) -> WeightSystem {
        WeightSystem::new(a, d).unwrap()
    }

    #[test]
    fn quartic_count() {
        let p4 = ws([1, 1, 1, 1, 1], 4);
        assert_eq!(enumerate_monomials(&p4, 4).len(), 70);
        assert_eq!(count_monomials(&p4, 4), 70);
        assert_eq!(count_monomials(&p4, 0), 1);
    }

    #[test]
    fn family_19_contains_named_monomials() {
        let w = ws([1, 2, 3, 3, 4], 12);
        let m = enumerate_monomials(&w, 12);
        for s in ["w^3", "z*t^3", "y^6", "x^12"] {
            assert!(m.contains(&s.parse().unwrap()), "{s}");
        }
        assert_eq!(m.len() as u64, count_monomials(&w, 12));
        assert_eq!(m.len(), 65);
    }

    #[test]
    fn family_84_contains_table_monomials() {
        let w = ws([1, 7, 8, 9, 12], 36);
        let m = enumerate_monomials(&w, 36);
        for s in ["w^3", "t^4", "z^3*w"] {
            assert!(m.contains(&s.parse().unwrap()), "{s}");
        }
    }

    #[test]
    fn count_agrees_for_family_49() {
        let w = ws([1, 3, 5, 6, 7], 21);
        assert_eq!(count_monomials(&w, 21), enumerate_monomials(&w, 21).len() as u64);
    }

    #[test]
    fn canonical_order_is_x_first() {
        let w = ws([1, 1, 1, 1, 1], 2);
        let m: Vec<String> = enumerate_monomials(&w, 2).iter().map(ToString::to_string).collect();
        assert_eq!(m.first().unwrap(), "x^2");
        assert_eq!(m[1], "x*y");
        assert_eq!(m.last().unwrap(), "w^2");
    }

    #[test]
    fn well_formedness_of_ambient_space() {
        assert!(wps_well_formed(&ws([1, 1, 1, 1, 1], 4)));
        assert!(wps_well_formed(&ws([1, 2, 3, 3, 4], 12)));
        assert!(!wps_well_formed(&ws([1, 2, 2, 4, 4], 8)));
    }

    #[test]
    fn monomial_text_round_trip() {
        for s in ["x^2*y*w", "1", "t", "x^12", "y^3*z^2"] {
            let m: Monomial = s.parse().unwrap();
            assert_eq!(m.to_string(), s);
        }
        assert_eq!("x*x".parse::<Monomial>().unwrap().to_string(), "x^2");
        assert!("q^2".parse::<Monomial>().is_err());
        assert!("".parse::<Monomial>().is_err());
    }

    #[test]
    fn septuple_validation() {
        assert!(WeightSystem::from_septuple(&[1, 2, 3, 3, 4, 12, 1]).is_ok());
        assert!(WeightSystem::from_septuple(&[1, 2, 3, 3, 4, 12, 2]).is_err());
        assert!(WeightSystem::from_septuple(&[2, 1, 3, 3, 4, 12]).is_err());
        assert_eq!(WeightSystem::from_septuple(&[1, 1, 1, 1, 1, 4]).unwrap().index(), 1);
    }

    #[test]
    fn representability() {
        let w = ws([1, 2, 3, 3, 4], 12);
        assert!(representable(&w, 0b01100, 12)); // z, t
        assert!(!representable(&w, 0b00010, 11)); // y only
        assert!(representable(&w, 0, 0));
        assert!(!representable(&w, 0b11111, -1));
    }
}
