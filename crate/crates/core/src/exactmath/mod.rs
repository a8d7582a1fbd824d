//! Exact integer and rational arithmetic: gcds, Smith normal form, univariate
//! polynomials over `Q` and binary forms.

mod binary;
mod matrix;
mod unipoly;

pub use binary::{squarefree_and_root_count, BinaryForm, ProjPoint};
pub use matrix::{smith_normal_form, IntegerMatrix, SmithForm};
pub use unipoly::UniPoly;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Always reduced, denominator positive (guaranteed by `num_rational`).
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn gcd_tuple(values: &[u64]) -> Result<u64> {
    let (first, rest) = values.split_first().ok_or_else(|| Error::Usage("gcd of an empty list".into()))?;
    Ok(rest.iter().fold(*first, |g, v| g.gcd(v)))
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

/// `max(|p|, q)` for `p/q` in lowest terms.
pub fn height(r: &Rational) -> BigInt {
    let n = r.numer().abs();
    let d = r.denom().clone();
    if n > d {
        n
    } else {
        d
    }
}

/// Accepts `p`, `-p`, `p/q`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

pub fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Least common multiple of all denominators.
pub fn common_denominator<'a>(it: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    it.into_iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd_tuple(&[1, 1, 1, 1]).unwrap(), 1);
        assert_eq!(gcd_tuple(&[2, 2, 4, 4]).unwrap(), 2);
        assert_eq!(gcd_tuple(&[6, 22, 33]).unwrap(), 1);
        assert!(matches!(gcd_tuple(&[]), Err(Error::Usage(_))));
    }

    #[test]
    fn euclid_oracle_for_6_22_33() {
        // gcd(6,22) = gcd(22 mod 6 = 4, 6) = gcd(6 mod 4 = 2, 4) = 2; gcd(2,33) = 1
        let g1 = gcd_tuple(&[6, 22]).unwrap();
        assert_eq!(g1, 2);
        assert_eq!(gcd_tuple(&[g1, 33]).unwrap(), 1);
    }

    #[test]
    fn rational_parsing_round_trip() {
        for s in ["0", "-3/2", "7", "4/6"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(parse_rational(&fmt_rational(&r)).unwrap(), r);
        }
        assert_eq!(fmt_rational(&parse_rational("4/6").unwrap()), "2/3");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn height_prefers_small() {
        assert_eq!(height(&ratio(-3, 2)), BigInt::from(3));
        assert_eq!(height(&ratio(1, 5)), BigInt::from(5));
        assert_eq!(height(&rat(0)), BigInt::from(1));
    }
}
