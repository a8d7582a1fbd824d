use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{common_denominator, fmt_rational, height, Rational};

/// Dense univariate polynomial over `Q`; `coeffs[i]` multiplies `u^i`.
/// Trailing zeros are never stored, so the zero polynomial is empty.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_i64(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&v| super::rat(v)).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, u: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * u + c)
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * Rational::from_integer(BigInt::from(i))).collect(),
        )
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = Rational::zero();
        UniPoly::new((0..n).map(|i| self.coeffs.get(i).unwrap_or(&z) + other.coeffs.get(i).unwrap_or(&z)).collect())
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn neg(&self) -> UniPoly {
        self.scale(&-Rational::one())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    /// Panics on division by zero.
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead = d.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (UniPoly::zero(), self.clone());
        }
        let mut q = vec![Rational::zero(); rem.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &rem[k + dd] / &lead;
            if !c.is_zero() {
                for (i, b) in d.coeffs.iter().enumerate() {
                    rem[k + i] -= &c * b;
                }
            }
            q[k] = c;
        }
        rem.truncate(dd);
        (UniPoly::new(q), UniPoly::new(rem))
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => UniPoly::zero(),
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree().unwrap_or(0) == 0
    }

    /// `p / gcd(p, p')`, monic.
    pub fn squarefree_part(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Primitive integer polynomial with the same roots.
    pub fn to_primitive_integer(&self) -> Vec<BigInt> {
        let den = common_denominator(self.coeffs.iter());
        let ints: Vec<BigInt> =
            self.coeffs.iter().map(|c| (c * Rational::from_integer(den.clone())).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        if g.is_zero() {
            return ints;
        }
        ints.into_iter().map(|c| c / &g).collect()
    }

    /// All distinct rational roots, ordered by height, then absolute value, then value.
    ///
    /// Exact: the squarefree part is scaled to a monic integer polynomial,
    /// whose rational roots are integers; those are isolated by Sturm
    /// sequences and integer bisection.
    pub fn rational_roots(&self) -> Vec<Rational> {
        let mut roots = Vec::new();
        let Some(deg) = self.degree() else { return roots };
        if deg == 0 {
            return roots;
        }
        let mut p = self.squarefree_part();
        if p.coeffs[0].is_zero() {
            roots.push(Rational::zero());
            p = UniPoly::new(p.coeffs[1..].to_vec());
        }
        if p.degree().unwrap_or(0) > 0 {
            let ints = p.to_primitive_integer();
            let n = ints.len() - 1;
            let lead = ints[n].clone();
            // g(y) = lead^(n-1) p(y / lead) is monic with integer coefficients.
            let mut g = Vec::with_capacity(n + 1);
            let mut pow = BigInt::one();
            for i in (0..=n).rev() {
                g.push(&ints[i] * &pow);
                if i > 0 {
                    pow *= &lead;
                }
            }
            g.reverse();
            // g[i] currently holds ints[i] * lead^(n-i); divide by lead once.
            let g: Vec<BigInt> =
                g.iter().enumerate().map(|(i, c)| if i == n { BigInt::one() } else { c / &lead }).collect();
            for y in integer_roots_monic(&g) {
                roots.push(Rational::new(y, lead.clone()));
            }
        }
        roots.sort_by(|a, b| height(a).cmp(&height(b)).then(a.abs().cmp(&b.abs())).then(a.cmp(b)));
        roots
    }
}

fn eval_int(p: &[BigInt], x: &BigInt) -> BigInt {
    p.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

fn sturm_sequence(p: &UniPoly) -> Vec<UniPoly> {
    let mut seq = vec![p.clone(), p.derivative()];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            break;
        }
        let r = seq[n - 2].div_rem(&seq[n - 1]).1;
        if r.is_zero() {
            break;
        }
        seq.push(r.neg());
    }
    seq
}

fn sign_changes(seq: &[UniPoly], x: &Rational) -> usize {
    let signs: Vec<i8> = seq
        .iter()
        .map(|q| {
            let v = q.eval(x);
            if v.is_positive() {
                1
            } else if v.is_negative() {
                -1
            } else {
                0
            }
        })
        .filter(|&s| s != 0)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Integer roots of a squarefree monic integer polynomial with nonzero constant term.
fn integer_roots_monic(g: &[BigInt]) -> Vec<BigInt> {
    let poly = UniPoly::new(g.iter().map(|c| Rational::from_integer(c.clone())).collect());
    let seq = sturm_sequence(&poly);
    // Cauchy bound: every root satisfies |y| < 1 + max |g_i|.
    let bound = g.iter().map(|c| c.abs()).max().unwrap_or_default() + BigInt::one();
    let mut out = Vec::new();
    // Roots in the half-open integer interval (lo, hi].
    let count = |lo: &BigInt, hi: &BigInt| {
        sign_changes(&seq, &Rational::from_integer(lo.clone()))
            - sign_changes(&seq, &Rational::from_integer(hi.clone()))
    };
    let mut stack = vec![(-bound.clone() - BigInt::one(), bound.clone())];
    while let Some((lo, hi)) = stack.pop() {
        if count(&lo, &hi) == 0 {
            continue;
        }
        if &hi - &lo == BigInt::one() {
            if eval_int(g, &hi).is_zero() {
                out.push(hi);
            }
            continue;
        }
        let mid: BigInt = (&lo + &hi).div_floor(&BigInt::from(2));
        stack.push((mid.clone(), hi));
        stack.push((lo, mid));
    }
    out.sort();
    out
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => fmt_rational(c),
                1 => format!("{}*u", fmt_rational(c)),
                _ => format!("{}*u^{i}", fmt_rational(c)),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::super::{rat, ratio};
    use super::*;

    fn roots_of_product(rs: &[(i64, i64)]) -> UniPoly {
        rs.iter().fold(UniPoly::from_i64(&[1]), |acc, &(p, q)| {
            // (q u - p)
            acc.mul(&UniPoly::from_i64(&[-p, q]))
        })
    }

    #[test]
    fn div_rem_and_gcd() {
        let a = UniPoly::from_i64(&[-1, 0, 1]); // u^2 - 1
        let b = UniPoly::from_i64(&[1, 1]); // u + 1
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, UniPoly::from_i64(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(a.gcd(&UniPoly::from_i64(&[-1, 1])), UniPoly::from_i64(&[-1, 1]));
    }

    #[test]
    fn squarefree_detection() {
        let p = roots_of_product(&[(1, 1), (1, 1), (2, 1)]);
        assert!(!p.is_squarefree());
        assert_eq!(p.squarefree_part().degree(), Some(2));
        assert!(roots_of_product(&[(1, 1), (-3, 2)]).is_squarefree());
    }

    #[test]
    fn rational_roots_found_exactly() {
        let p = roots_of_product(&[(3, 2), (-5, 7), (0, 1), (4, 1), (4, 1)]);
        let r = p.rational_roots();
        assert_eq!(r, vec![rat(0), ratio(3, 2), rat(4), ratio(-5, 7)]);
    }

    #[test]
    fn irrational_roots_are_skipped() {
        // (u^2 - 2)(u^2 + 1)(3u - 1)
        let p = UniPoly::from_i64(&[-2, 0, 1]).mul(&UniPoly::from_i64(&[1, 0, 1])).mul(&UniPoly::from_i64(&[-1, 3]));
        assert_eq!(p.rational_roots(), vec![ratio(1, 3)]);
        assert!(UniPoly::from_i64(&[1, 0, 1]).rational_roots().is_empty());
    }

    #[test]
    fn large_coefficient_roots() {
        let p = roots_of_product(&[(123456789, 1000003), (-987654321, 77)]);
        let r = p.rational_roots();
        assert_eq!(r.len(), 2);
        for x in r {
            assert!(p.eval(&x).is_zero());
        }
    }

    #[test]
    fn rational_coefficients() {
        let p = UniPoly::new(vec![ratio(-1, 6), ratio(1, 2), rat(1)]); // (u + 1/3)(u ... )
        for x in p.rational_roots() {
            assert!(p.eval(&x).is_zero());
        }
        // u^2 + u/2 - 1/6 has discriminant 1/4 + 2/3 = 11/12: irrational roots
        assert!(p.rational_roots().is_empty());
    }
}
