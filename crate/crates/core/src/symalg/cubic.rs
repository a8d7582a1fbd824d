use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::coeff::{Coeff, QuadNum};
use super::poly::GradedPolynomial;
use super::sample::BinarySpec;
use crate::catalog;
use crate::error::{Error, Result};
use crate::exactmath::{squarefree_and_root_count, BinaryForm, ProjPoint, Rational};
use crate::wspace::{Monomial, NVARS};

const T: usize = 3;
const W: usize = 4;

/// Coefficient polynomials in `x, y, z` of
/// `wt(w−t) + w²f₁ + t²g₁ + wt·h₁ + w·f₂ + t·g₂ + h`, indices by degree multiple of `a5`.
#[derive(Clone, PartialEq, Debug)]
pub struct NormalFormPieces {
    pub f_a5: GradedPolynomial<QuadNum>,
    pub g_a5: GradedPolynomial<QuadNum>,
    pub h_a5: GradedPolynomial<QuadNum>,
    pub f_2a5: GradedPolynomial<QuadNum>,
    pub g_2a5: GradedPolynomial<QuadNum>,
    pub h_d: GradedPolynomial<QuadNum>,
}

#[derive(Clone, PartialEq, Debug)]
pub struct CubicNormalForm {
    pub polynomial: GradedPolynomial<QuadNum>,
    /// Old `(t, w)` = `matrix · (t', w')`.
    pub matrix: [[QuadNum; 2]; 2],
    /// Output = input after the change, divided by `kappa`.
    pub kappa: QuadNum,
    pub pieces: NormalFormPieces,
}

/// Root vectors `(t, w)` of a binary cubic with three distinct roots, over `Q` or `Q(√D)`.
fn cubic_roots(c: &BinaryForm) -> Result<[[QuadNum; 2]; 3]> {
    let gen = |d: &str| Error::genericity("cubic normal form", d.to_string());
    if c.is_zero() {
        return Err(gen("the (t,w) cubic vanishes"));
    }
    let (sq, n) = squarefree_and_root_count(c)?;
    if !sq || n != 3 {
        return Err(gen("the (t,w) cubic has a repeated root"));
    }
    let q = |r: &Rational| QuadNum::rational(r.clone());
    let as_vec = |p: &ProjPoint| {
        let (u, v) = p.coords();
        [q(&u), q(&v)]
    };
    let rational = c.rational_roots();
    match rational.len() {
        3 => Ok([as_vec(&rational[0]), as_vec(&rational[1]), as_vec(&rational[2])]),
        1 => {
            // Divide out the linear factor v0·t − u0·w to get a quadratic a t² + b t w + c w².
            let (u0, v0) = rational[0].coords();
            let lin = BinaryForm::new(vec![v0.clone(), -u0.clone()]);
            let quad = divide_binary(c, &lin).ok_or_else(|| Error::Internal("root did not divide the cubic".into()))?;
            let [a, b, cc] = [&quad[0], &quad[1], &quad[2]];
            let disc = b * b - Rational::from_integer(4.into()) * a * cc;
            let (rad, scale) = squarefree_split(&disc);
            let sqrt_d = QuadNum::sqrt(rad)?;
            let root_disc = sqrt_d.times(&q(&scale));
            let r0 = as_vec(&rational[0]);
            if a.is_zero() {
                return Err(Error::Internal("a quadratic factor with a root at infinity is reducible".into()));
            }
            // t/w = (−b ± √disc) / 2a.
            let two_a = q(&(a * Rational::from_integer(2.into())));
            let inv = two_a.inverse().expect("nonzero");
            let plus = q(&-b.clone()).plus(&root_disc).times(&inv);
            let minus = q(&-b.clone()).minus(&root_disc).times(&inv);
            Ok([r0, [plus, QuadNum::one_value()], [minus, QuadNum::one_value()]])
        }
        _ => Err(Error::Unsupported("the (t,w) cubic is irreducible over Q; its roots need a cubic field".into())),
    }
}

/// `p / q` for binary forms when exact, coefficients high to low in the first variable.
fn divide_binary(p: &BinaryForm, q: &BinaryForm) -> Option<Vec<Rational>> {
    let mut rem: Vec<Rational> = p.coefficients().to_vec();
    let qc = q.coefficients();
    let n = rem.len() - qc.len() + 1;
    // Leading coefficient may vanish (root at infinity); divide from the low end then.
    let lead = qc.iter().position(|c| !c.is_zero())?;
    let mut out = vec![Rational::zero(); n];
    if lead == 0 {
        for i in 0..n {
            let f = &rem[i] / &qc[0];
            for (j, c) in qc.iter().enumerate() {
                rem[i + j] -= &f * c;
            }
            out[i] = f;
        }
    } else {
        // q = c·w exactly: shift.
        if qc.len() != 2 {
            return None;
        }
        for i in 0..n {
            out[i] = &rem[i + 1] / &qc[1];
        }
        rem = vec![rem[0].clone()];
    }
    rem.iter().all(Zero::is_zero).then_some(out)
}

/// `disc = scale² · rad` with `rad` a squarefree integer.
fn squarefree_split(disc: &Rational) -> (BigInt, Rational) {
    // disc = n/d = n·d / d².
    let mut m = disc.numer() * disc.denom();
    let sign = if m.is_negative() { -BigInt::one() } else { BigInt::one() };
    m = m.abs();
    let mut square = BigInt::one();
    let mut k = BigInt::from(2);
    while &k * &k <= m {
        while (&m % (&k * &k)).is_zero() {
            m /= &k * &k;
            square *= &k;
        }
        k += 1;
    }
    (sign * m, Rational::new(square, disc.denom().clone()))
}

fn solve2(m: &[[QuadNum; 2]; 2], b: &[QuadNum; 2]) -> Option<[QuadNum; 2]> {
    let det = m[0][0].times(&m[1][1]).minus(&m[0][1].times(&m[1][0]));
    let inv = det.inverse()?;
    Some([
        b[0].times(&m[1][1]).minus(&m[0][1].times(&b[1])).times(&inv),
        m[0][0].times(&b[1]).minus(&b[0].times(&m[1][0])).times(&inv),
    ])
}

fn linear_change(f: &GradedPolynomial<QuadNum>, m: &[[QuadNum; 2]; 2]) -> Result<GradedPolynomial<QuadNum>> {
    let ws = f.ws();
    let t = GradedPolynomial::from_terms(
        ws,
        ws.weight(T),
        [(Monomial::var(T), m[0][0].clone()), (Monomial::var(W), m[0][1].clone())],
    )?;
    let w = GradedPolynomial::from_terms(
        ws,
        ws.weight(W),
        [(Monomial::var(T), m[1][0].clone()), (Monomial::var(W), m[1][1].clone())],
    )?;
    f.substitute_simultaneous(&[(T, &t), (W, &w)])
}

/// Moves the roots of the `(t,w)` cubic to `[1:0]`, `[0:1]`, `[1:1]` and
/// scales so that the pure `(t,w)` part becomes exactly `w²t − wt²`.
pub fn cubic_normal_form(f: &GradedPolynomial) -> Result<CubicNormalForm> {
    let ws = *f.ws();
    let (a4, a5, d) = (ws.weight(T), ws.weight(W), ws.degree());
    if d != 3 * a5 || a4 != a5 || f.grade() != d {
        return Err(Error::Precondition(format!("{ws}: the normal form needs d = 3*a5 and a4 = a5")));
    }
    if catalog::is_exceptional(&ws) {
        return Err(Error::Precondition(format!("{ws} is one of the exceptional families")));
    }
    let spec = BinarySpec::new(&ws, "1", "t", "w", 3)?;
    let roots = cubic_roots(&spec.form(f))?;
    let cols = [[roots[0][0].clone(), roots[1][0].clone()], [roots[0][1].clone(), roots[1][1].clone()]];
    let lam = solve2(&cols, &roots[2]).ok_or_else(|| Error::Internal("roots are not distinct".into()))?;
    let matrix = [
        [roots[0][0].times(&lam[0]), roots[1][0].times(&lam[1])],
        [roots[0][1].times(&lam[0]), roots[1][1].times(&lam[1])],
    ];
    let changed = linear_change(&f.map_coeffs(|c| QuadNum::rational(c.clone())), &matrix)?;
    let wt2: Monomial = "t*w^2".parse()?;
    let kappa = changed.coefficient(&wt2);
    let inv = kappa.inverse().ok_or_else(|| Error::Internal("scaling constant vanished".into()))?;
    let polynomial = changed.scale(&inv);
    let pieces = collect_pieces(&polynomial)?;
    Ok(CubicNormalForm { polynomial, matrix, kappa, pieces })
}

fn collect_pieces(p: &GradedPolynomial<QuadNum>) -> Result<NormalFormPieces> {
    let ws = *p.ws();
    let a5 = ws.weight(W);
    let piece = |et: u32, ew: u32| -> Result<GradedPolynomial<QuadNum>> {
        let grade = ws.degree() - (et + ew) * a5;
        let terms = p.terms().iter().filter(|(m, _)| m.degree_in(T) == et && m.degree_in(W) == ew).map(|(m, c)| {
            let mut e = m.exponents();
            e[T] = 0;
            e[W] = 0;
            (Monomial(e), c.clone())
        });
        GradedPolynomial::from_terms(&ws, grade, terms)
    };
    for (et, ew) in [(3, 0), (0, 3)] {
        if !piece(et, ew)?.is_zero() {
            return Err(Error::Internal("pure cube survived the normal form".into()));
        }
    }
    Ok(NormalFormPieces {
        f_a5: piece(0, 2)?,
        g_a5: piece(2, 0)?,
        h_a5: piece(1, 1)?,
        f_2a5: piece(0, 1)?,
        g_2a5: piece(1, 0)?,
        h_d: piece(0, 0)?,
    })
}

impl CubicNormalForm {
    /// The input polynomial, recovered through the inverse change.
    pub fn expand_back(&self) -> Result<GradedPolynomial<QuadNum>> {
        let m = &self.matrix;
        let det = m[0][0].times(&m[1][1]).minus(&m[0][1].times(&m[1][0]));
        let di = det.inverse().ok_or_else(|| Error::Internal("singular change".into()))?;
        let inv =
            [[m[1][1].times(&di), m[0][1].negated().times(&di)], [m[1][0].negated().times(&di), m[0][0].times(&di)]];
        Ok(linear_change(&self.polynomial, &inv)?.scale(&self.kappa))
    }

    /// `[0:0:0:0:1]`, `[0:0:0:1:0]`, `[0:0:0:1:1]`.
    pub fn base_points() -> [[QuadNum; NVARS]; 3] {
        let z = QuadNum::zero_value;
        let o = QuadNum::one_value;
        [[z(), z(), z(), z(), o()], [z(), z(), z(), o(), z()], [z(), z(), z(), o(), o()]]
    }

    /// The pure `(t,w)` part of the output.
    pub fn cubic_part(&self) -> GradedPolynomial<QuadNum> {
        self.polynomial.restrict((1 << T) | (1 << W))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wspace::WeightSystem;

    fn nine(s: &str) -> GradedPolynomial {
        GradedPolynomial::parse(&WeightSystem::new([1, 1, 2, 3, 3], 9).unwrap(), s, None).unwrap()
    }

    #[test]
    fn sum_of_cubes_needs_sqrt_minus_three() {
        let f = nine("w^3 + t^3 + x^9 + x*y^4*z^2");
        let n = cubic_normal_form(&f).unwrap();
        assert_eq!(n.cubic_part().to_string(), "-t^2*w + t*w^2");
        assert_eq!(n.expand_back().unwrap(), f.map_coeffs(|c| QuadNum::rational(c.clone())));
        assert!(n.matrix.iter().flatten().any(|c| c.radicand() == Some(&BigInt::from(-3))));
        for p in CubicNormalForm::base_points() {
            assert!(n.polynomial.eval(&p).vanishes());
        }
    }

    #[test]
    fn rational_roots_stay_rational() {
        let f = nine("t^2*w - t*w^2 + 2*t^3 + x^3*w^2");
        let n = cubic_normal_form(&f).unwrap();
        assert_eq!(n.cubic_part().to_string(), "-t^2*w + t*w^2");
        assert!(n.polynomial.terms().values().all(|c| c.to_rational().is_some()));
        assert_eq!(n.expand_back().unwrap(), f.map_coeffs(|c| QuadNum::rational(c.clone())));
    }

    #[test]
    fn degenerate_cubics() {
        assert!(matches!(cubic_normal_form(&nine("w^3 + x^9")), Err(Error::Genericity { .. })));
        assert!(matches!(cubic_normal_form(&nine("x^9 + x^3*y^6")), Err(Error::Genericity { .. })));
        assert!(matches!(cubic_normal_form(&nine("w^3 + 2*t^3")), Err(Error::Unsupported(_))));
    }
}
