use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_integer::Integer;

use super::coeff::Coeff;
use crate::error::{Error, Result};
use crate::exactmath::{parse_rational, BinaryForm, Rational};
use crate::membership::StratumSelector;
use crate::wspace::{Monomial, WeightSystem, NVARS, VAR_NAMES};

/// Quasihomogeneous polynomial: every stored monomial has weighted degree
/// `grade` and every stored coefficient is nonzero.
#[derive(Clone, PartialEq, Debug)]
pub struct GradedPolynomial<C: Coeff = Rational> {
    ws: WeightSystem,
    grade: u32,
    terms: BTreeMap<Monomial, C>,
}

fn accumulate<C: Coeff>(terms: &mut BTreeMap<Monomial, C>, m: Monomial, c: &C) {
    if c.vanishes() {
        return;
    }
    match terms.get_mut(&m) {
        Some(v) => {
            *v = v.plus(c);
            if v.vanishes() {
                terms.remove(&m);
            }
        }
        None => {
            terms.insert(m, c.clone());
        }
    }
}

fn mul_terms<C: Coeff>(a: &BTreeMap<Monomial, C>, b: &BTreeMap<Monomial, C>) -> BTreeMap<Monomial, C> {
    let mut out = BTreeMap::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            accumulate(&mut out, ma.mul(mb), &ca.times(cb));
        }
    }
    out
}

impl<C: Coeff> GradedPolynomial<C> {
    pub fn zero(ws: &WeightSystem, grade: u32) -> Self {
        GradedPolynomial { ws: *ws, grade, terms: BTreeMap::new() }
    }

    /// Sums repeated monomials and drops zeros; every monomial must have degree `grade`.
    pub fn from_terms(ws: &WeightSystem, grade: u32, terms: impl IntoIterator<Item = (Monomial, C)>) -> Result<Self> {
        let mut p = Self::zero(ws, grade);
        for (m, c) in terms {
            if c.vanishes() {
                continue;
            }
            let g = m.weighted_degree(ws);
            if g != grade {
                return Err(Error::Precondition(format!("monomial {m} has degree {g}, expected {grade}")));
            }
            accumulate(&mut p.terms, m, &c);
        }
        Ok(p)
    }

    pub fn monomial(ws: &WeightSystem, m: Monomial, c: C) -> Self {
        Self::from_terms(ws, m.weighted_degree(ws), [(m, c)]).expect("degree matches by construction")
    }

    pub fn var(ws: &WeightSystem, i: usize) -> Self {
        Self::monomial(ws, Monomial::var(i), C::one_value())
    }

    pub fn ws(&self) -> &WeightSystem {
        &self.ws
    }

    pub fn grade(&self) -> u32 {
        self.grade
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, C> {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero_value)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.terms.contains_key(m)
    }

    pub fn support(&self) -> BTreeSet<Monomial> {
        self.terms.keys().copied().collect()
    }

    fn same_grade(&self, other: &Self) -> Result<()> {
        if self.ws != other.ws || self.grade != other.grade {
            return Err(Error::Precondition(format!(
                "grade mismatch: {} on {} vs {} on {}",
                self.grade, self.ws, other.grade, other.ws
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_grade(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            accumulate(&mut out.terms, *m, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&C::one_value().negated()))
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(&self.ws, self.grade);
        for (m, v) in &self.terms {
            accumulate(&mut out.terms, *m, &v.times(c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.ws != other.ws {
            return Err(Error::Precondition("product of polynomials on different weight systems".into()));
        }
        Ok(GradedPolynomial {
            ws: self.ws,
            grade: self.grade + other.grade,
            terms: mul_terms(&self.terms, &other.terms),
        })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = GradedPolynomial::monomial(&self.ws, Monomial::ONE, C::one_value());
        for _ in 0..e {
            out = out.mul(self).expect("same weight system");
        }
        out
    }

    /// Sets every variable outside `mask` to zero.
    pub fn restrict(&self, mask: u8) -> Self {
        let terms = self.terms.iter().filter(|(m, _)| m.uses_only(mask)).map(|(m, c)| (*m, c.clone())).collect();
        GradedPolynomial { ws: self.ws, grade: self.grade, terms }
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> GradedPolynomial<D> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            accumulate(&mut terms, *m, &f(c));
        }
        GradedPolynomial { ws: self.ws, grade: self.grade, terms }
    }

    pub fn eval(&self, point: &[C; NVARS]) -> C {
        let mut acc = C::zero_value();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    v = v.times(&point[i].power(e));
                }
            }
            acc = acc.plus(&v);
        }
        acc
    }

    /// `∂f/∂x_i`, of grade `grade − a_i`; the zero polynomial of grade 0 when `a_i > grade`.
    pub fn partial(&self, i: usize) -> Self {
        let a = self.ws.weight(i);
        if a > self.grade {
            return Self::zero(&self.ws, 0);
        }
        let mut out = Self::zero(&self.ws, self.grade - a);
        for (m, c) in &self.terms {
            let e = m.degree_in(i);
            if e > 0 {
                let q = Monomial::var(i).quotient(m).expect("x_i divides m");
                accumulate(&mut out.terms, q, &c.times(&C::from_rational(&Rational::from_integer(e.into()))));
            }
        }
        out
    }

    /// Replaces each listed `x_j` by its polynomial at once; the other variables stay.
    pub fn substitute_simultaneous(&self, subs: &[(usize, &GradedPolynomial<C>)]) -> Result<Self> {
        let mut repl: [Option<&GradedPolynomial<C>>; NVARS] = [None; NVARS];
        for &(j, r) in subs {
            if r.ws != self.ws || r.grade != self.ws.weight(j) {
                return Err(Error::Precondition(format!(
                    "replacement for {} has grade {}, expected {}",
                    VAR_NAMES[j],
                    r.grade,
                    self.ws.weight(j)
                )));
            }
            if repl[j].replace(r).is_some() {
                return Err(Error::Precondition(format!("{} substituted twice", VAR_NAMES[j])));
            }
        }
        // Powers of each replacement, grown on demand.
        let mut powers: [Vec<BTreeMap<Monomial, C>>; NVARS] = Default::default();
        let mut out = Self::zero(&self.ws, self.grade);
        for (m, c) in &self.terms {
            let mut kept = [0u32; NVARS];
            let mut acc: BTreeMap<Monomial, C> = BTreeMap::new();
            acc.insert(Monomial::ONE, c.clone());
            for (j, &e) in m.exponents().iter().enumerate() {
                match repl[j] {
                    Some(r) if e > 0 => {
                        let pw = &mut powers[j];
                        if pw.is_empty() {
                            pw.push(BTreeMap::from([(Monomial::ONE, C::one_value())]));
                        }
                        while pw.len() <= e as usize {
                            let next = mul_terms(pw.last().expect("nonempty"), &r.terms);
                            pw.push(next);
                        }
                        acc = mul_terms(&acc, &pw[e as usize]);
                    }
                    _ => kept[j] = e,
                }
            }
            let k = Monomial(kept);
            for (mm, cc) in acc {
                accumulate(&mut out.terms, mm.mul(&k), &cc);
            }
        }
        Ok(out)
    }

    pub fn substitute(&self, s: &Substitution<C>) -> Result<Self> {
        if s.replacement.ws != self.ws {
            return Err(Error::Precondition("substitution on a different weight system".into()));
        }
        self.substitute_simultaneous(&[(s.target, &s.replacement)])
    }
}

fn fmt_term<C: Coeff>(c: &C, m: &Monomial, first: bool) -> String {
    let neg_one = C::one_value().negated();
    let (sign, body) = {
        let s = c.to_string();
        match s.strip_prefix('-') {
            Some(rest) if !first => ("- ", rest.to_string()),
            _ if !first => ("+ ", s),
            _ => ("", s),
        }
    };
    let mono = if *m == Monomial::ONE { None } else { Some(m.to_string()) };
    let text = match mono {
        None => body,
        Some(mono) if *c == C::one_value() => mono,
        Some(mono) if *c == neg_one => {
            if first {
                format!("-{mono}")
            } else {
                mono
            }
        }
        Some(mono) => format!("{body}*{mono}"),
    };
    format!("{sign}{text}")
}

impl<C: Coeff> fmt::Display for GradedPolynomial<C> {
    /// Canonical text: terms in monomial order, e.g. `x^4 - 3/2*x^2*y*w + w^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().enumerate().map(|(i, (m, c))| fmt_term(c, m, i == 0)).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl GradedPolynomial<Rational> {
    /// Parses the canonical text. The grade is taken from `grade` or, if
    /// absent, from the first term; `"0"` needs an explicit grade.
    pub fn parse(ws: &WeightSystem, s: &str, grade: Option<u32>) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut terms = Vec::new();
        let mut start = 0;
        let bytes = compact.as_bytes();
        for i in 1..=bytes.len() {
            if i == bytes.len() || bytes[i] == b'+' || bytes[i] == b'-' {
                terms.push(parse_term(&compact[start..i])?);
                start = i;
            }
        }
        let grade = match grade {
            Some(g) => g,
            None => {
                let nonzero: Vec<_> = terms.iter().filter(|(_, c)| !Coeff::vanishes(c)).collect();
                match nonzero.first() {
                    Some((m, _)) => m.weighted_degree(ws),
                    None => return Err(Error::Parse("zero polynomial needs an explicit grade".into())),
                }
            }
        };
        Self::from_terms(ws, grade, terms).map_err(|e| Error::Parse(e.to_string()))
    }
}

fn parse_term(t: &str) -> Result<(Monomial, Rational)> {
    let bad = || Error::Parse(format!("not a term: {t:?}"));
    let (sign, body) = match t.as_bytes().first() {
        Some(b'+') => (1, &t[1..]),
        Some(b'-') => (-1, &t[1..]),
        _ => (1, t),
    };
    if body.is_empty() {
        return Err(bad());
    }
    let numeric_prefix = body.chars().next().is_some_and(|c| c.is_ascii_digit());
    let (coef, mono) = if numeric_prefix {
        match body.split_once('*') {
            Some((c, m)) => (parse_rational(c)?, m.parse::<Monomial>()?),
            None => (parse_rational(body)?, Monomial::ONE),
        }
    } else {
        (Rational::from_integer(1.into()), body.parse::<Monomial>()?)
    };
    Ok((mono, coef * Rational::from_integer(sign.into())))
}

/// `x_j ↦ x_j + (terms of degree a_j free of x_j)`; triangular, hence invertible.
#[derive(Clone, PartialEq, Debug)]
pub struct Substitution<C: Coeff = Rational> {
    target: usize,
    replacement: GradedPolynomial<C>,
}

impl<C: Coeff> Substitution<C> {
    pub fn new(target: usize, replacement: GradedPolynomial<C>) -> Result<Self> {
        let ws = replacement.ws;
        if target >= NVARS {
            return Err(Error::Precondition(format!("no variable with index {target}")));
        }
        if replacement.grade != ws.weight(target) {
            return Err(Error::Precondition(format!(
                "replacement grade {} differs from weight {} of {}",
                replacement.grade,
                ws.weight(target),
                VAR_NAMES[target]
            )));
        }
        let xj = Monomial::var(target);
        if replacement.coefficient(&xj) != C::one_value() {
            return Err(Error::Precondition(format!(
                "replacement must contain {} with coefficient 1",
                VAR_NAMES[target]
            )));
        }
        if replacement.terms.keys().any(|m| *m != xj && m.degree_in(target) > 0) {
            return Err(Error::Precondition(format!("correction terms must not involve {}", VAR_NAMES[target])));
        }
        Ok(Substitution { target, replacement })
    }

    /// `x_j ↦ x_j + Σ c·m`.
    pub fn from_correction(
        ws: &WeightSystem,
        target: usize,
        correction: impl IntoIterator<Item = (Monomial, C)>,
    ) -> Result<Self> {
        let terms = std::iter::once((Monomial::var(target), C::one_value())).chain(correction);
        Self::new(target, GradedPolynomial::from_terms(ws, ws.weight(target), terms)?)
    }

    pub fn identity(ws: &WeightSystem, target: usize) -> Self {
        Substitution { target, replacement: GradedPolynomial::var(ws, target) }
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn replacement(&self) -> &GradedPolynomial<C> {
        &self.replacement
    }

    /// The replacement minus `x_j`.
    pub fn correction(&self) -> GradedPolynomial<C> {
        let mut c = self.replacement.clone();
        c.terms.remove(&Monomial::var(self.target));
        c
    }

    pub fn is_identity(&self) -> bool {
        self.replacement.len() == 1
    }

    /// The correction never involves `x_j`, so negating it inverts the map exactly.
    pub fn inverse(&self) -> Self {
        let mut r = self.correction().scale(&C::one_value().negated());
        r.terms.insert(Monomial::var(self.target), C::one_value());
        Substitution { target: self.target, replacement: r }
    }
}

impl<C: Coeff> fmt::Display for Substitution<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", VAR_NAMES[self.target], self.replacement)
    }
}

/// A restriction to a two-variable stratum `{u, v}`: `prefix · B(U, V)` where
/// `U = u^(a_v/g)`, `V = v^(a_u/g)` and coefficient `i` of `B` multiplies `U^(n−i) V^i`.
#[derive(Clone, PartialEq, Debug)]
pub struct BinaryRestriction {
    pub vars: (usize, usize),
    pub prefix: Monomial,
    pub steps: (Monomial, Monomial),
    pub form: BinaryForm,
}

#[derive(Clone, PartialEq, Debug)]
pub enum Restriction {
    Binary(BinaryRestriction),
    Polynomial(GradedPolynomial),
}

/// Sets the variables outside the stratum to zero.
pub fn stratum_restriction(f: &GradedPolynomial, stratum: StratumSelector) -> Restriction {
    let r = f.restrict(stratum.mask());
    let vars = stratum.vars();
    if vars.len() != 2 {
        return Restriction::Polynomial(r);
    }
    Restriction::Binary(binary_restriction(&r, vars[0], vars[1]))
}

fn binary_restriction(r: &GradedPolynomial, u: usize, v: usize) -> BinaryRestriction {
    let ws = r.ws;
    let (au, av) = (ws.weight(u), ws.weight(v));
    let g = au.gcd(&av);
    let (su, sv) = (av / g, au / g);
    let d = r.grade;
    let mut e = [0u32; NVARS];
    e[u] = su;
    let step_u = Monomial(e);
    let mut e = [0u32; NVARS];
    e[v] = sv;
    let step_v = Monomial(e);
    // Smallest u-exponent p0 < su with a_u·p0 ≡ d (mod a_v), if any.
    let p0 = (0..su).find(|p| d >= au * p && (d - au * p) % av == 0);
    let Some(p0) = p0 else {
        return BinaryRestriction {
            vars: (u, v),
            prefix: Monomial::ONE,
            steps: (step_u, step_v),
            form: BinaryForm::new(vec![]),
        };
    };
    let q_max = (d - au * p0) / av;
    let n = q_max / sv;
    let q0 = q_max - n * sv;
    let mut e = [0u32; NVARS];
    e[u] = p0;
    e[v] = q0;
    let prefix = Monomial(e);
    let coeffs = (0..=n)
        .map(|i| {
            let mut e = [0u32; NVARS];
            e[u] = p0 + (n - i) * su;
            e[v] = q0 + i * sv;
            r.coefficient(&Monomial(e))
        })
        .collect();
    BinaryRestriction { vars: (u, v), prefix, steps: (step_u, step_v), form: BinaryForm::new(coeffs) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, ratio};

    fn ws(a: [u32; 5], d: u32) -> WeightSystem {
        WeightSystem::new(a, d).unwrap()
    }

    #[test]
    fn text_round_trip() {
        let w = ws([1, 2, 3, 3, 4], 12);
        let p = GradedPolynomial::parse(&w, "w^3 - 3/2*x^2*y*w^2 + 2*y^6 - x^12", None).unwrap();
        assert_eq!(p.len(), 4);
        assert_eq!(p.coefficient(&"x^2*y*w^2".parse().unwrap()), ratio(-3, 2));
        let q = GradedPolynomial::parse(&w, &p.to_string(), None).unwrap();
        assert_eq!(p, q);
        assert!(GradedPolynomial::parse(&w, "w^3 + x", None).is_err());
        assert!(GradedPolynomial::parse(&w, "0", Some(12)).unwrap().is_zero());
    }

    #[test]
    fn kills_w_squared_part() {
        // f = w^3 + w^2 g with g = x^5 + x^2 y on P(1,3,3,4,5); w -> w - g/3.
        let w = ws([1, 3, 3, 4, 5], 15);
        let f = GradedPolynomial::parse(&w, "w^3 + x^5*w^2 + x^2*y*w^2", None).unwrap();
        let s = Substitution::from_correction(
            &w,
            4,
            [("x^5".parse().unwrap(), ratio(-1, 3)), ("x^2*y".parse().unwrap(), ratio(-1, 3))],
        )
        .unwrap();
        let g = f.substitute(&s).unwrap();
        assert!(g.terms().keys().all(|m| m.degree_in(4) != 2));
        assert_eq!(g.substitute(&s.inverse()).unwrap(), f);
    }

    #[test]
    fn row_39_single_kill() {
        let w = ws([1, 3, 4, 5, 6], 18);
        let f = GradedPolynomial::parse(&w, "t^3*y + t^3*x^3", None).unwrap();
        let s = Substitution::from_correction(&w, 1, [("x^3".parse().unwrap(), rat(-1))]).unwrap();
        let g = f.substitute(&s).unwrap();
        assert_eq!(g.to_string(), "y*t^3");
    }

    #[test]
    fn identity_and_invalid_substitutions() {
        let w = ws([1, 2, 3, 3, 4], 12);
        let f = GradedPolynomial::parse(&w, "w^3 + y^6 + x*z*w^2", None).unwrap();
        assert_eq!(f.substitute(&Substitution::identity(&w, 3)).unwrap(), f);
        assert!(Substitution::from_correction(&w, 2, [("x*y".parse().unwrap(), rat(1))]).is_ok());
        assert!(Substitution::from_correction(&w, 2, [("z".parse().unwrap(), rat(1))]).is_err());
        assert!(Substitution::from_correction(&w, 2, [("x*y^2".parse().unwrap(), rat(1))]).is_err());
    }

    #[test]
    fn restriction_shapes() {
        let w = ws([1, 2, 3, 3, 4], 12);
        let f = GradedPolynomial::parse(&w, "z^4 + 2*z^3*t - t^4 + w^3 + x^12", None).unwrap();
        let Restriction::Binary(b) = stratum_restriction(&f, StratumSelector::parse("{z,t}").unwrap()) else {
            panic!()
        };
        assert_eq!(b.form, BinaryForm::from_i64(&[1, 2, 0, 0, -1]));
        assert_eq!(b.prefix, Monomial::ONE);
        let Restriction::Polynomial(p) = stratum_restriction(&f, StratumSelector::parse("{w}").unwrap()) else {
            panic!()
        };
        assert_eq!(p.to_string(), "w^3");
        let Restriction::Binary(b) = stratum_restriction(&f, StratumSelector::parse("{y,w}").unwrap()) else {
            panic!()
        };
        // Degree 12 in (y^2, w): y^6, y^4 w, y^2 w^2, w^3.
        assert_eq!(b.form.degree(), 3);
        assert_eq!(b.form.coefficients()[3], rat(1));
    }

    #[test]
    fn partials() {
        let w = ws([1, 1, 1, 1, 1], 4);
        let f = GradedPolynomial::parse(&w, "x^4 + 3*x*y^3", None).unwrap();
        assert_eq!(f.partial(1).to_string(), "9*x*y^2");
        assert_eq!(f.partial(0).to_string(), "4*x^3 + 3*y^3");
    }
}
