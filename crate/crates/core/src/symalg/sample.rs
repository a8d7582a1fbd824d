use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::normalize::{normalize, replay, Normalized};
use super::plan::builtin_plan;
use super::poly::GradedPolynomial;
use super::qsmember::{quasismooth_member, QuasismoothStatus};
use crate::catalog;
use crate::error::{Error, Result};
use crate::exactmath::{rat, BinaryForm, Rational};
use crate::wspace::{enumerate_monomials, Monomial, WeightSystem};

pub const DEFAULT_BUDGET: u32 = 2000;

/// The binary form `Σ c_i U^(n−i) V^i` read off the monomials `prefix·u^(n−i)·v^i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BinarySpec {
    pub prefix: Monomial,
    pub u: Monomial,
    pub v: Monomial,
    pub degree: u32,
}

impl BinarySpec {
    pub fn new(ws: &WeightSystem, prefix: &str, u: &str, v: &str, degree: u32) -> Result<Self> {
        let spec = BinarySpec { prefix: prefix.parse()?, u: u.parse()?, v: v.parse()?, degree };
        if spec.u.weighted_degree(ws) != spec.v.weighted_degree(ws) {
            return Err(Error::Precondition(format!("{} and {} differ in degree", spec.u, spec.v)));
        }
        Ok(spec)
    }

    pub fn monomial(&self, i: u32) -> Monomial {
        let mut m = self.prefix;
        for _ in 0..self.degree - i {
            m = m.mul(&self.u);
        }
        for _ in 0..i {
            m = m.mul(&self.v);
        }
        m
    }

    pub fn monomials(&self) -> Vec<Monomial> {
        (0..=self.degree).map(|i| self.monomial(i)).collect()
    }

    pub fn form(&self, f: &GradedPolynomial) -> BinaryForm {
        BinaryForm::new(self.monomials().iter().map(|m| f.coefficient(m)).collect())
    }

    /// Same `(u, v)` pair, so the forms multiply.
    fn compatible(&self, other: &BinarySpec) -> bool {
        self.u == other.u && self.v == other.v
    }
}

impl fmt::Display for BinarySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.prefix != Monomial::ONE {
            write!(f, "{}*", self.prefix)?;
        }
        write!(f, "({},{})^{}", self.u, self.v, self.degree)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GenericityCheck {
    /// Distinct projective roots.
    Squarefree(BinarySpec),
    /// A product of linear factors over `Q`.
    Splits(BinarySpec),
    /// The product of the forms has distinct roots.
    SquarefreeProduct(Vec<BinarySpec>),
    Quasismooth,
}

impl fmt::Display for GenericityCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenericityCheck::Squarefree(s) => write!(f, "squarefree {s}"),
            GenericityCheck::Splits(s) => write!(f, "splits over Q {s}"),
            GenericityCheck::SquarefreeProduct(v) => {
                let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
                write!(f, "squarefree product {}", parts.join(" * "))
            }
            GenericityCheck::Quasismooth => write!(f, "quasismooth member"),
        }
    }
}

pub fn form_splits(b: &BinaryForm) -> bool {
    if b.is_zero() {
        return false;
    }
    let inf = b.multiplicity_at_infinity();
    let p = b.dehomogenize();
    // Count rational roots with multiplicity by dividing them out.
    let mut rest = p.clone();
    let mut count = inf;
    for r in p.rational_roots() {
        let lin = crate::exactmath::UniPoly::new(vec![-r, rat(1)]);
        loop {
            let (q, rem) = rest.div_rem(&lin);
            if !rem.is_zero() {
                break;
            }
            rest = q;
            count += 1;
        }
    }
    count == b.degree()
}

fn form_squarefree(b: &BinaryForm) -> bool {
    !b.is_zero() && crate::exactmath::squarefree_and_root_count(b).map(|(sq, _)| sq).unwrap_or(false)
}

impl GenericityCheck {
    pub fn holds(&self, f: &GradedPolynomial) -> Result<bool> {
        Ok(match self {
            GenericityCheck::Squarefree(s) => form_squarefree(&s.form(f)),
            GenericityCheck::Splits(s) => form_splits(&s.form(f)),
            GenericityCheck::SquarefreeProduct(v) => {
                if v.windows(2).any(|w| !w[0].compatible(&w[1])) {
                    return Err(Error::Precondition("product of forms in different variables".into()));
                }
                let prod = v.iter().fold(BinaryForm::new(vec![rat(1)]), |acc, s| acc.mul(&s.form(f)));
                form_squarefree(&prod)
            }
            GenericityCheck::Quasismooth => quasismooth_member(f)?.status == QuasismoothStatus::Quasismooth,
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SamplingOptions {
    pub checks: Vec<GenericityCheck>,
    /// Forms drawn as products of random linear factors so their roots are rational.
    pub splits: Vec<BinarySpec>,
    pub budget: u32,
}

impl SamplingOptions {
    pub fn none() -> Self {
        SamplingOptions { checks: Vec::new(), splits: Vec::new(), budget: DEFAULT_BUDGET }
    }

    /// Checks and split forms that the normalization and certificates for
    /// this family rely on; empty for families without either.
    pub fn default_for(ws: &WeightSystem) -> Result<Self> {
        let mut o = SamplingOptions::none();
        let spec = |p: &str, u: &str, v: &str, n: u32| BinarySpec::new(ws, p, u, v, n);
        match catalog::paper_number(ws) {
            Some(19) => {
                let quartic = spec("1", "z", "t", 4)?;
                let g6 = spec("y^3", "z", "t", 2)?;
                let cubic = spec("1", "w", "y^2", 3)?;
                o.splits = vec![quartic.clone(), cubic.clone()];
                o.checks = vec![
                    GenericityCheck::Squarefree(quartic.clone()),
                    GenericityCheck::Squarefree(g6.clone()),
                    GenericityCheck::SquarefreeProduct(vec![quartic, g6]),
                    GenericityCheck::Squarefree(cubic),
                ];
            }
            Some(28) => {
                let quintic = spec("1", "y", "z", 5)?;
                o.splits = vec![quintic.clone()];
                o.checks = vec![GenericityCheck::Squarefree(quintic)];
            }
            Some(49) => {
                let cubic = spec("y", "t", "y^2", 3)?;
                o.splits = vec![cubic.clone()];
                o.checks = vec![GenericityCheck::Squarefree(cubic)];
            }
            Some(59) => {
                let quartic = spec("1", "z", "y^2", 4)?;
                o.splits = vec![quartic.clone()];
                o.checks = vec![GenericityCheck::Squarefree(quartic)];
            }
            _ => {}
        }
        let (a4, a5) = (ws.weight(3), ws.weight(4));
        if ws.degree() == 3 * a5 && a4 == a5 && !catalog::is_exceptional(ws) {
            let cubic = spec("1", "t", "w", 3)?;
            o.splits = vec![cubic.clone()];
            o.checks = vec![GenericityCheck::Squarefree(cubic)];
        }
        Ok(o)
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct Sample {
    pub polynomial: GradedPolynomial,
    /// Descriptions of the checks that passed.
    pub checks: Vec<String>,
    pub attempts: u32,
}

fn nonzero_small(rng: &mut ChaCha8Rng) -> i64 {
    let v: i64 = rng.gen_range(1..=9);
    if rng.gen_bool(0.5) {
        v
    } else {
        -v
    }
}

/// Product of `n` random linear forms `a·U + b·V`; `None` if a coefficient vanishes.
fn split_form(rng: &mut ChaCha8Rng, n: u32) -> Option<Vec<Rational>> {
    let mut acc = BinaryForm::new(vec![rat(1)]);
    for _ in 0..n {
        let lin = BinaryForm::new(vec![rat(nonzero_small(rng)), rat(nonzero_small(rng))]);
        acc = acc.mul(&lin);
    }
    let c = acc.coefficients().to_vec();
    (c.len() == n as usize + 1 && c.iter().all(|v| !num_traits::Zero::is_zero(v))).then_some(c)
}

/// Every monomial of degree `d` gets a nonzero coefficient in `[−9, 9]`,
/// except split forms, whose coefficients come from their factors.
/// Draws are repeated until all checks pass or the budget runs out.
pub fn sample_general_member(ws: &WeightSystem, seed: u64, options: &SamplingOptions) -> Result<Sample> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let monomials = enumerate_monomials(ws, ws.degree());
    let mut last_failure = String::from("no attempt made");
    for attempt in 1..=options.budget {
        let mut terms: Vec<(Monomial, Rational)> =
            monomials.iter().map(|m| (*m, rat(nonzero_small(&mut rng)))).collect();
        let mut ok = true;
        for s in &options.splits {
            match split_form(&mut rng, s.degree) {
                Some(c) => {
                    for (i, v) in c.into_iter().enumerate() {
                        let m = s.monomial(i as u32);
                        if let Some(t) = terms.iter_mut().find(|(tm, _)| *tm == m) {
                            t.1 = v;
                        }
                    }
                }
                None => {
                    ok = false;
                    last_failure = format!("split {s} produced a zero coefficient");
                }
            }
        }
        if !ok {
            continue;
        }
        let f = GradedPolynomial::from_terms(ws, ws.degree(), terms)?;
        let mut passed = Vec::new();
        for c in &options.checks {
            if c.holds(&f)? {
                passed.push(c.to_string());
            } else {
                ok = false;
                last_failure = c.to_string();
                break;
            }
        }
        if ok {
            return Ok(Sample { polynomial: f, checks: passed, attempts: attempt });
        }
    }
    Err(Error::genericity(
        "sampling",
        format!("budget {} exhausted; last failing predicate: {last_failure}", options.budget),
    ))
}

/// A sampled member of a family with a builtin plan, after normalization.
#[derive(Clone, PartialEq, Debug)]
pub struct NormalizedMember {
    pub number: u32,
    pub seed: u64,
    pub attempts: u32,
    pub original: GradedPolynomial,
    pub normalized: Normalized,
    pub checks: Vec<String>,
}

/// Forms that must split after normalization, corrected on the sampled member
/// through the linear effect of the recorded substitutions.
fn post_splits(number: u32, ws: &WeightSystem) -> Result<Vec<BinarySpec>> {
    Ok(match number {
        19 => vec![BinarySpec::new(ws, "y^3", "z", "t", 2)?],
        _ => Vec::new(),
    })
}

/// Solves `M x = b` over `Q` for a square nonsingular `M`.
#[allow(clippy::needless_range_loop)]
fn solve_square(mut m: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = b.len();
    for col in 0..n {
        let p = (col..n).find(|&r| !num_traits::Zero::is_zero(&m[r][col]))?;
        m.swap(col, p);
        b.swap(col, p);
        let inv = m[col][col].recip();
        for v in m[col].iter_mut() {
            *v *= &inv;
        }
        b[col] *= &inv;
        for r in 0..n {
            if r != col && !num_traits::Zero::is_zero(&m[r][col]) {
                let f = m[r][col].clone();
                for k in 0..n {
                    let s = &f * &m[col][k];
                    m[r][k] -= s;
                }
                let s = &f * &b[col];
                b[r] -= s;
            }
        }
    }
    Some(b)
}

/// Samples, normalizes with the builtin plan and re-draws on genericity
/// failures, on accidental zero coefficients outside the removed monomials,
/// and when a required post-normalization form does not split.
pub fn normalized_member(number: u32, seed: u64) -> Result<NormalizedMember> {
    let plan = builtin_plan(number)?;
    let ws = plan.ws;
    let options = SamplingOptions::default_for(&ws)?;
    let kills: Vec<Monomial> = plan.kills().copied().collect();
    let expected: Vec<Monomial> =
        enumerate_monomials(&ws, ws.degree()).into_iter().filter(|m| !kills.contains(m)).collect();
    let post = post_splits(number, &ws)?;
    let mut master = ChaCha8Rng::seed_from_u64(seed);
    let mut last = String::new();
    for attempt in 1..=DEFAULT_BUDGET {
        let sub_seed: u64 = master.gen();
        let sample = sample_general_member(&ws, sub_seed, &options)?;
        let mut f = sample.polynomial;
        let mut checks = sample.checks;
        let mut out = match normalize(&f, &plan) {
            Ok(n) => n,
            Err(e) if e.is_resampleable() => {
                last = e.to_string();
                continue;
            }
            Err(e) => return Err(e),
        };
        let mut ok = true;
        for spec in &post {
            if form_splits(&spec.form(&out.polynomial)) {
                continue;
            }
            // The target form, in the normalized coordinates.
            let Some(target) = split_form(&mut master, spec.degree) else {
                ok = false;
                break;
            };
            let current = spec.form(&out.polynomial);
            let rhs: Vec<Rational> = target
                .iter()
                .zip(current.coefficients().iter().chain(std::iter::repeat(&rat(0))))
                .map(|(t, c)| t - c)
                .collect();
            let basis = spec.monomials();
            let mut cols = Vec::new();
            for b in &basis {
                let img = replay(&GradedPolynomial::monomial(&ws, *b, rat(1)), &out.substitutions)?;
                cols.push(basis.iter().map(|m| img.coefficient(m)).collect::<Vec<_>>());
            }
            let n = basis.len();
            let mat: Vec<Vec<Rational>> = (0..n).map(|r| (0..n).map(|c| cols[c][r].clone()).collect()).collect();
            let Some(delta) = solve_square(mat, rhs) else {
                ok = false;
                break;
            };
            let adj = GradedPolynomial::from_terms(&ws, ws.degree(), basis.iter().copied().zip(delta))?;
            f = f.add(&adj)?;
            out = match normalize(&f, &plan) {
                Ok(n) => n,
                Err(e) if e.is_resampleable() => {
                    ok = false;
                    break;
                }
                Err(e) => return Err(e),
            };
            if !form_splits(&spec.form(&out.polynomial)) {
                ok = false;
                break;
            }
            checks.push(format!("splits over Q after normalization {spec}"));
        }
        if !ok {
            last = "post-normalization split failed".into();
            continue;
        }
        if f.len() != enumerate_monomials(&ws, ws.degree()).len() {
            last = "sampled member lost a monomial".into();
            continue;
        }
        let got: Vec<Monomial> = out.polynomial.terms().keys().copied().collect();
        if got != expected {
            last = "accidental zero coefficient after normalization".into();
            continue;
        }
        // Genericity checks on the normalized member as well.
        let mut good = true;
        for c in &options.checks {
            if !c.holds(&out.polynomial)? {
                good = false;
                last = format!("{c} fails after normalization");
                break;
            }
        }
        if !good {
            continue;
        }
        return Ok(NormalizedMember { number, seed, attempts: attempt, original: f, normalized: out, checks });
    }
    Err(Error::genericity(format!("family {number}"), format!("budget {DEFAULT_BUDGET} exhausted: {last}")))
}
