use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::poly::{stratum_restriction, GradedPolynomial, Restriction};
use crate::error::Result;
use crate::exactmath::{fmt_rational, Rational, UniPoly};
use crate::membership::StratumSelector;
use crate::wspace::{Monomial, NVARS};

/// First primes above 10⁴ and 10⁵.
pub const PRIME_LADDER: [u64; 2] = [10007, 100003];
const POINTS_WANTED: usize = 16;
const RANDOM_TRIES: usize = 96;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum QuasismoothStatus {
    Quasismooth,
    NotQuasismooth,
    Indeterminate,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum Witness {
    /// Rational coordinates of a quasi-singular point.
    Exact {
        stratum: String,
        point: Vec<String>,
    },
    /// Quasi-singular points at the roots of `polynomial` in `s = U/V` on a two-variable stratum.
    Algebraic {
        stratum: String,
        polynomial: String,
    },
    FiniteField {
        stratum: String,
        prime: u64,
        point: [u64; NVARS],
    },
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct QuasismoothReport {
    pub status: QuasismoothStatus,
    pub witness: Option<Witness>,
    /// Strata decided by finite-field search, with the prime used and points tested.
    pub sampled: Vec<(String, u64, usize)>,
    pub undecided: Vec<String>,
}

/// Looks for points where `f` and all its partial derivatives vanish, stratum by stratum.
pub fn quasismooth_member(f: &GradedPolynomial) -> Result<QuasismoothReport> {
    let partials: Vec<GradedPolynomial> = (0..NVARS).map(|i| f.partial(i)).collect();
    let mut report = QuasismoothReport {
        status: QuasismoothStatus::Quasismooth,
        witness: None,
        sampled: Vec::new(),
        undecided: Vec::new(),
    };
    for s in StratumSelector::all() {
        let found = match s.len() {
            1 => vertex(f, &partials, s),
            2 => curve(f, &partials, s),
            _ => match search(f, &partials, s) {
                Search::Singular(w) => Some(w),
                Search::Clean(p, n) => {
                    report.sampled.push((s.to_string(), p, n));
                    None
                }
                Search::TooFewPoints => {
                    report.undecided.push(s.to_string());
                    None
                }
            },
        };
        if let Some(w) = found {
            report.status = QuasismoothStatus::NotQuasismooth;
            report.witness = Some(w);
            return Ok(report);
        }
    }
    if !report.undecided.is_empty() {
        report.status = QuasismoothStatus::Indeterminate;
    }
    Ok(report)
}

fn vertex(f: &GradedPolynomial, partials: &[GradedPolynomial], s: StratumSelector) -> Option<Witness> {
    let i = s.vars()[0];
    let m = Monomial::var(i);
    // On the vertex only pure powers of x_i survive.
    let vanishes = |g: &GradedPolynomial| g.terms().keys().all(|k| !k.uses_only(m.support_mask()));
    if vanishes(f) && partials.iter().all(vanishes) {
        let point = (0..NVARS).map(|k| if k == i { "1" } else { "0" }.to_string()).collect();
        return Some(Witness::Exact { stratum: s.to_string(), point });
    }
    None
}

/// The restriction to `{u,v}` as a polynomial in `s = U/V` with the factors of `s` removed.
fn curve_poly(g: &GradedPolynomial, s: StratumSelector) -> Option<UniPoly> {
    let Restriction::Binary(b) = stratum_restriction(g, s) else { unreachable!("two-variable stratum") };
    if b.form.is_zero() {
        return None;
    }
    // Coefficient i multiplies U^(n−i) V^i; at V = 1 this is Σ c_i s^(n−i).
    let mut c: Vec<Rational> = b.form.coefficients().iter().rev().cloned().collect();
    while c.first().is_some_and(Zero::is_zero) {
        c.remove(0);
    }
    Some(UniPoly::new(c))
}

fn curve(f: &GradedPolynomial, partials: &[GradedPolynomial], s: StratumSelector) -> Option<Witness> {
    let mut g: Option<UniPoly> = None;
    for h in std::iter::once(f).chain(partials.iter()) {
        if h.grade() == 0 && h.is_zero() {
            continue;
        }
        if let Some(p) = curve_poly(h, s) {
            g = Some(match g {
                None => p,
                Some(acc) => acc.gcd(&p),
            });
        }
    }
    let stratum = s.to_string();
    match g {
        // Every equation vanishes identically on the stratum.
        None => {
            let vars = s.vars();
            let point = (0..NVARS).map(|k| if vars.contains(&k) { "1" } else { "0" }.to_string()).collect();
            Some(Witness::Exact { stratum, point })
        }
        Some(p) if p.degree().unwrap_or(0) >= 1 => match p.rational_roots().first() {
            Some(r) => Some(Witness::Algebraic { stratum, polynomial: format!("s - {}", fmt_rational(r)) }),
            None => Some(Witness::Algebraic { stratum, polynomial: p.to_string() }),
        },
        _ => None,
    }
}

enum Search {
    Singular(Witness),
    Clean(u64, usize),
    TooFewPoints,
}

struct ModPoly {
    terms: Vec<([u32; NVARS], u64)>,
}

fn to_mod(r: &Rational, p: u64) -> Option<u64> {
    let pb = BigInt::from(p);
    let n = r.numer().mod_floor(&pb).to_u64()?;
    let d = r.denom().mod_floor(&pb).to_u64()?;
    if d == 0 {
        return None;
    }
    Some(mulmod(n, powmod(d, p - 2, p), p))
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    r
}

impl ModPoly {
    fn new(g: &GradedPolynomial, p: u64) -> Option<ModPoly> {
        let terms =
            g.terms().iter().map(|(m, c)| to_mod(c, p).map(|v| (m.exponents(), v))).collect::<Option<Vec<_>>>()?;
        Some(ModPoly { terms })
    }

    fn eval(&self, x: &[u64; NVARS], p: u64) -> u64 {
        self.terms.iter().fold(0, |acc, (e, c)| {
            let v = (0..NVARS).fold(*c, |v, i| if e[i] == 0 { v } else { mulmod(v, powmod(x[i], e[i] as u64, p), p) });
            (acc + v) % p
        })
    }

    /// Coefficients in `x_last`, the other coordinates fixed.
    fn univariate(&self, x: &[u64; NVARS], last: usize, p: u64) -> Vec<u64> {
        let mut out = Vec::new();
        for (e, c) in &self.terms {
            let v = (0..NVARS).filter(|&i| i != last).fold(*c, |v, i| {
                if e[i] == 0 {
                    v
                } else {
                    mulmod(v, powmod(x[i], e[i] as u64, p), p)
                }
            });
            let k = e[last] as usize;
            if out.len() <= k {
                out.resize(k + 1, 0);
            }
            out[k] = (out[k] + v) % p;
        }
        out
    }
}

fn horner(c: &[u64], x: u64, p: u64) -> u64 {
    c.iter().rev().fold(0, |acc, v| (mulmod(acc, x, p) + v) % p)
}

/// Points of `f = 0` on the stratum over `F_p`, tested against all partials.
/// Random coordinates first; then a deterministic sweep over small values.
fn search(f: &GradedPolynomial, partials: &[GradedPolynomial], s: StratumSelector) -> Search {
    let vars = s.vars();
    let mask = s.mask();
    let last = *vars.last().expect("nonempty stratum");
    let restricted = f.restrict(mask);
    let prs: Vec<GradedPolynomial> = partials.iter().map(|g| g.restrict(mask)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ mask as u64);
    for &p in &PRIME_LADDER {
        let Some(fm) = ModPoly::new(&restricted, p) else { continue };
        let Some(pm) = prs.iter().map(|g| ModPoly::new(g, p)).collect::<Option<Vec<_>>>() else { continue };
        let mut points = 0usize;
        let mut tries = 0usize;
        let mut sweep = 1u64;
        while points < POINTS_WANTED && tries < 2 * RANDOM_TRIES {
            let mut x = [0u64; NVARS];
            for &v in &vars[..vars.len() - 1] {
                x[v] = if tries < RANDOM_TRIES {
                    rng.gen_range(1..p)
                } else {
                    // Deterministic fallback: consecutive small values.
                    sweep += 1;
                    1 + sweep % (p - 1)
                };
            }
            tries += 1;
            let uni = fm.univariate(&x, last, p);
            if uni.iter().all(|&c| c == 0) {
                // f vanishes on this whole line; test a single point of it.
                x[last] = 1;
                if pm.iter().all(|g| g.eval(&x, p) == 0) {
                    return Search::Singular(Witness::FiniteField { stratum: s.to_string(), prime: p, point: x });
                }
                points += 1;
                continue;
            }
            for r in 1..p {
                if horner(&uni, r, p) == 0 {
                    x[last] = r;
                    points += 1;
                    if pm.iter().all(|g| g.eval(&x, p) == 0) {
                        return Search::Singular(Witness::FiniteField { stratum: s.to_string(), prime: p, point: x });
                    }
                }
            }
        }
        if points >= POINTS_WANTED {
            return Search::Clean(p, points);
        }
    }
    Search::TooFewPoints
}
