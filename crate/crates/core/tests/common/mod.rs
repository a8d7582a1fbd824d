//! Property checks shared by the `properties` suite and criterion 9 of the
//! acceptance run. Each check pairs a strategy with a predicate.
#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use wfano::exactmath::{rat, ratio, smith_normal_form, IntegerMatrix, ProjPoint, Rational};
use wfano::singular::{reid_tai_terminal, LocalType, QuotientSingularity};
use wfano::symalg::{GradedPolynomial, Substitution};
use wfano::symmetry::{pgl2_set_stabilizer, LineMap, PointSetOnLine};
use wfano::wspace::{count_monomials, enumerate_monomials, Monomial, NVARS};
use wfano::WeightSystem;

pub const CASES: u32 = 1000;

pub fn config() -> Config {
    Config { cases: CASES, failure_persistence: None, ..Config::default() }
}

fn ws_strategy(max_weight: u32, max_degree: u32) -> impl Strategy<Value = WeightSystem> {
    (proptest::array::uniform5(1..=max_weight), 1..=max_degree)
        .prop_map(|(a, d)| WeightSystem::sorted(a, d).expect("positive weights"))
}

/// About half of the degree-`k` monomials with nonzero coefficients in `[-5, 5]`.
fn random_poly(ws: &WeightSystem, k: u32, rng: &mut ChaCha8Rng) -> GradedPolynomial {
    let mut terms: Vec<(Monomial, Rational)> = Vec::new();
    for m in enumerate_monomials(ws, k) {
        if rng.gen_bool(0.5) {
            let c = rng.gen_range(1..=5) * if rng.gen_bool(0.5) { 1 } else { -1 };
            terms.push((m, rat(c)));
        }
    }
    GradedPolynomial::from_terms(ws, k, terms).expect("homogeneous terms")
}

fn random_substitution(ws: &WeightSystem, rng: &mut ChaCha8Rng) -> Substitution {
    let j = rng.gen_range(0..NVARS);
    let mut correction: Vec<(Monomial, Rational)> = Vec::new();
    for m in enumerate_monomials(ws, ws.weight(j)) {
        if m.degree_in(j) == 0 && rng.gen_bool(0.6) {
            correction.push((m, ratio(rng.gen_range(-6..=6), rng.gen_range(1..=3))));
        }
    }
    Substitution::from_correction(ws, j, correction).expect("triangular correction")
}

fn homogeneous(p: &GradedPolynomial) -> bool {
    p.terms().keys().all(|m| m.weighted_degree(p.ws()) == p.grade())
}

// --- substitution invertibility -------------------------------------------

pub fn substitution_input() -> impl Strategy<Value = (WeightSystem, u64)> {
    (ws_strategy(4, 9), any::<u64>())
}

pub fn check_substitution_inverse((ws, seed): (WeightSystem, u64)) -> Result<(), TestCaseError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let f = random_poly(&ws, ws.degree(), &mut rng);
    let s = random_substitution(&ws, &mut rng);
    let g = f.substitute(&s).map_err(|e| TestCaseError::fail(e.to_string()))?;
    let back = g.substitute(&s.inverse()).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert_eq!(back, f, "substitution {} not undone", s);
    Ok(())
}

// --- grade preservation -----------------------------------------------------

pub fn grade_input() -> impl Strategy<Value = (WeightSystem, u32, u64)> {
    (ws_strategy(4, 6), 1..=5u32, any::<u64>())
}

pub fn check_grade_preservation((ws, k, seed): (WeightSystem, u32, u64)) -> Result<(), TestCaseError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let f = random_poly(&ws, ws.degree(), &mut rng);
    let g = random_poly(&ws, k, &mut rng);
    let prod = f.mul(&g).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert_eq!(prod.grade(), ws.degree() + k);
    prop_assert!(homogeneous(&prod));
    let s1 = random_substitution(&ws, &mut rng);
    let s2 = random_substitution(&ws, &mut rng);
    let h = f.substitute(&s1).and_then(|p| p.substitute(&s2)).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert_eq!(h.grade(), ws.degree());
    prop_assert!(homogeneous(&h));
    for i in 0..NVARS {
        let d = f.partial(i);
        prop_assert!(homogeneous(&d));
    }
    Ok(())
}

// --- Smith normal form ------------------------------------------------------

pub fn snf_input() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=4, 1usize..=5)
        .prop_flat_map(|(r, c)| proptest::collection::vec(proptest::collection::vec(-30i64..=30, c), r))
}

fn is_unimodular(m: &IntegerMatrix) -> bool {
    m.determinant().abs().is_one()
}

pub fn check_snf(rows: Vec<Vec<i64>>) -> Result<(), TestCaseError> {
    let m = IntegerMatrix::from_rows(&rows);
    let s = smith_normal_form(&m);
    prop_assert_eq!(s.left.mul(&m).mul(&s.right), s.diagonal_matrix());
    prop_assert!(is_unimodular(&s.left) && is_unimodular(&s.right));
    let rank = s.rank();
    prop_assert_eq!(rank, m.rank());
    prop_assert!(s.diagonal[..rank].iter().all(|d| !d.is_zero()));
    prop_assert!(s.diagonal[rank..].iter().all(Zero::is_zero));
    for w in s.diagonal[..rank].windows(2) {
        prop_assert!(w[1].is_multiple_of(&w[0]), "{} does not divide {}", w[0], w[1]);
    }
    // Oracle: the product of the divisors is the gcd of the maximal minors (full rank, square case).
    if m.rows() == m.cols() {
        let prod: BigInt = s.diagonal.iter().product();
        prop_assert_eq!(prod.abs(), m.determinant().abs());
    }
    Ok(())
}

// --- Reid–Tai under change of generator ---------------------------------------

pub fn reid_tai_input() -> impl Strategy<Value = (u32, [u32; 3])> {
    (2u32..=80).prop_flat_map(|r| (Just(r), proptest::array::uniform3(1..r)))
}

pub fn check_reid_tai((r, w): (u32, [u32; 3])) -> Result<(), TestCaseError> {
    let LocalType::Isolated(q) = QuotientSingularity::classify(r, w) else {
        return Ok(());
    };
    let t = reid_tai_terminal(&q);
    for c in (1..r).filter(|c| c.gcd(&r) == 1) {
        prop_assert_eq!(reid_tai_terminal(&q.regenerate(c)), t, "generator {} of {}", c, q);
    }
    // Terminal lemma: terminal exactly for 1/r(1, a, r - a) up to generator.
    prop_assert_eq!(t, q.is_terminal_shape(), "{}", q);
    Ok(())
}

// --- PGL2 stabilizers ---------------------------------------------------------

fn point_strategy() -> impl Strategy<Value = ProjPoint> {
    prop_oneof![
        1 => Just(ProjPoint::Infinity),
        9 => (-6i64..=6, 1i64..=4).prop_map(|(p, q)| ProjPoint::Finite(ratio(p, q))),
    ]
}

pub fn pgl2_input() -> impl Strategy<Value = (Vec<ProjPoint>, [i64; 4])> {
    (proptest::collection::vec(point_strategy(), 3..=6), proptest::array::uniform4(-4i64..=4))
}

pub fn check_pgl2((pts, g): (Vec<ProjPoint>, [i64; 4])) -> Result<(), TestCaseError> {
    let mut seen = BTreeSet::new();
    let pts: Vec<ProjPoint> = pts.into_iter().filter(|p| seen.insert(p.clone())).collect();
    prop_assume!(pts.len() >= 3);
    let set = PointSetOnLine::new(pts.clone()).unwrap();
    let stab = pgl2_set_stabilizer(&set).map_err(|e| TestCaseError::fail(e.to_string()))?;
    let group: BTreeSet<LineMap> = stab.iter().cloned().collect();
    prop_assert!(group.contains(&LineMap::identity()));
    let target: BTreeSet<ProjPoint> = pts.iter().cloned().collect();
    for a in &group {
        prop_assert_eq!(pts.iter().map(|p| a.apply(p)).collect::<BTreeSet<_>>(), target.clone());
        prop_assert!(group.contains(&a.inverse()));
        for b in &group {
            prop_assert!(group.contains(&a.compose(b)));
        }
    }
    let Some(g) = LineMap::new(rat(g[0]), rat(g[1]), rat(g[2]), rat(g[3])) else {
        return Ok(());
    };
    // Conjugation: Stab(g S) = g Stab(S) g^-1.
    let moved = PointSetOnLine::new(pts.iter().map(|p| g.apply(p)).collect()).unwrap();
    let stab2: BTreeSet<LineMap> = pgl2_set_stabilizer(&moved).unwrap().into_iter().collect();
    let conj: BTreeSet<LineMap> = group.iter().map(|h| g.compose(h).compose(&g.inverse())).collect();
    prop_assert_eq!(stab2, conj);
    Ok(())
}

// --- monomial enumeration vs the generating function --------------------------

pub fn enumeration_input() -> impl Strategy<Value = (WeightSystem, u32)> {
    (ws_strategy(7, 1), 0u32..=40)
}

/// Coefficient of `s^k` in `prod_i 1/(1 - s^(a_i))` by direct series multiplication.
fn series_coefficient(a: &[u32; NVARS], k: u32) -> u64 {
    let k = k as usize;
    let mut series = vec![0u64; k + 1];
    series[0] = 1;
    for &ai in a {
        let mut next = vec![0u64; k + 1];
        for (n, c) in series.iter().enumerate() {
            let mut m = n;
            while m <= k {
                next[m] += c;
                m += ai as usize;
            }
        }
        series = next;
    }
    series[k]
}

pub fn check_enumeration((ws, k): (WeightSystem, u32)) -> Result<(), TestCaseError> {
    let list = enumerate_monomials(&ws, k);
    let expected = series_coefficient(&ws.weights(), k);
    prop_assert_eq!(list.len() as u64, expected);
    prop_assert_eq!(count_monomials(&ws, k), expected);
    prop_assert!(list.iter().all(|m| m.weighted_degree(&ws) == k));
    prop_assert!(list.windows(2).all(|w| w[0] < w[1]));
    Ok(())
}

/// Runs one suite with [`CASES`] cases; `Err` carries the failure text.
pub fn run_suite<S, F>(strategy: S, check: F) -> Result<u32, String>
where
    S: Strategy,
    F: Fn(S::Value) -> Result<(), TestCaseError>,
{
    let mut runner = TestRunner::new(config());
    runner.run(&strategy, check).map(|()| CASES).map_err(|e| e.to_string())
}

// --- diagonal groups under enlarging the support ------------------------------

pub fn diagonal_input() -> impl Strategy<Value = (WeightSystem, u64)> {
    (ws_strategy(4, 10), any::<u64>())
}

/// `S ⊂ S'` gives `G(S') ⊆ G(S)`: every torsion generator of the larger
/// support fixes the smaller one, and the free rank cannot grow. A monomial
/// `a + b - c` with `a, b, c ∈ S` lies in the coset already and changes nothing.
pub fn check_diagonal_monotone((ws, seed): (WeightSystem, u64)) -> Result<(), TestCaseError> {
    use wfano::symmetry::{diagonal_symmetry_group, scaling_preserves};
    let all = enumerate_monomials(&ws, ws.degree());
    prop_assume!(all.len() >= 2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut small: BTreeSet<Monomial> = all.iter().copied().filter(|_| rng.gen_bool(0.4)).collect();
    small.insert(all[rng.gen_range(0..all.len())]);
    let mut big = small.clone();
    big.insert(all[rng.gen_range(0..all.len())]);
    let fail = |e: wfano::Error| TestCaseError::fail(e.to_string());
    let g_small = diagonal_symmetry_group(&small, &ws).map_err(fail)?;
    let g_big = diagonal_symmetry_group(&big, &ws).map_err(fail)?;
    prop_assert!(g_big.free_rank >= 1 && g_big.free_rank <= g_small.free_rank);
    for gen in &g_big.generators {
        prop_assert!(scaling_preserves(&small, &ws, gen).map_err(fail)?);
        prop_assert!(scaling_preserves(&big, &ws, gen).map_err(fail)?);
    }
    let s: Vec<Monomial> = small.iter().copied().collect();
    let (a, b, c) = (s[rng.gen_range(0..s.len())], s[rng.gen_range(0..s.len())], s[rng.gen_range(0..s.len())]);
    if let Some(m) = c.quotient(&a.mul(&b)) {
        let mut same = small.clone();
        same.insert(m);
        prop_assert_eq!(diagonal_symmetry_group(&same, &ws).map_err(fail)?, g_small);
    }
    Ok(())
}
