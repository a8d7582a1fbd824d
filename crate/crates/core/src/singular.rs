//! Singular points of the general member: cyclic quotient types on the
//! coordinate strata and the Reid–Tai terminality test.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{squarefree_and_root_count, BinaryForm};
use crate::membership::{membership_report, StratumSelector};
use crate::wspace::{WeightSystem, NVARS};

/// `1/r(w1,w2,w3)` with every `w_i` in `[1, r-1]` coprime to `r`; weights kept sorted.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QuotientSingularity {
    order: u32,
    weights: [u32; 3],
}

/// Outcome of reducing local weights: an isolated quotient point or a marker.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LocalType {
    Isolated(QuotientSingularity),
    /// A reduced weight is `0` or shares a factor with `r`.
    NonIsolated {
        order: u32,
        weights: [u32; 3],
    },
}

impl QuotientSingularity {
    pub fn new(order: u32, weights: [u32; 3]) -> Result<Self> {
        match Self::classify(order, weights) {
            LocalType::Isolated(q) => Ok(q),
            LocalType::NonIsolated { .. } => {
                Err(Error::Precondition(format!("1/{order}{weights:?} is not an isolated cyclic quotient type")))
            }
        }
    }

    /// Reduces mod `r`; panics if `r < 2`.
    pub fn classify(order: u32, weights: [u32; 3]) -> LocalType {
        assert!(order >= 2, "cyclic quotient order must be at least 2");
        let mut w = weights.map(|v| v % order);
        w.sort_unstable();
        if w.iter().any(|&v| v == 0 || v.gcd(&order) != 1) {
            LocalType::NonIsolated { order, weights: w }
        } else {
            LocalType::Isolated(QuotientSingularity { order, weights: w })
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn weights(&self) -> [u32; 3] {
        self.weights
    }

    /// Same point, group generator `c` (coprime to `r`).
    pub fn regenerate(&self, c: u32) -> QuotientSingularity {
        assert_eq!(c.gcd(&self.order), 1, "generator change must be coprime to the order");
        let w = self.weights.map(|v| ((u64::from(v) * u64::from(c)) % u64::from(self.order)) as u32);
        match Self::classify(self.order, w) {
            LocalType::Isolated(q) => q,
            LocalType::NonIsolated { .. } => unreachable!("units preserve coprimality"),
        }
    }

    /// Up to generator change, of the shape `1/r(1, a, r-a)`.
    pub fn is_terminal_shape(&self) -> bool {
        let r = self.order;
        (1..r).filter(|c| c.gcd(&r) == 1).any(|c| {
            let w = self.regenerate(c).weights;
            w[0] == 1 && w[1] + w[2] == r
        })
    }

    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("not a quotient type: {s:?}"));
        let s = s.trim().strip_prefix("1/").ok_or_else(bad)?;
        let (r, rest) = s.split_once('(').ok_or_else(bad)?;
        let r: u32 = r.trim().parse().map_err(|_| bad())?;
        let ws: Vec<u32> = rest
            .trim_end_matches(')')
            .split(',')
            .map(|v| v.trim().parse().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        let ws: [u32; 3] = ws.try_into().map_err(|_| bad())?;
        if r < 2 {
            return Err(bad());
        }
        Self::new(r, ws)
    }
}

impl fmt::Display for QuotientSingularity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.weights;
        write!(f, "1/{}({a},{b},{c})", self.order)
    }
}

/// For every `k` in `1..r`: `sum_i (k w_i mod r) > r`.
pub fn reid_tai_terminal(q: &QuotientSingularity) -> bool {
    let r = u64::from(q.order);
    (1..r).all(|k| q.weights.iter().map(|&w| (k * u64::from(w)) % r).sum::<u64>() > r)
}

/// `count` points of one type on the interior of `stratum`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BasketEntry {
    pub stratum: StratumSelector,
    pub count: u32,
    pub singularity: QuotientSingularity,
}

impl BasketEntry {
    /// `"k × 1/r(w1,w2,w3)"`.
    pub fn basket_string(&self) -> String {
        format!("{} × {}", self.count, self.singularity)
    }

    pub fn parse_basket_string(s: &str) -> Result<(u32, QuotientSingularity)> {
        let bad = || Error::Parse(format!("not a basket entry: {s:?}"));
        let (k, q) = s.split_once('×').ok_or_else(bad)?;
        Ok((k.trim().parse().map_err(|_| bad())?, QuotientSingularity::parse(q)?))
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct SingularityBasket {
    pub points: Vec<BasketEntry>,
    pub non_isolated: Vec<StratumSelector>,
}

impl SingularityBasket {
    pub fn terminal_eligible(&self) -> bool {
        self.non_isolated.is_empty()
    }

    pub fn total_points(&self) -> u32 {
        self.points.iter().map(|p| p.count).sum()
    }
}

/// Type at a point whose nonzero coordinates are exactly `support`:
/// outside weights mod `q`, `|support| - 1` zeros for the stratum directions,
/// minus the normal direction of weight `d mod q`. `None` if `q = 1`.
pub fn local_type_at_point(ws: &WeightSystem, support: StratumSelector) -> Result<Option<LocalType>> {
    let q = support.weight_gcd(ws);
    if q == 1 {
        return Ok(None);
    }
    let mut dirs: Vec<u32> = support.complement().iter().map(|&i| ws.weight(i) % q).collect();
    dirs.extend(std::iter::repeat_n(0, support.len() - 1));
    let normal = ws.degree() % q;
    let pos = dirs.iter().position(|&v| v == normal).ok_or_else(|| {
        Error::Precondition(format!("no tangent direction of weight {normal} mod {q} at a point of {support}"))
    })?;
    dirs.remove(pos);
    let w: [u32; 3] = dirs.try_into().map_err(|_| Error::Internal("local dimension is not 3".into()))?;
    Ok(Some(QuotientSingularity::classify(q, w)))
}

fn vertex_type(ws: &WeightSystem, i: usize) -> Result<Option<LocalType>> {
    let (r, d) = (ws.weight(i), ws.degree());
    if r < 2 || d % r == 0 {
        return Ok(None);
    }
    let candidates: Vec<usize> =
        (0..NVARS).filter(|&j| j != i && d >= ws.weight(j) + r && (d - ws.weight(j)).is_multiple_of(r)).collect();
    let Some(&j) = candidates.first() else {
        return Err(Error::Precondition(format!("{ws} is not quasismooth at the vertex of variable {i}")));
    };
    let type_for = |j: usize| {
        let w: Vec<u32> = (0..NVARS).filter(|&k| k != i && k != j).map(|k| ws.weight(k)).collect();
        QuotientSingularity::classify(r, [w[0], w[1], w[2]])
    };
    let chosen = type_for(j);
    for &k in &candidates[1..] {
        if type_for(k) != chosen {
            return Err(Error::Internal(format!("vertex type at variable {i} depends on the eliminated variable")));
        }
    }
    Ok(Some(chosen))
}

/// Number of interior points of `X ∩ {x_i, x_j}` for the general member, and
/// whether the stratum lies in `X`.
fn pair_points(ws: &WeightSystem, i: usize, j: usize) -> Result<Option<u32>> {
    let (a, b, d) = (ws.weight(i), ws.weight(j), ws.degree());
    let sols = (0..=d / a).filter(|al| (d - al * a) % b == 0).count();
    if sols == 0 {
        return Ok(None);
    }
    // General binary form in (x_i^(b/q), x_j^(a/q)) with all coefficients nonzero.
    let generic = BinaryForm::from_i64(&vec![1; sols]);
    let (_, roots) = squarefree_and_root_count(&generic)?;
    Ok(Some(roots as u32))
}

pub fn singular_points_general(ws: &WeightSystem) -> Result<SingularityBasket> {
    let report = membership_report(ws);
    if report.linear_cone || !report.quasismooth_general {
        return Err(Error::Precondition(format!("{ws} is not quasismooth; quotient types are undefined")));
    }
    let mut basket = SingularityBasket::default();
    for s in StratumSelector::all().into_iter().filter(|s| s.len() == 3) {
        if s.weight_gcd(ws) > 1 {
            basket.non_isolated.push(s);
        }
    }
    for i in 0..NVARS {
        let s = StratumSelector::from_vars(&[i])?;
        match vertex_type(ws, i)? {
            None => {}
            Some(LocalType::Isolated(q)) => basket.points.push(BasketEntry { stratum: s, count: 1, singularity: q }),
            Some(LocalType::NonIsolated { .. }) => basket.non_isolated.push(s),
        }
    }
    for i in 0..NVARS {
        for j in i + 1..NVARS {
            let s = StratumSelector::from_vars(&[i, j])?;
            let q = s.weight_gcd(ws);
            if q < 2 {
                continue;
            }
            match pair_points(ws, i, j)? {
                None => basket.non_isolated.push(s),
                Some(0) => {}
                Some(n) => {
                    let w: Vec<u32> = s.complement().iter().map(|&k| ws.weight(k)).collect();
                    match QuotientSingularity::classify(q, [w[0], w[1], w[2]]) {
                        LocalType::Isolated(t) => {
                            basket.points.push(BasketEntry { stratum: s, count: n, singularity: t })
                        }
                        LocalType::NonIsolated { .. } => basket.non_isolated.push(s),
                    }
                }
            }
        }
    }
    basket.non_isolated.sort_by_key(|s| (s.len(), s.mask()));
    basket.non_isolated.dedup();
    Ok(basket)
}

pub fn terminal_general(ws: &WeightSystem) -> Result<bool> {
    let b = singular_points_general(ws)?;
    Ok(b.terminal_eligible() && b.points.iter().all(|p| reid_tai_terminal(&p.singularity)))
}
