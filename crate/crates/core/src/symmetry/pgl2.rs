use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::{fmt_rational, ProjPoint, Rational};

/// Pairwise distinct points of `P^1(Q)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PointSetOnLine {
    points: Vec<ProjPoint>,
}

impl PointSetOnLine {
    pub fn new(points: Vec<ProjPoint>) -> Result<Self> {
        let distinct: BTreeSet<&ProjPoint> = points.iter().collect();
        if distinct.len() != points.len() {
            return Err(Error::Precondition("points on the line must be pairwise distinct".into()));
        }
        Ok(PointSetOnLine { points })
    }

    /// Comma-separated, e.g. `0,1,-1,inf`.
    pub fn parse(s: &str) -> Result<Self> {
        let pts = s.split(',').filter(|p| !p.trim().is_empty()).map(ProjPoint::parse).collect::<Result<Vec<_>>>()?;
        Self::new(pts)
    }

    pub fn points(&self) -> &[ProjPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    fn as_set(&self) -> BTreeSet<ProjPoint> {
        self.points.iter().cloned().collect()
    }
}

impl fmt::Display for PointSetOnLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<String> = self.points.iter().map(ProjPoint::to_string).collect();
        write!(f, "{{{}}}", p.join(", "))
    }
}

/// `[u : v] -> [a u + b v : c u + d v]`, scaled so the first nonzero entry is 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct LineMap {
    m: [Rational; 4],
}

impl LineMap {
    /// `None` when the determinant vanishes.
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Option<LineMap> {
        if (&a * &d - &b * &c).is_zero() {
            return None;
        }
        let mut m = [a, b, c, d];
        let lead = m.iter().find(|v| !v.is_zero()).expect("nonzero determinant").clone();
        for v in &mut m {
            *v /= &lead;
        }
        Some(LineMap { m })
    }

    pub fn identity() -> LineMap {
        LineMap { m: [Rational::one(), Rational::zero(), Rational::zero(), Rational::one()] }
    }

    pub fn entries(&self) -> &[Rational; 4] {
        &self.m
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn apply(&self, p: &ProjPoint) -> ProjPoint {
        let (u, v) = p.coords();
        let [a, b, c, d] = &self.m;
        ProjPoint::from_coords(&(a * &u + b * &v), &(c * &u + d * &v)).expect("invertible map")
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LineMap) -> LineMap {
        let [a, b, c, d] = &self.m;
        let [e, f, g, h] = &other.m;
        LineMap::new(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h).expect("product of invertible maps")
    }

    pub fn inverse(&self) -> LineMap {
        let [a, b, c, d] = &self.m;
        LineMap::new(d.clone(), -b, -c, a.clone()).expect("invertible map")
    }

    /// Sends `[1:0], [0:1], [1:1]` to `p0, p1, p2`.
    fn frame(p: [&ProjPoint; 3]) -> Option<LineMap> {
        let (u0, v0) = p[0].coords();
        let (u1, v1) = p[1].coords();
        let (u2, v2) = p[2].coords();
        let det = &u0 * &v1 - &u1 * &v0;
        if det.is_zero() {
            return None;
        }
        let l = (&u2 * &v1 - &u1 * &v2) / &det;
        let mu = (&u0 * &v2 - &u2 * &v0) / &det;
        if l.is_zero() || mu.is_zero() {
            return None;
        }
        LineMap::new(&l * u0, &mu * u1, l * v0, mu * v1)
    }

    /// The unique map with `p_i -> q_i`, for two triples of distinct points.
    pub fn from_triples(p: [&ProjPoint; 3], q: [&ProjPoint; 3]) -> Option<LineMap> {
        Some(Self::frame(q)?.compose(&Self::frame(p)?.inverse()))
    }
}

impl fmt::Display for LineMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e: Vec<String> = self.m.iter().map(fmt_rational).collect();
        write!(f, "[{}, {}; {}, {}]", e[0], e[1], e[2], e[3])
    }
}

impl Serialize for LineMap {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let e: Vec<String> = self.m.iter().map(fmt_rational).collect();
        [[&e[0], &e[1]], [&e[2], &e[3]]].serialize(s)
    }
}

/// Identity first, then the remaining maps in their natural order.
pub fn pgl2_set_stabilizer(s: &PointSetOnLine) -> Result<Vec<LineMap>> {
    let pts = s.points();
    if pts.len() < 3 {
        return Err(Error::Precondition(format!(
            "{} points have an infinite stabilizer; at least 3 are required",
            pts.len()
        )));
    }
    let target = s.as_set();
    let base = [&pts[0], &pts[1], &pts[2]];
    let n = pts.len();
    let mut group = BTreeSet::new();
    for i in 0..n {
        for j in (0..n).filter(|&j| j != i) {
            for k in (0..n).filter(|&k| k != i && k != j) {
                let Some(m) = LineMap::from_triples(base, [&pts[i], &pts[j], &pts[k]]) else { continue };
                if pts.iter().map(|p| m.apply(p)).collect::<BTreeSet<_>>() == target {
                    group.insert(m);
                }
            }
        }
    }
    check_group(&group)?;
    let id = LineMap::identity();
    let mut out = vec![id.clone()];
    out.extend(group.into_iter().filter(|g| *g != id));
    Ok(out)
}

fn check_group(group: &BTreeSet<LineMap>) -> Result<()> {
    if !group.contains(&LineMap::identity()) {
        return Err(Error::Internal("stabilizer misses the identity".into()));
    }
    for g in group {
        if !group.contains(&g.inverse()) {
            return Err(Error::Internal(format!("stabilizer misses the inverse of {g}")));
        }
        for h in group {
            if !group.contains(&g.compose(h)) {
                return Err(Error::Internal(format!("stabilizer not closed: {g} * {h}")));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    #[test]
    fn three_points_give_s3() {
        let s = PointSetOnLine::parse("0,1,inf").unwrap();
        assert_eq!(pgl2_set_stabilizer(&s).unwrap().len(), 6);
    }

    #[test]
    fn four_points_contain_negation() {
        let s = PointSetOnLine::parse("0,1,-1,inf").unwrap();
        let g = pgl2_set_stabilizer(&s).unwrap();
        assert!(g.len() >= 4);
        let neg = LineMap::new(rat(-1), rat(0), rat(0), rat(1)).unwrap();
        assert!(g.contains(&neg));
        // Harmonic quadruple: the stabilizer is dihedral of order 8.
        assert_eq!(g.len(), 8);
    }

    #[test]
    fn generic_five_points_are_rigid() {
        let s = PointSetOnLine::parse("0,1,inf,3,-5/7").unwrap();
        let g = pgl2_set_stabilizer(&s).unwrap();
        assert_eq!(g, vec![LineMap::identity()]);
    }

    #[test]
    fn too_few_or_repeated_points() {
        assert!(pgl2_set_stabilizer(&PointSetOnLine::parse("0,1").unwrap()).is_err());
        assert!(PointSetOnLine::parse("0,1,0").is_err());
    }

    #[test]
    fn triple_map_hits_its_targets() {
        let p = [ProjPoint::Infinity, ProjPoint::Finite(rat(2)), ProjPoint::Finite(rat(-1))];
        let q = [ProjPoint::Finite(rat(0)), ProjPoint::Infinity, ProjPoint::Finite(rat(5))];
        let m = LineMap::from_triples([&p[0], &p[1], &p[2]], [&q[0], &q[1], &q[2]]).unwrap();
        for (a, b) in p.iter().zip(q.iter()) {
            assert_eq!(m.apply(a), *b);
        }
        assert!(m.compose(&m.inverse()).is_identity());
    }
}
