//! Degree-of-irrationality verdicts for catalog families.
//!
//! The engine re-checks the arithmetic behind each case split (index,
//! `d` against `3 a5`, the maximal power of `w`) instead of trusting a
//! hard-coded partition; only the literature inputs are taken as citations.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::catalog::{self, FamilyRecord};
use crate::error::{Error, Result};
use crate::wspace::{representable, WeightSystem};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RuleTag {
    #[serde(rename = "projection-degree-le-2")]
    ProjectionDegreeAtMostTwo,
    #[serde(rename = "irrational-cited")]
    IrrationalCited,
    #[serde(rename = "projection-two-to-one")]
    ProjectionTwoToOne,
    #[serde(rename = "normal-form-projection")]
    NormalFormProjection,
    #[serde(rename = "super-rigid-bir-eq-aut")]
    SuperRigid,
    #[serde(rename = "aut-trivial-certificate")]
    AutTrivialCertificate,
    #[serde(rename = "aut-trivial-cited")]
    AutTrivialCited,
}

impl RuleTag {
    pub const ALL: [RuleTag; 7] = [
        RuleTag::ProjectionDegreeAtMostTwo,
        RuleTag::IrrationalCited,
        RuleTag::ProjectionTwoToOne,
        RuleTag::NormalFormProjection,
        RuleTag::SuperRigid,
        RuleTag::AutTrivialCertificate,
        RuleTag::AutTrivialCited,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            RuleTag::ProjectionDegreeAtMostTwo => "projection-degree-le-2",
            RuleTag::IrrationalCited => "irrational-cited",
            RuleTag::ProjectionTwoToOne => "projection-two-to-one",
            RuleTag::NormalFormProjection => "normal-form-projection",
            RuleTag::SuperRigid => "super-rigid-bir-eq-aut",
            RuleTag::AutTrivialCertificate => "aut-trivial-certificate",
            RuleTag::AutTrivialCited => "aut-trivial-cited",
        }
    }

    pub fn parse(s: &str) -> Result<RuleTag> {
        RuleTag::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown rule tag {s:?}")))
    }

    /// Static citation text for every tag.
    pub fn citation(&self) -> &'static str {
        match self {
            RuleTag::ProjectionDegreeAtMostTwo => {
                "d < 3*a5, so forgetting w gives a dominant map to P(1,a2,a3,a4) that is birational or generically 2:1"
            }
            RuleTag::IrrationalCited => {
                "quasismooth terminal members with I = 1 are irrational (birational rigidity results in the literature)"
            }
            RuleTag::ProjectionTwoToOne => "d < 3*a5: w occurs at most quadratically, the projection forgetting w is generically 2:1",
            RuleTag::NormalFormProjection => {
                "d = 3*a5 and a4 = a5: in the normal form w*t*(w - t) + ... the projection forgetting w is generically 2:1"
            }
            RuleTag::SuperRigid => "the general member is birationally super-rigid (literature), so Bir(X) = Aut(X)",
            RuleTag::AutTrivialCertificate => {
                "normalized general member: diagonal symmetry group equals the weighted torus and the relevant PGL2 point-set stabilizers are trivial"
            }
            RuleTag::AutTrivialCited => "a general quartic threefold has trivial automorphism group (classical) and Bir = Aut",
        }
    }
}

impl fmt::Display for RuleTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Justification {
    pub rule: RuleTag,
    pub citation: String,
}

impl Justification {
    fn of(rule: RuleTag) -> Self {
        Justification { rule, citation: rule.citation().to_string() }
    }
}

/// Values are a nonempty subset of `{1, 2, 3}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IrrationalityVerdict {
    pub values: BTreeSet<u8>,
    /// Value proved only for a general member of the family.
    pub general_only: bool,
    pub justification: Vec<Justification>,
}

impl IrrationalityVerdict {
    fn new(values: &[u8], general_only: bool, rules: &[RuleTag]) -> Self {
        IrrationalityVerdict {
            values: values.iter().copied().collect(),
            general_only,
            justification: rules.iter().map(|&r| Justification::of(r)).collect(),
        }
    }

    pub fn values_string(&self) -> String {
        let v: Vec<String> = self.values.iter().map(ToString::to_string).collect();
        format!("{{{}}}", v.join(","))
    }

    pub fn has_rule(&self, r: RuleTag) -> bool {
        self.justification.iter().any(|j| j.rule == r)
    }
}

/// Generic degree of the projection `X --> P(1,a2,a3,a4)` forgetting `w`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ProjectionDegree {
    /// `w` occurs at most to this power (1: birational, 2: double cover).
    Degree(u32),
    /// `d = 3 a5`, `a4 = a5`: 2:1 through the normal form `w t (w - t) + ...`.
    NormalFormTwoToOne,
    /// Maximal `w`-power `k >= 3`; the projection does not decide `d(X)`.
    Unresolved(u32),
}

/// Largest `e` with a degree-`d` monomial `w^e * m`, `m` in `x, y, z, t`.
pub fn max_w_exponent(ws: &WeightSystem) -> u32 {
    let (a5, d) = (ws.weight(4), ws.degree());
    (0..=d / a5).rev().find(|e| representable(ws, 0b01111, i64::from(d - e * a5))).unwrap_or(0)
}

pub fn projection_degree(record: &FamilyRecord) -> Result<ProjectionDegree> {
    let ws = &record.ws;
    if ws.weight(0) != 1 {
        return Err(Error::Precondition(format!("{ws}: projection to P(1,a2,a3,a4) needs a1 = 1")));
    }
    let (a4, a5, d) = (ws.weight(3), ws.weight(4), ws.degree());
    if d == 3 * a5 && a4 == a5 && !catalog::is_exceptional(ws) {
        return Ok(ProjectionDegree::NormalFormTwoToOne);
    }
    match max_w_exponent(ws) {
        k @ 0..=2 => Ok(ProjectionDegree::Degree(k)),
        k => Ok(ProjectionDegree::Unresolved(k)),
    }
}

pub fn decide(record: &FamilyRecord) -> Result<IrrationalityVerdict> {
    let ws = &record.ws;
    if !record.accepted() {
        return Err(Error::NotInCatalog(ws.to_string()));
    }
    let (a5, d) = (ws.weight(4), ws.degree());
    if ws.index() >= 2 {
        // Index at least 2 forces d <= 3 a5; the cubic threefold attains equality.
        if d > 3 * a5 {
            return Err(Error::Internal(format!("{ws}: I >= 2 but d > 3*a5")));
        }
        return Ok(IrrationalityVerdict::new(&[1, 2], false, &[RuleTag::ProjectionDegreeAtMostTwo]));
    }
    if let Some(n) = catalog::exceptional_number(ws) {
        let aut = if n == 1 { RuleTag::AutTrivialCited } else { RuleTag::AutTrivialCertificate };
        return Ok(IrrationalityVerdict::new(&[3], true, &[RuleTag::IrrationalCited, RuleTag::SuperRigid, aut]));
    }
    let route = match projection_degree(record)? {
        ProjectionDegree::Degree(2) if d < 3 * a5 => RuleTag::ProjectionTwoToOne,
        ProjectionDegree::NormalFormTwoToOne => RuleTag::NormalFormProjection,
        other => {
            return Err(Error::Internal(format!("{ws}: no two-to-one projection found ({other:?})")));
        }
    };
    Ok(IrrationalityVerdict::new(&[2], false, &[RuleTag::IrrationalCited, route]))
}

/// Evaluates the septuple through the catalog predicates first.
pub fn decide_septuple(ws: &WeightSystem) -> Result<IrrationalityVerdict> {
    let record = catalog::evaluate(ws).ok_or_else(|| Error::NotInCatalog(ws.to_string()))?;
    decide(&record)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sept(v: &[u32]) -> WeightSystem {
        WeightSystem::from_septuple(v).unwrap()
    }

    #[test]
    fn exceptional_family_84() {
        let v = decide_septuple(&sept(&[1, 7, 8, 9, 12, 36, 1])).unwrap();
        assert_eq!(v.values_string(), "{3}");
        assert!(v.general_only);
        assert!(v.has_rule(RuleTag::IrrationalCited));
        assert!(v.has_rule(RuleTag::AutTrivialCertificate));
    }

    #[test]
    fn family_9_is_two() {
        let v = decide_septuple(&sept(&[1, 1, 2, 3, 3, 9, 1])).unwrap();
        assert_eq!(v.values_string(), "{2}");
        assert!(v.has_rule(RuleTag::NormalFormProjection));
        assert!(!v.general_only);
    }

    #[test]
    fn index_two_is_one_or_two() {
        let v = decide_septuple(&sept(&[1, 1, 1, 1, 1, 3, 2])).unwrap();
        assert_eq!(v.values_string(), "{1,2}");
    }

    #[test]
    fn quartic_uses_cited_automorphisms() {
        let v = decide_septuple(&sept(&[1, 1, 1, 1, 1, 4, 1])).unwrap();
        assert_eq!(v.values_string(), "{3}");
        assert!(v.has_rule(RuleTag::AutTrivialCited));
    }

    #[test]
    fn projection_degrees() {
        let rec = |v: &[u32]| catalog::evaluate(&sept(v)).unwrap();
        assert_eq!(projection_degree(&rec(&[1, 1, 2, 3, 3, 9])).unwrap(), ProjectionDegree::NormalFormTwoToOne);
        assert_eq!(projection_degree(&rec(&[1, 1, 1, 1, 1, 4])).unwrap(), ProjectionDegree::Unresolved(4));
        // w^3 has degree 18: the w-vertex is off X and the projection is 3:1.
        assert_eq!(projection_degree(&rec(&[1, 3, 4, 5, 6, 18])).unwrap(), ProjectionDegree::Unresolved(3));
        assert_eq!(projection_degree(&rec(&[1, 1, 1, 1, 3, 6])).unwrap(), ProjectionDegree::Degree(2));
    }

    #[test]
    fn not_in_catalog() {
        assert!(matches!(decide_septuple(&sept(&[1, 1, 1, 1, 4, 7])), Err(Error::NotInCatalog(_))));
    }

    #[test]
    fn rule_tags_round_trip() {
        for t in RuleTag::ALL {
            assert_eq!(RuleTag::parse(t.as_str()).unwrap(), t);
            assert!(!t.citation().is_empty());
        }
    }
}
