//! Bounded search over septuples, the persistent catalog file and the
//! markdown report.

use std::collections::BTreeSet;
use std::fs;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::irrational::{self, IrrationalityVerdict, Justification, RuleTag};
use crate::membership::{membership_report, FailingStratum, MembershipReport, StratumSelector};
use crate::singular::{reid_tai_terminal, singular_points_general, BasketEntry, SingularityBasket};
use crate::wspace::{WeightSystem, NVARS};

pub const SCHEMA_VERSION: &str = "1";

/// Labels for the septuples named explicitly; no other record is numbered.
const PAPER_NUMBERS: [(u32, [u32; 6]); 15] = [
    (1, [1, 1, 1, 1, 1, 4]),
    (3, [1, 1, 1, 1, 3, 6]),
    (9, [1, 1, 2, 3, 3, 9]),
    (17, [1, 1, 3, 4, 4, 12]),
    (19, [1, 2, 3, 3, 4, 12]),
    (27, [1, 2, 3, 5, 5, 15]),
    (28, [1, 3, 3, 4, 5, 15]),
    (39, [1, 3, 4, 5, 6, 18]),
    (49, [1, 3, 5, 6, 7, 21]),
    (59, [1, 3, 6, 7, 8, 24]),
    (66, [1, 5, 6, 7, 9, 27]),
    (84, [1, 7, 8, 9, 12, 36]),
    (96, [1, 1, 1, 1, 1, 3]),
    (98, [1, 1, 1, 2, 3, 6]),
    (104, [1, 1, 1, 1, 1, 2]),
];

/// Families whose general member has degree of irrationality 3.
pub const EXCEPTIONAL_NUMBERS: [u32; 8] = [1, 19, 28, 39, 49, 59, 66, 84];

/// The three `d = 3 a5` families handled by the normal form.
pub const NORMAL_FORM_NUMBERS: [u32; 3] = [9, 17, 27];

pub fn paper_number(ws: &WeightSystem) -> Option<u32> {
    let key = {
        let a = ws.weights();
        [a[0], a[1], a[2], a[3], a[4], ws.degree()]
    };
    PAPER_NUMBERS.iter().find(|(_, s)| *s == key).map(|(n, _)| *n)
}

pub fn septuple_of(number: u32) -> Option<WeightSystem> {
    PAPER_NUMBERS
        .iter()
        .find(|(n, _)| *n == number)
        .map(|(_, s)| WeightSystem::new([s[0], s[1], s[2], s[3], s[4]], s[5]).expect("static table is valid"))
}

pub fn exceptional_number(ws: &WeightSystem) -> Option<u32> {
    paper_number(ws).filter(|n| EXCEPTIONAL_NUMBERS.contains(n))
}

pub fn is_exceptional(ws: &WeightSystem) -> bool {
    exceptional_number(ws).is_some()
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FamilyRecord {
    pub ws: WeightSystem,
    pub membership: MembershipReport,
    pub basket: SingularityBasket,
    pub terminal: bool,
    pub paper_number: Option<u32>,
    pub verdict: Option<IrrationalityVerdict>,
}

impl FamilyRecord {
    pub fn index(&self) -> i64 {
        self.ws.index()
    }

    pub fn accepted(&self) -> bool {
        self.ws.index() >= 1 && self.membership.accepted() && self.terminal
    }

    /// `(I, d, weights)`.
    pub fn sort_key(&self) -> (i64, u32, [u32; NVARS]) {
        (self.ws.index(), self.ws.degree(), self.ws.weights())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SearchBounds {
    pub max_weight: u32,
    pub max_degree: u32,
    pub index_min: u32,
    pub index_max: u32,
}

impl Default for SearchBounds {
    /// Index up to 19: the largest index in the list is 13, weights reach 33.
    fn default() -> Self {
        SearchBounds { max_weight: 40, max_degree: 120, index_min: 1, index_max: 19 }
    }
}

impl SearchBounds {
    pub fn with_index(self, i: u32) -> Self {
        SearchBounds { index_min: i, index_max: i, ..self }
    }
}

/// Every vertex `P_i` admits `x_i^m` or `x_i^m x_j` in degree `d`.
fn vertices_ok(a: &[u32; NVARS], d: u32) -> bool {
    (0..NVARS).all(|i| {
        d.is_multiple_of(a[i]) || (0..NVARS).any(|j| j != i && d >= a[j] + a[i] && (d - a[j]).is_multiple_of(a[i]))
    })
}

/// Full predicate pipeline; `None` unless every check passes and `I >= 1`.
pub fn evaluate(ws: &WeightSystem) -> Option<FamilyRecord> {
    if ws.index() < 1 {
        return None;
    }
    let membership = membership_report(ws);
    if !membership.accepted() {
        return None;
    }
    let basket = singular_points_general(ws).ok()?;
    let terminal = basket.terminal_eligible() && basket.points.iter().all(|p| reid_tai_terminal(&p.singularity));
    if !terminal {
        return None;
    }
    let mut rec = FamilyRecord { ws: *ws, membership, basket, terminal, paper_number: paper_number(ws), verdict: None };
    rec.verdict = irrational::decide(&rec).ok();
    Some(rec)
}

fn search_block(bounds: &SearchBounds, a1: u32) -> Vec<FamilyRecord> {
    let m = bounds.max_weight;
    let mut out = Vec::new();
    for a2 in a1..=m {
        for a3 in a2..=m {
            for a4 in a3..=m {
                for a5 in a4..=m {
                    let a = [a1, a2, a3, a4, a5];
                    let s: u32 = a.iter().sum();
                    for i in bounds.index_min..=bounds.index_max {
                        if i >= s {
                            break;
                        }
                        let d = s - i;
                        if d > bounds.max_degree || a.contains(&d) || !vertices_ok(&a, d) {
                            continue;
                        }
                        let ws = WeightSystem::new(a, d).expect("sorted positive weights");
                        if let Some(r) = evaluate(&ws) {
                            out.push(r);
                        }
                    }
                }
            }
        }
    }
    out
}

/// Sorted by `(I, d, weights)`; identical output for any `jobs`.
pub fn classify_with_jobs(bounds: &SearchBounds, jobs: usize) -> Result<Vec<FamilyRecord>> {
    let blocks: Vec<u32> = (1..=bounds.max_weight).collect();
    let mut out: Vec<FamilyRecord> = if jobs <= 1 {
        blocks.iter().flat_map(|&a1| search_block(bounds, a1)).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
        pool.install(|| blocks.par_iter().flat_map_iter(|&a1| search_block(bounds, a1)).collect())
    };
    out.sort_by_key(FamilyRecord::sort_key);
    Ok(out)
}

pub fn classify(bounds: &SearchBounds) -> Vec<FamilyRecord> {
    classify_with_jobs(bounds, 1).expect("single-threaded search cannot fail")
}

/// `I = 1` records with `d >= 3 a5` outside the eight exceptional families.
pub fn projection_exceptional(records: &[FamilyRecord]) -> Vec<FamilyRecord> {
    records
        .iter()
        .filter(|r| r.index() == 1 && r.ws.degree() >= 3 * r.ws.weight(4) && !is_exceptional(&r.ws))
        .cloned()
        .collect()
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
struct WireFlags {
    wps_well_formed: bool,
    hypersurface_well_formed: bool,
    linear_cone: bool,
    quasismooth_general: bool,
    terminal: bool,
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
struct WireVerdict {
    values: Vec<String>,
    general_only: bool,
    justification: Vec<Justification>,
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
struct WireRecord {
    schema_version: String,
    septuple: Vec<String>,
    index: String,
    paper_number: Option<String>,
    flags: WireFlags,
    failing_strata: Vec<FailingStratumWire>,
    basket: Vec<String>,
    basket_strata: Vec<String>,
    non_isolated: Vec<String>,
    verdict: Option<WireVerdict>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FailingStratumWire {
    stratum: String,
    reason: String,
}

fn parse_u32(s: &str) -> Result<u32> {
    s.parse().map_err(|_| Error::Parse(format!("expected a decimal integer, got {s:?}")))
}

impl From<&FamilyRecord> for WireRecord {
    fn from(r: &FamilyRecord) -> Self {
        WireRecord {
            schema_version: SCHEMA_VERSION.to_string(),
            septuple: r.ws.septuple().iter().map(ToString::to_string).collect(),
            index: r.ws.index().to_string(),
            paper_number: r.paper_number.map(|n| n.to_string()),
            flags: WireFlags {
                wps_well_formed: r.membership.wps_well_formed,
                hypersurface_well_formed: r.membership.hypersurface_well_formed,
                linear_cone: r.membership.linear_cone,
                quasismooth_general: r.membership.quasismooth_general,
                terminal: r.terminal,
            },
            failing_strata: r
                .membership
                .failing_strata
                .iter()
                .map(|f| FailingStratumWire { stratum: f.stratum.to_string(), reason: f.reason.clone() })
                .collect(),
            basket: r.basket.points.iter().map(BasketEntry::basket_string).collect(),
            basket_strata: r.basket.points.iter().map(|p| p.stratum.to_string()).collect(),
            non_isolated: r.basket.non_isolated.iter().map(ToString::to_string).collect(),
            verdict: r.verdict.as_ref().map(|v| WireVerdict {
                values: v.values.iter().map(ToString::to_string).collect(),
                general_only: v.general_only,
                justification: v.justification.clone(),
            }),
        }
    }
}

impl TryFrom<WireRecord> for FamilyRecord {
    type Error = Error;

    fn try_from(w: WireRecord) -> Result<Self> {
        if w.schema_version != SCHEMA_VERSION {
            return Err(Error::Schema { found: w.schema_version, expected: SCHEMA_VERSION.into() });
        }
        let sept: Vec<u32> = w.septuple.iter().map(|s| parse_u32(s)).collect::<Result<_>>()?;
        let ws = WeightSystem::from_septuple(&sept)?;
        if w.index != ws.index().to_string() {
            return Err(Error::Parse(format!("index {} disagrees with septuple {ws}", w.index)));
        }
        if w.basket.len() != w.basket_strata.len() {
            return Err(Error::Parse("basket and basketStrata lengths differ".into()));
        }
        let points = w
            .basket
            .iter()
            .zip(&w.basket_strata)
            .map(|(b, s)| {
                let (count, singularity) = BasketEntry::parse_basket_string(b)?;
                Ok(BasketEntry { stratum: StratumSelector::parse(s)?, count, singularity })
            })
            .collect::<Result<_>>()?;
        let non_isolated = w.non_isolated.iter().map(|s| StratumSelector::parse(s)).collect::<Result<_>>()?;
        let failing_strata = w
            .failing_strata
            .into_iter()
            .map(|f| Ok(FailingStratum { stratum: StratumSelector::parse(&f.stratum)?, reason: f.reason }))
            .collect::<Result<_>>()?;
        let verdict = w
            .verdict
            .map(|v| -> Result<IrrationalityVerdict> {
                let values: BTreeSet<u8> = v
                    .values
                    .iter()
                    .map(|s| s.parse::<u8>().map_err(|_| Error::Parse(format!("bad verdict value {s:?}"))))
                    .collect::<Result<_>>()?;
                if values.is_empty() || values.iter().any(|v| !(1..=3).contains(v)) {
                    return Err(Error::Parse(format!(
                        "verdict values must be a nonempty subset of {{1,2,3}}: {values:?}"
                    )));
                }
                Ok(IrrationalityVerdict { values, general_only: v.general_only, justification: v.justification })
            })
            .transpose()?;
        Ok(FamilyRecord {
            ws,
            membership: MembershipReport {
                wps_well_formed: w.flags.wps_well_formed,
                hypersurface_well_formed: w.flags.hypersurface_well_formed,
                linear_cone: w.flags.linear_cone,
                quasismooth_general: w.flags.quasismooth_general,
                failing_strata,
            },
            basket: SingularityBasket { points, non_isolated },
            terminal: w.flags.terminal,
            paper_number: w.paper_number.as_deref().map(parse_u32).transpose()?,
            verdict,
        })
    }
}

/// Canonical text: pretty JSON array plus a trailing newline.
pub fn catalog_to_string(records: &[FamilyRecord]) -> Result<String> {
    let wire: Vec<WireRecord> = records.iter().map(WireRecord::from).collect();
    let mut s = serde_json::to_string_pretty(&wire)?;
    s.push('\n');
    Ok(s)
}

pub fn catalog_from_str(s: &str) -> Result<Vec<FamilyRecord>> {
    // Check versions before strict decoding so a newer file reports its version.
    let raw: Vec<serde_json::Value> = serde_json::from_str(s)?;
    for v in &raw {
        let found = v.get("schemaVersion").and_then(|x| x.as_str()).unwrap_or("<missing>");
        if found != SCHEMA_VERSION {
            return Err(Error::Schema { found: found.to_string(), expected: SCHEMA_VERSION.into() });
        }
    }
    let wire: Vec<WireRecord> = serde_json::from_str(s)?;
    wire.into_iter().map(FamilyRecord::try_from).collect()
}

pub fn save_catalog(records: &[FamilyRecord], path: &Path) -> Result<()> {
    fs::write(path, catalog_to_string(records)?)?;
    Ok(())
}

pub fn load_catalog(path: &Path) -> Result<Vec<FamilyRecord>> {
    catalog_from_str(&fs::read_to_string(path)?)
}

/// Table with columns `№ | a1 | a2 | a3 | a4 | a5 | d | I`; unnamed records leave `№` empty.
pub fn markdown_report(records: &[FamilyRecord]) -> String {
    let mut s = String::from("| № | a1 | a2 | a3 | a4 | a5 | d | I |\n|---|---|---|---|---|---|---|---|\n");
    for r in records {
        let n = r.paper_number.map(|n| n.to_string()).unwrap_or_default();
        let v = r.ws.septuple().map(|x| x.to_string());
        s.push_str(&format!("| {n} | {} |\n", v.join(" | ")));
    }
    s
}

/// Report with an extra verdict column.
pub fn markdown_verdicts(records: &[FamilyRecord]) -> String {
    let mut s = String::from("| № | a1 | a2 | a3 | a4 | a5 | d | I | d(X) |\n|---|---|---|---|---|---|---|---|---|\n");
    for r in records {
        let n = r.paper_number.map(|n| n.to_string()).unwrap_or_default();
        let v = r.ws.septuple().map(|x| x.to_string());
        let verdict = r.verdict.as_ref().map(|v| {
            let mut t = v.values_string();
            if v.general_only {
                t.push_str(" (general)");
            }
            t
        });
        s.push_str(&format!("| {n} | {} | {} |\n", v.join(" | "), verdict.unwrap_or_default()));
    }
    s
}

/// Rules referenced by a verdict always have a citation.
pub fn cited(rule: RuleTag) -> &'static str {
    rule.citation()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_search_is_sorted_and_contains_quartic() {
        let b = SearchBounds { max_weight: 5, max_degree: 20, index_min: 1, index_max: 5 };
        let recs = classify(&b);
        assert!(recs.windows(2).all(|w| w[0].sort_key() < w[1].sort_key()));
        assert!(recs.iter().any(|r| r.ws.to_string() == "(1,1,1,1,1,4,1)"));
        assert!(recs.iter().all(|r| r.index() >= 1 && r.accepted()));
        assert_eq!(classify_with_jobs(&b, 3).unwrap(), recs);
    }

    #[test]
    fn numbers_are_static() {
        let w = WeightSystem::new([1, 2, 3, 3, 4], 12).unwrap();
        assert_eq!(paper_number(&w), Some(19));
        assert_eq!(septuple_of(84).unwrap().to_string(), "(1,7,8,9,12,36,1)");
        assert_eq!(paper_number(&WeightSystem::new([1, 1, 1, 2, 2], 6).unwrap()), None);
        assert!(septuple_of(97).is_none());
    }

    #[test]
    fn projection_exceptional_empty_input() {
        assert!(projection_exceptional(&[]).is_empty());
    }

    #[test]
    fn schema_mismatch_is_explicit() {
        let err = catalog_from_str(r#"[{"schemaVersion": "2"}]"#).unwrap_err();
        assert!(matches!(err, Error::Schema { .. }), "{err}");
    }

    #[test]
    fn record_round_trip_in_memory() {
        let r = evaluate(&WeightSystem::new([1, 1, 2, 3, 3], 9).unwrap()).unwrap();
        let s = catalog_to_string(std::slice::from_ref(&r)).unwrap();
        assert!(s.contains("\"1 × 1/2(1,1,1)\""));
        assert!(s.contains("\"paperNumber\": \"9\""));
        let back = catalog_from_str(&s).unwrap();
        assert_eq!(back, vec![r]);
        assert_eq!(catalog_to_string(&back).unwrap(), s);
    }

    #[test]
    fn report_layout() {
        let r = evaluate(&WeightSystem::new([1, 2, 3, 3, 4], 12).unwrap()).unwrap();
        let md = markdown_report(&[r]);
        assert_eq!(md.lines().next().unwrap(), "| № | a1 | a2 | a3 | a4 | a5 | d | I |");
        assert_eq!(md.lines().nth(2).unwrap(), "| 19 | 1 | 2 | 3 | 3 | 4 | 12 | 1 |");
    }
}
