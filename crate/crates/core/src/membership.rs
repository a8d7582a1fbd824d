//! Defining predicates of a family `X_d ⊂ P(a1,...,a5)`: well-formedness,
//! linear cones and quasismoothness of the general member.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::wspace::{representable, wps_well_formed, WeightSystem, NVARS, VAR_NAMES};

/// Nonempty subset of `{x, y, z, t, w}` as a bitmask (bit `i` is variable `i`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub struct StratumSelector(u8);

impl StratumSelector {
    pub fn new(mask: u8) -> Result<Self> {
        if mask == 0 || mask >= 1 << NVARS {
            return Err(Error::Usage(format!("invalid stratum mask {mask:#b}")));
        }
        Ok(StratumSelector(mask))
    }

    pub fn from_vars(vars: &[usize]) -> Result<Self> {
        Self::new(vars.iter().fold(0u8, |m, &i| m | (1 << i)))
    }

    /// All 31 nonempty subsets, by size then mask.
    pub fn all() -> Vec<StratumSelector> {
        let mut v: Vec<_> = (1u8..32).map(StratumSelector).collect();
        v.sort_by_key(|s| (s.len(), s.0));
        v
    }

    pub fn mask(&self) -> u8 {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    pub fn vars(&self) -> Vec<usize> {
        (0..NVARS).filter(|&i| self.contains(i)).collect()
    }

    pub fn complement(&self) -> Vec<usize> {
        (0..NVARS).filter(|&i| !self.contains(i)).collect()
    }

    pub fn weight_gcd(&self, ws: &WeightSystem) -> u32 {
        self.vars().iter().fold(0u32, |g, &i| g.gcd(&ws.weight(i)))
    }

    pub fn parse(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('{').trim_end_matches('}');
        let mut mask = 0u8;
        for v in inner.split(',').map(str::trim).filter(|v| !v.is_empty()) {
            let i = VAR_NAMES
                .iter()
                .position(|n| *n == v)
                .ok_or_else(|| Error::Parse(format!("unknown variable {v:?} in stratum {s:?}")))?;
            mask |= 1 << i;
        }
        Self::new(mask)
    }
}

impl fmt::Display for StratumSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.vars().into_iter().map(|i| VAR_NAMES[i]).collect();
        write!(f, "{{{}}}", names.join(","))
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FailingStratum {
    pub stratum: StratumSelector,
    pub reason: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct MembershipReport {
    pub wps_well_formed: bool,
    pub hypersurface_well_formed: bool,
    pub linear_cone: bool,
    pub quasismooth_general: bool,
    pub failing_strata: Vec<FailingStratum>,
}

impl MembershipReport {
    pub fn accepted(&self) -> bool {
        self.wps_well_formed && self.hypersurface_well_formed && !self.linear_cone && self.quasismooth_general
    }
}

pub fn is_linear_cone(ws: &WeightSystem) -> bool {
    ws.weights().contains(&ws.degree())
}

/// Condition (a): a degree-`d` monomial in the variables of `s` alone.
pub fn has_pure_monomial(ws: &WeightSystem, s: StratumSelector) -> bool {
    representable(ws, s.mask(), i64::from(ws.degree()))
}

/// Outside variables `x_j` admitting a degree-`d` monomial `m * x_j` with `m`
/// a nonconstant monomial in `s`.
pub fn outside_partners(ws: &WeightSystem, s: StratumSelector) -> Vec<usize> {
    let d = i64::from(ws.degree());
    s.complement()
        .into_iter()
        .filter(|&j| {
            let n = d - i64::from(ws.weight(j));
            n > 0 && representable(ws, s.mask(), n)
        })
        .collect()
}

/// Quasismoothness of the general member, subset by subset.
pub fn quasismooth_general(ws: &WeightSystem) -> Result<(bool, Vec<FailingStratum>)> {
    if is_linear_cone(ws) {
        return Err(Error::Precondition(format!("{ws} is a linear cone")));
    }
    let mut failing = Vec::new();
    for s in StratumSelector::all() {
        if has_pure_monomial(ws, s) {
            continue;
        }
        let partners = outside_partners(ws, s);
        if partners.len() < s.len() {
            failing.push(FailingStratum {
                stratum: s,
                reason: format!(
                    "no pure degree-{} monomial and only {} of {} outside partners",
                    ws.degree(),
                    partners.len(),
                    s.len()
                ),
            });
        }
    }
    Ok((failing.is_empty(), failing))
}

/// Ambient well-formedness plus: no 3-variable stratum with weight gcd `> 1`
/// is contained in the general member.
pub fn hypersurface_well_formed(ws: &WeightSystem) -> bool {
    if !wps_well_formed(ws) {
        return false;
    }
    StratumSelector::all()
        .into_iter()
        .filter(|s| s.len() == 3 && s.weight_gcd(ws) > 1)
        .all(|s| has_pure_monomial(ws, s))
}

pub fn membership_report(ws: &WeightSystem) -> MembershipReport {
    let linear_cone = is_linear_cone(ws);
    let (quasismooth_general, failing_strata) =
        if linear_cone { (false, Vec::new()) } else { quasismooth_general(ws).expect("not a linear cone") };
    MembershipReport {
        wps_well_formed: wps_well_formed(ws),
        hypersurface_well_formed: hypersurface_well_formed(ws),
        linear_cone,
        quasismooth_general,
        failing_strata,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wspace::enumerate_monomials;

    fn ws(a: [u32; 5], d: u32) -> WeightSystem {
        WeightSystem::new(a, d).unwrap()
    }

    /// Direct check of all 31 subsets from the explicit monomial list.
    fn brute_force_quasismooth(w: &WeightSystem) -> bool {
        let mons = enumerate_monomials(w, w.degree());
        StratumSelector::all().into_iter().all(|s| {
            if mons.iter().any(|m| m.uses_only(s.mask())) {
                return true;
            }
            let mut partners = std::collections::BTreeSet::new();
            for m in &mons {
                let outside: Vec<usize> = s.complement().into_iter().filter(|&j| m.degree_in(j) > 0).collect();
                if outside.len() == 1 && m.degree_in(outside[0]) == 1 && m.total_degree() >= 2 {
                    partners.insert(outside[0]);
                }
            }
            partners.len() >= s.len()
        })
    }

    #[test]
    fn linear_cones() {
        assert!(is_linear_cone(&ws([1, 1, 1, 1, 4], 4)));
        assert!(!is_linear_cone(&ws([1, 1, 1, 1, 1], 4)));
        assert!(!is_linear_cone(&ws([1, 2, 3, 3, 4], 12)));
        assert!(quasismooth_general(&ws([1, 1, 1, 1, 4], 4)).is_err());
    }

    #[test]
    fn quasismooth_examples() {
        assert!(quasismooth_general(&ws([1, 1, 1, 1, 1], 4)).unwrap().0);
        assert!(quasismooth_general(&ws([1, 1, 2, 3, 3], 9)).unwrap().0);
    }

    #[test]
    fn smallest_failing_septuple_matches_brute_force() {
        let mut first = None;
        'outer: for a1 in 1..=6u32 {
            for a2 in a1..=6 {
                for a3 in a2..=6 {
                    for a4 in a3..=6 {
                        for a5 in a4..=6 {
                            let d = a1 + a2 + a3 + a4 + a5 - 1;
                            let w = ws([a1, a2, a3, a4, a5], d);
                            if is_linear_cone(&w) {
                                continue;
                            }
                            let fast = quasismooth_general(&w).unwrap().0;
                            assert_eq!(fast, brute_force_quasismooth(&w), "{w}");
                            if !fast && first.is_none() {
                                first = Some(w);
                                break 'outer;
                            }
                        }
                    }
                }
            }
        }
        // At the w-vertex of (1,1,1,1,4;7) neither w^m nor w^m * x_j has degree 7.
        let w = first.expect("some septuple fails");
        assert!(!brute_force_quasismooth(&w));
        assert_eq!(w.to_string(), "(1,1,1,1,4,7,1)");
    }

    #[test]
    fn brute_force_agreement_small_weights() {
        for a in [[1, 1, 2, 3, 3], [1, 2, 3, 3, 4], [1, 3, 4, 5, 6], [2, 2, 3, 5, 7], [1, 1, 3, 3, 5]] {
            for d in 2..=20 {
                let w = ws(a, d);
                if is_linear_cone(&w) {
                    continue;
                }
                assert_eq!(quasismooth_general(&w).unwrap().0, brute_force_quasismooth(&w), "{w}");
            }
        }
    }

    #[test]
    fn hypersurface_well_formedness() {
        assert!(hypersurface_well_formed(&ws([1, 1, 1, 1, 1], 4)));
        assert!(hypersurface_well_formed(&ws([1, 7, 8, 9, 12], 36)));
        // Scan weights <= 8 for a 3-subset with gcd > 1 and no monomial in its variables.
        let mut found = None;
        'scan: for a2 in 1..=8u32 {
            for a3 in a2..=8 {
                for a4 in a3..=8 {
                    for a5 in a4..=8 {
                        let w = ws([1, a2, a3, a4, a5], 1 + a2 + a3 + a4 + a5 - 1);
                        if !wps_well_formed(&w) {
                            continue;
                        }
                        let bad = StratumSelector::all().into_iter().any(|s| {
                            s.len() == 3
                                && s.weight_gcd(&w) > 1
                                && !enumerate_monomials(&w, w.degree()).iter().any(|m| m.uses_only(s.mask()))
                        });
                        if bad {
                            assert!(!hypersurface_well_formed(&w));
                            found = Some(w);
                            break 'scan;
                        }
                    }
                }
            }
        }
        assert!(found.is_some());
    }

    #[test]
    fn stratum_text() {
        let s = StratumSelector::from_vars(&[2, 3]).unwrap();
        assert_eq!(s.to_string(), "{z,t}");
        assert_eq!(StratumSelector::parse("{z,t}").unwrap(), s);
        assert_eq!(StratumSelector::all().len(), 31);
        assert!(StratumSelector::new(0).is_err());
    }
}
