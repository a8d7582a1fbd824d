use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::wspace::{enumerate_monomials, Monomial, WeightSystem, VAR_NAMES};

/// One coordinate change `x_j ↦ x_j + Σ *·m` together with the monomials it
/// must remove and the monomials that must survive it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Pass {
    pub target: usize,
    pub template: Vec<Monomial>,
    pub pivots: Vec<Monomial>,
    pub kills: Vec<Monomial>,
}

/// Passes whose constants are solved together and applied simultaneously.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Stage {
    pub passes: Vec<Pass>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NormalizationPlan {
    pub ws: WeightSystem,
    pub stages: Vec<Stage>,
}

fn monos(list: &[&str]) -> Vec<Monomial> {
    list.iter().map(|s| s.parse().expect("static monomial")).collect()
}

fn pass(target: usize, template: &[&str], pivots: &[&str], kills: &[&str]) -> Pass {
    Pass { target, template: monos(template), pivots: monos(pivots), kills: monos(kills) }
}

const Y: usize = 1;
const Z: usize = 2;
const T: usize = 3;
const W: usize = 4;

/// `w ↦ w + *·f_{a5}`: removes every `w²·m`, keeps `w³`.
fn w_pass(ws: &WeightSystem) -> Pass {
    let a5 = ws.weight(W);
    let template: Vec<Monomial> = enumerate_monomials(ws, a5).into_iter().filter(|m| m.degree_in(W) == 0).collect();
    let w2 = Monomial([0, 0, 0, 0, 2]);
    let kills = template.iter().map(|m| m.mul(&w2)).collect();
    Pass { target: W, template, pivots: vec![Monomial([0, 0, 0, 0, 3])], kills }
}

/// Rows of the coordinate-change table for the families with a `w³` term and
/// the three-line layout; each row keeps one monomial and removes the rest.
fn table_rows(number: u32) -> Option<Vec<Pass>> {
    Some(match number {
        39 => vec![
            pass(Y, &["x^3"], &["y*t^3"], &["x^3*t^3"]),
            pass(T, &["x*z", "x^2*y", "x^5"], &["y*t^3"], &["x*y*z*t^2", "x^2*y^2*t^2", "x^5*y*t^2"]),
            pass(Z, &["x*y", "x^4"], &["z^3*w"], &["x*y*z^2*w", "x^4*z^2*w"]),
        ],
        49 => vec![
            pass(Y, &["x^3"], &["y*t^3"], &["x^3*t^3"]),
            pass(T, &["x*z", "x^3*y", "x^6", "y^2"], &["y^5*t"], &["x*y^5*z", "x^6*y^5", "x^3*y^6", "y^7"]),
            pass(Z, &["x^2*y", "x^5"], &["x*z^4"], &["x^3*y*z^3", "x^6*z^3"]),
        ],
        // The last template entry carries a "*" like every other one.
        59 => vec![
            pass(Y, &["x^3"], &["y*t^3"], &["x^3*t^3"]),
            pass(T, &["x*y^2", "x*z", "x^7"], &["y*t^3"], &["x*y^3*t^2", "x*y*z*t^2", "x^7*y*t^2"]),
            pass(Z, &["y^2", "x^3*y", "x^6"], &["y^6*z"], &["x^6*y^6", "x^3*y^7", "y^8"]),
        ],
        66 => vec![
            pass(Z, &["x*y", "x^6"], &["z*t^3"], &["x*y*t^3", "x^6*t^3"]),
            pass(T, &["x*z", "x^2*y", "x^7"], &["y^4*t"], &["x*y^4*z", "x^7*y^4", "x^2*y^5"]),
            pass(Y, &["x^5"], &["y^4*t"], &["x^5*y^3*t"]),
        ],
        84 => vec![
            pass(Z, &["x*y", "x^8"], &["y^4*z"], &["x^8*y^4", "x*y^5"]),
            pass(Y, &["x^7"], &["y^4*z"], &["x^7*y^3*z"]),
            pass(T, &["x*z", "x^2*y", "x^9"], &["t^4"], &["x*z*t^3", "x^2*y*t^3", "x^9*t^3"]),
        ],
        _ => return None,
    })
}

pub const PLAN_NUMBERS: [u32; 7] = [19, 28, 39, 49, 59, 66, 84];

fn family_ws(number: u32) -> Result<WeightSystem> {
    if !PLAN_NUMBERS.contains(&number) {
        return Err(Error::Usage(format!("no normalization plan for family {number}; known: {PLAN_NUMBERS:?}")));
    }
    Ok(crate::catalog::septuple_of(number).expect("plan families are named"))
}

fn steps_19() -> Vec<Pass> {
    vec![
        pass(W, &["y^2", "x^2*y", "x*z", "x*t"], &["y^4*w"], &["y^6", "x^2*y^5", "x*y^4*z", "x*y^4*t"]),
        pass(Y, &["x^2"], &[], &["x^2*y^3*w"]),
        pass(Z, &["x*y", "x^3"], &[], &["x*y*t^3", "x^3*t^3"]),
        pass(T, &["x*y", "x^3"], &[], &["x*y*z^3", "x^3*z^3"]),
    ]
}

fn steps_28() -> Vec<Pass> {
    vec![
        pass(Z, &["x^3"], &[], &["x^3*t^3"]),
        pass(Y, &["x^3"], &["y^5"], &["x^3*y^4"]),
        pass(T, &["x*z", "x*y", "x^4"], &[], &["x*z^2*t^2", "x*y*z*t^2", "x^4*z*t^2"]),
    ]
}

/// Plan used by [`super::normalize`]. Passes that the chosen order would let
/// interfere are grouped into one simultaneous stage; for №19 two extra
/// stages first move two roots of the `(z,t)` quartic to `z = 0` and `t = 0`,
/// and for №28 the `(y,z)` change that keeps `t³z` runs on its own.
pub fn builtin_plan(number: u32) -> Result<NormalizationPlan> {
    let ws = family_ws(number)?;
    let stages = match number {
        19 => vec![
            Stage { passes: vec![pass(Z, &["t"], &["z*t^3"], &["t^4"])] },
            Stage { passes: vec![pass(T, &["z"], &["z^3*t"], &["z^4"])] },
            Stage { passes: steps_19() },
        ],
        28 => vec![
            Stage { passes: vec![w_pass(&ws)] },
            Stage { passes: vec![pass(Z, &["y"], &["z*t^3"], &["y*t^3"])] },
            Stage { passes: steps_28() },
        ],
        n => vec![Stage { passes: vec![w_pass(&ws)] }, Stage { passes: table_rows(n).expect("checked above") }],
    };
    let plan = NormalizationPlan { ws, stages };
    plan.validate()?;
    Ok(plan)
}

/// Every pass on its own, in the order the changes are listed; for №19 and
/// every family except №66 this order re-creates removed monomials and
/// [`super::normalize`] reports a plan-order error.
pub fn paper_order_plan(number: u32) -> Result<NormalizationPlan> {
    let ws = family_ws(number)?;
    let passes = match number {
        19 => steps_19(),
        28 => {
            let mut p = vec![w_pass(&ws), pass(Z, &["y"], &["z*t^3"], &["y*t^3"])];
            p.extend(steps_28());
            p
        }
        n => {
            let mut p = vec![w_pass(&ws)];
            p.extend(table_rows(n).expect("checked above"));
            p
        }
    };
    let plan = NormalizationPlan { ws, stages: passes.into_iter().map(|p| Stage { passes: vec![p] }).collect() };
    plan.validate()?;
    Ok(plan)
}

impl Stage {
    /// Passes sorted by target weight, then index: the order in which the
    /// simultaneous change is applied as single substitutions.
    pub fn application_order(&self, ws: &WeightSystem) -> Vec<&Pass> {
        let mut v: Vec<&Pass> = self.passes.iter().collect();
        v.sort_by_key(|p| (ws.weight(p.target), p.target));
        v
    }
}

impl NormalizationPlan {
    pub fn kills(&self) -> impl Iterator<Item = &Monomial> {
        self.stages.iter().flat_map(|s| s.passes.iter().flat_map(|p| p.kills.iter()))
    }

    pub fn pivots(&self) -> impl Iterator<Item = &Monomial> {
        self.stages.iter().flat_map(|s| s.passes.iter().flat_map(|p| p.pivots.iter()))
    }

    pub fn validate(&self) -> Result<()> {
        let ws = &self.ws;
        let d = ws.degree();
        for (si, stage) in self.stages.iter().enumerate() {
            let order = stage.application_order(ws);
            for (k, p) in order.iter().enumerate() {
                let a = ws.weight(p.target);
                for m in &p.template {
                    if m.weighted_degree(ws) != a || m.degree_in(p.target) > 0 {
                        return Err(Error::Precondition(format!(
                            "stage {si}: template monomial {m} unusable for {}",
                            VAR_NAMES[p.target]
                        )));
                    }
                    // A simultaneous change splits into single substitutions
                    // only when no earlier template uses a later target.
                    if order[k + 1..].iter().any(|q| m.degree_in(q.target) > 0) {
                        return Err(Error::Precondition(format!("stage {si}: {m} uses a later target")));
                    }
                }
                for m in p.kills.iter().chain(&p.pivots) {
                    if m.weighted_degree(ws) != d {
                        return Err(Error::Precondition(format!("stage {si}: {m} has degree ≠ {d}")));
                    }
                }
                if order[..k].iter().any(|q| q.target == p.target) {
                    return Err(Error::Precondition(format!("stage {si}: {} changed twice", VAR_NAMES[p.target])));
                }
            }
        }
        Ok(())
    }

    pub fn audit(&self) -> PlanAudit {
        PlanAudit {
            weights: self.ws.to_string(),
            stages: self
                .stages
                .iter()
                .map(|s| {
                    s.passes
                        .iter()
                        .map(|p| PassAudit {
                            change: p.to_string(),
                            pivots: p.pivots.iter().map(ToString::to_string).collect(),
                            kills: p.kills.iter().map(ToString::to_string).collect(),
                        })
                        .collect()
                })
                .collect(),
        }
    }
}

impl fmt::Display for Pass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = VAR_NAMES[self.target];
        let t: Vec<String> = self.template.iter().map(|m| format!(" + *{m}")).collect();
        write!(f, "{v} -> {v}{}", t.concat())
    }
}

/// JSON-friendly view of a plan.
#[derive(Clone, Debug, Serialize)]
pub struct PlanAudit {
    pub weights: String,
    pub stages: Vec<Vec<PassAudit>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PassAudit {
    pub change: String,
    pub pivots: Vec<String>,
    pub kills: Vec<String>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plans_are_valid() {
        for n in PLAN_NUMBERS {
            builtin_plan(n).unwrap();
            paper_order_plan(n).unwrap();
        }
        assert!(builtin_plan(9).is_err());
    }

    #[test]
    fn row_84_changes() {
        let p = paper_order_plan(84).unwrap();
        let changes: Vec<String> = p.stages[1..].iter().map(|s| s.passes[0].to_string()).collect();
        assert_eq!(changes, ["z -> z + *x*y + *x^8", "y -> y + *x^7", "t -> t + *x*z + *x^2*y + *x^9"]);
    }

    #[test]
    fn w_pass_of_28_uses_all_of_f5() {
        let p = builtin_plan(28).unwrap();
        let w = &p.stages[0].passes[0];
        let t: Vec<String> = w.template.iter().map(ToString::to_string).collect();
        assert_eq!(t, ["x^5", "x^2*y", "x^2*z", "x*t"]);
        assert_eq!(w.kills.len(), 4);
    }

    #[test]
    fn kill_counts() {
        let count = |n| builtin_plan(n).unwrap().kills().count();
        assert_eq!(count(19), 11);
        assert_eq!(count(28), 10);
        assert_eq!(count(39), 11);
        assert_eq!(count(49), 12);
        assert_eq!(count(59), 12);
        assert_eq!(count(66), 10);
        assert_eq!(count(84), 10);
    }
}
