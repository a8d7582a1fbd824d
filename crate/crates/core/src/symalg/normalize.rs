use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::coeff::Coeff;
use super::param::ParamPoly;
use super::plan::{NormalizationPlan, Stage};
use super::poly::{GradedPolynomial, Substitution};
use crate::error::{Error, Result};
use crate::exactmath::{Rational, UniPoly};
use crate::wspace::{Monomial, NVARS};

#[derive(Clone, PartialEq, Debug)]
pub struct Normalized {
    pub polynomial: GradedPolynomial,
    /// Single substitutions in application order.
    pub substitutions: Vec<Substitution>,
}

/// Unknown `i` of a stage: constant of `template[k]` in `passes[p]`.
fn unknown_slots(stage: &Stage) -> Vec<(usize, usize)> {
    stage.passes.iter().enumerate().flat_map(|(p, pass)| (0..pass.template.len()).map(move |k| (p, k))).collect()
}

/// Coefficients of `targets` in `f` after the stage's change with symbolic
/// constants. Partial products that divide no target are dropped early.
pub fn kill_equations(f: &GradedPolynomial, stage: &Stage, targets: &[Monomial]) -> BTreeMap<Monomial, ParamPoly> {
    let mut factors: [Option<Vec<(Monomial, ParamPoly)>>; NVARS] = Default::default();
    let mut u = 0;
    for pass in &stage.passes {
        let mut fac = vec![(Monomial::var(pass.target), ParamPoly::constant(Rational::one()))];
        for m in &pass.template {
            fac.push((*m, ParamPoly::unknown(u)));
            u += 1;
        }
        factors[pass.target] = Some(fac);
    }
    let useful = |m: &Monomial| targets.iter().any(|t| m.divides(t));
    let mut out: BTreeMap<Monomial, ParamPoly> = targets.iter().map(|t| (*t, ParamPoly::zero())).collect();
    for (m, c) in f.terms() {
        let mut partial: BTreeMap<Monomial, ParamPoly> =
            BTreeMap::from([(Monomial::ONE, ParamPoly::constant(c.clone()))]);
        for (j, &e) in m.exponents().iter().enumerate() {
            for _ in 0..e {
                let mut next: BTreeMap<Monomial, ParamPoly> = BTreeMap::new();
                for (pm, pc) in &partial {
                    let opts: Vec<(Monomial, ParamPoly)> = match &factors[j] {
                        Some(fac) => fac.clone(),
                        None => vec![(Monomial::var(j), ParamPoly::constant(Rational::one()))],
                    };
                    for (fm, fc) in opts {
                        let nm = pm.mul(&fm);
                        if useful(&nm) {
                            let v = next.entry(nm).or_default();
                            *v = v.add(&pc.mul(&fc));
                        }
                    }
                }
                partial = next;
                if partial.is_empty() {
                    break;
                }
            }
            if partial.is_empty() {
                break;
            }
        }
        for (pm, pc) in partial {
            if let Some(v) = out.get_mut(&pm) {
                *v = v.add(&pc);
            }
        }
    }
    out
}

fn genericity(stage: usize, detail: String) -> Error {
    Error::genericity(format!("normalize stage {stage}"), detail)
}

/// Solves the stage's kill equations. Linear unknowns come from one-unknown
/// equations or from row reduction; a remaining one-unknown nonlinear
/// equation takes its rational root of least height. Unconstrained unknowns are 0.
pub fn solve_stage(
    equations: &BTreeMap<Monomial, ParamPoly>,
    n_unknowns: usize,
    stage_no: usize,
) -> Result<Vec<Rational>> {
    let mut known: Vec<Option<Rational>> = vec![None; n_unknowns];
    loop {
        let eqs: Vec<(Monomial, ParamPoly)> =
            equations.iter().map(|(m, e)| (*m, e.substitute(&known))).filter(|(_, e)| !e.is_zero()).collect();
        if eqs.is_empty() {
            break;
        }
        if let Some((m, _)) = eqs.iter().find(|(_, e)| e.as_constant().is_some()) {
            return Err(genericity(stage_no, format!("coefficient of {m} cannot be removed")));
        }
        let mut progress = false;
        for (_, e) in &eqs {
            let un = e.unknowns();
            if un.len() == 1 && e.total_degree() == 1 {
                let (lin, c) = e.linear_parts().expect("degree one");
                let i = un[0];
                if known[i].is_none() {
                    known[i] = Some(-c / &lin[&i]);
                    progress = true;
                }
            }
        }
        if progress {
            continue;
        }
        let linear: Vec<(BTreeMap<usize, Rational>, Rational)> =
            eqs.iter().filter_map(|(_, e)| e.linear_parts()).collect();
        if !linear.is_empty() {
            let solved = rref_single_unknowns(&linear, n_unknowns).map_err(|m| genericity(stage_no, m))?;
            for (i, v) in solved {
                if known[i].is_none() {
                    known[i] = Some(v);
                    progress = true;
                }
            }
        }
        if progress {
            continue;
        }
        let uni = eqs.iter().find_map(|(m, e)| {
            let un = e.unknowns();
            (un.len() == 1).then(|| (m, un[0], e.univariate_in(un[0]).expect("single unknown")))
        });
        match uni {
            Some((m, i, coeffs)) => {
                let p = UniPoly::new(coeffs);
                let root = if p.eval(&Rational::zero()).is_zero() {
                    Some(Rational::zero())
                } else {
                    p.rational_roots().into_iter().next()
                };
                match root {
                    Some(r) => known[i] = Some(r),
                    None => return Err(genericity(stage_no, format!("equation for {m} has no rational root: {p}"))),
                }
            }
            None => {
                let text: Vec<String> = eqs.iter().map(|(m, e)| format!("[{m}] {e}")).collect();
                return Err(Error::PlanNotTriangular(format!("stage {stage_no}: {}", text.join("; "))));
            }
        }
    }
    Ok(known.into_iter().map(|v| v.unwrap_or_else(Rational::zero)).collect())
}

/// Row-reduces the linear equations and returns unknowns pinned by a row with
/// a single unknown. An inconsistent row is reported as a message.
#[allow(clippy::needless_range_loop)]
fn rref_single_unknowns(
    eqs: &[(BTreeMap<usize, Rational>, Rational)],
    n: usize,
) -> std::result::Result<Vec<(usize, Rational)>, String> {
    // Row: coefficients of unknowns, then −constant.
    let mut rows: Vec<Vec<Rational>> = eqs
        .iter()
        .map(|(lin, c)| {
            let mut r = vec![Rational::zero(); n + 1];
            for (i, v) in lin {
                r[*i] = v.clone();
            }
            r[n] = -c;
            r
        })
        .collect();
    let mut lead = 0;
    for col in 0..n {
        let Some(p) = (lead..rows.len()).find(|&r| !rows[r][col].is_zero()) else { continue };
        rows.swap(lead, p);
        let inv = rows[lead][col].recip();
        for v in rows[lead].iter_mut() {
            *v *= &inv;
        }
        for r in 0..rows.len() {
            if r != lead && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for k in 0..=n {
                    let sub = &factor * &rows[lead][k];
                    rows[r][k] -= sub;
                }
            }
        }
        lead += 1;
    }
    let mut out = Vec::new();
    for r in &rows {
        let nz: Vec<usize> = (0..n).filter(|&k| !r[k].is_zero()).collect();
        match nz.len() {
            0 if !r[n].is_zero() => return Err("inconsistent linear conditions".into()),
            1 => out.push((nz[0], r[n].clone())),
            _ => {}
        }
    }
    Ok(out)
}

/// Runs every stage, then re-checks all removals and pivots together.
pub fn normalize(f: &GradedPolynomial, plan: &NormalizationPlan) -> Result<Normalized> {
    if *f.ws() != plan.ws || f.grade() != plan.ws.degree() {
        return Err(Error::Precondition(format!(
            "polynomial on {} grade {} does not match plan on {}",
            f.ws(),
            f.grade(),
            plan.ws
        )));
    }
    let mut cur = f.clone();
    let mut applied = Vec::new();
    for (si, stage) in plan.stages.iter().enumerate() {
        let kills: Vec<Monomial> = stage.passes.iter().flat_map(|p| p.kills.iter().copied()).collect();
        let eqs = kill_equations(&cur, stage, &kills);
        let slots = unknown_slots(stage);
        let values = solve_stage(&eqs, slots.len(), si)?;
        let mut by_pass: Vec<Vec<(Monomial, Rational)>> = vec![Vec::new(); stage.passes.len()];
        for ((p, k), v) in slots.iter().zip(values) {
            by_pass[*p].push((stage.passes[*p].template[*k], v));
        }
        for pass in stage.application_order(&plan.ws) {
            let idx = stage.passes.iter().position(|q| std::ptr::eq(q, pass)).expect("pass of this stage");
            let s = Substitution::from_correction(&plan.ws, pass.target, by_pass[idx].clone())?;
            cur = cur.substitute(&s)?;
            applied.push(s);
        }
        for pass in &stage.passes {
            if let Some(m) = pass.kills.iter().find(|m| cur.contains(m)) {
                return Err(Error::Internal(format!("stage {si}: {m} survived its own solve")));
            }
            if let Some(m) = pass.pivots.iter().find(|m| !cur.contains(m)) {
                return Err(genericity(si, format!("pivot {m} vanished")));
            }
        }
    }
    if let Some(m) = plan.kills().find(|m| cur.contains(m)) {
        return Err(Error::PlanOrder(m.to_string()));
    }
    if let Some(m) = plan.pivots().find(|m| !cur.contains(m)) {
        return Err(Error::genericity("normalize post-check".to_string(), format!("pivot {m} vanished")));
    }
    Ok(Normalized { polynomial: cur, substitutions: applied })
}

/// Applies recorded substitutions in order.
pub fn replay<C: Coeff>(f: &GradedPolynomial<C>, subs: &[Substitution<C>]) -> Result<GradedPolynomial<C>> {
    subs.iter().try_fold(f.clone(), |acc, s| acc.substitute(s))
}
