//! Diagonal symmetry groups of monomial supports, diagonal involutions,
//! stabilizers of finite point sets on `P^1`, and the trivial-automorphism
//! certificates for the seven families with a normalization plan.

mod diagonal;
mod pgl2;

pub use diagonal::{
    diagonal_symmetry_group, format_signs, has_diagonal_involution, scaling_preserves, tau_template_support,
    DiagonalSymmetryGroup, InvolutionResult, RootOfUnityScaling, SignVector,
};
pub use pgl2::{pgl2_set_stabilizer, LineMap, PointSetOnLine};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::{BinaryForm, ProjPoint};
use crate::symalg::{normalized_member, BinarySpec, GradedPolynomial, PLAN_NUMBERS};

/// Extra seeds tried when the sampled member has a degenerate point set.
pub const CERTIFICATE_RESAMPLES: u64 = 32;

#[derive(Clone, PartialEq, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PointSetCertificate {
    /// The binary forms whose roots make up the set, e.g. `["(z,t)^4", "y^3*(z,t)^2"]`.
    pub forms: Vec<String>,
    pub points: Vec<String>,
    pub stabilizer: Vec<LineMap>,
    pub trivial: bool,
}

#[derive(Clone, PartialEq, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AutomorphismCertificate {
    pub paper_number: u32,
    pub weights: String,
    pub seed: u64,
    /// The seed actually used; differs from `seed` after a re-sample.
    pub member_seed: u64,
    pub attempts: u32,
    pub normalized: String,
    pub support: Vec<String>,
    pub genericity_checks: Vec<String>,
    pub point_sets: Vec<PointSetCertificate>,
    pub diagonal: DiagonalSymmetryGroup,
    pub involution: InvolutionResult,
    pub trivial: bool,
}

/// Point sets cut by the normalized member where a 2x2 block has to be ruled out.
fn point_set_specs(number: u32, f: &GradedPolynomial) -> Result<Vec<Vec<BinarySpec>>> {
    let ws = f.ws();
    Ok(match number {
        19 => vec![vec![BinarySpec::new(ws, "1", "z", "t", 4)?, BinarySpec::new(ws, "y^3", "z", "t", 2)?]],
        28 => vec![vec![BinarySpec::new(ws, "1", "y", "z", 5)?]],
        _ => Vec::new(),
    })
}

/// Distinct rational roots of the product, or `None` unless it splits into
/// distinct linear factors over `Q`.
fn split_points(forms: &[BinaryForm]) -> Option<Vec<ProjPoint>> {
    let product = forms.iter().skip(1).fold(forms[0].clone(), |acc, b| acc.mul(b));
    if product.is_zero() {
        return None;
    }
    let roots = product.rational_roots();
    (roots.len() == product.degree()).then_some(roots)
}

fn certificate_for(number: u32, seed: u64, member_seed: u64) -> Result<AutomorphismCertificate> {
    let member = normalized_member(number, member_seed)?;
    let f = &member.normalized.polynomial;
    let ws = *f.ws();
    let mut point_sets = Vec::new();
    for specs in point_set_specs(number, f)? {
        let forms: Vec<BinaryForm> = specs.iter().map(|s| s.form(f)).collect();
        let names: Vec<String> = specs.iter().map(BinarySpec::to_string).collect();
        let points = split_points(&forms).ok_or_else(|| {
            Error::genericity(
                "certificate point set",
                format!("{} does not give distinct rational points", names.join(" * ")),
            )
        })?;
        let set = PointSetOnLine::new(points)?;
        let stabilizer = pgl2_set_stabilizer(&set)?;
        point_sets.push(PointSetCertificate {
            forms: names,
            points: set.points().iter().map(ProjPoint::to_string).collect(),
            trivial: stabilizer.len() == 1,
            stabilizer,
        });
    }
    let support = f.support();
    let diagonal = diagonal_symmetry_group(&support, &ws)?;
    let involution = has_diagonal_involution(&support, &ws)?;
    let trivial = diagonal.induced_trivial && !involution.present && point_sets.iter().all(|p| p.trivial);
    Ok(AutomorphismCertificate {
        paper_number: number,
        weights: ws.to_string(),
        seed,
        member_seed,
        attempts: member.attempts,
        normalized: f.to_string(),
        support: support.iter().map(ToString::to_string).collect(),
        genericity_checks: member.checks,
        point_sets,
        diagonal,
        involution,
        trivial,
    })
}

/// Normalizes a seeded general member, then checks the diagonal group of its
/// support and, for 19 and 28, the stabilizer of the point set on `P^1`.
/// A degenerate point set re-draws with the next seed.
pub fn certify_trivial_automorphisms(number: u32, seed: u64) -> Result<AutomorphismCertificate> {
    if !PLAN_NUMBERS.contains(&number) {
        return Err(Error::Precondition(format!("no automorphism certificate for family {number}")));
    }
    let mut last = None;
    for k in 0..=CERTIFICATE_RESAMPLES {
        match certificate_for(number, seed, seed.wrapping_add(k)) {
            Err(e) if e.is_resampleable() => last = Some(e),
            other => return other,
        }
    }
    Err(last.unwrap_or_else(|| Error::Internal("no certificate attempt ran".into())))
}
