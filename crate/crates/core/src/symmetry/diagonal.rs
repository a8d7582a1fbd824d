use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::{gcd_tuple, smith_normal_form, IntegerMatrix};
use crate::wspace::{enumerate_monomials, Monomial, WeightSystem, NVARS};

/// `λ_j = exp(2πi · exponents[j] / order)`; exponents reduced into `0..order`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct RootOfUnityScaling {
    pub order: u64,
    pub exponents: [u64; NVARS],
}

impl fmt::Display for RootOfUnityScaling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e: Vec<String> = self.exponents.iter().map(u64::to_string).collect();
        write!(f, "zeta_{}^({})", self.order, e.join(", "))
    }
}

/// Diagonal scalings `λ ∈ (C*)^5` with `λ^m` constant on the support,
/// i.e. the character group of `Z^5 / L` for the difference lattice `L`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DiagonalSymmetryGroup {
    pub free_rank: usize,
    /// Elementary divisors `>= 2`, each dividing the next.
    pub torsion: Vec<u64>,
    pub induced_trivial: bool,
    /// One generator per torsion factor, in the same order.
    pub generators: Vec<RootOfUnityScaling>,
}

/// Rows `m_i - m_0` for `i >= 1`.
fn difference_rows(support: &BTreeSet<Monomial>, ws: &WeightSystem) -> Result<Vec<[i64; NVARS]>> {
    let mut it = support.iter();
    let first = it.next().ok_or_else(|| Error::Precondition("empty support".into()))?;
    let grade = first.weighted_degree(ws);
    let base = first.exponents();
    let mut rows = Vec::with_capacity(support.len().saturating_sub(1));
    for m in it {
        if m.weighted_degree(ws) != grade {
            return Err(Error::Precondition(format!(
                "mixed grades: {first} has degree {grade}, {m} has degree {}",
                m.weighted_degree(ws)
            )));
        }
        let e = m.exponents();
        rows.push(std::array::from_fn(|j| i64::from(e[j]) - i64::from(base[j])));
    }
    Ok(rows)
}

pub fn diagonal_symmetry_group(support: &BTreeSet<Monomial>, ws: &WeightSystem) -> Result<DiagonalSymmetryGroup> {
    let rows = difference_rows(support, ws)?;
    let a = ws.weights();
    for r in &rows {
        let pairing: i64 = r.iter().zip(a.iter()).map(|(d, &w)| d * i64::from(w)).sum();
        if pairing != 0 {
            return Err(Error::Internal(format!("weight vector pairs to {pairing} with a difference vector")));
        }
    }
    let matrix = if rows.is_empty() {
        IntegerMatrix::zeros(0, NVARS)
    } else {
        IntegerMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    };
    let snf = smith_normal_form(&matrix);
    let rank = snf.rank();
    let free_rank = NVARS - rank;
    if free_rank == 0 {
        return Err(Error::Internal("difference lattice has full rank".into()));
    }
    // Character θ = R φ with φ_i ∈ (1/d_i) Z; column i of R gives the generator.
    let mut torsion = Vec::new();
    let mut generators = Vec::new();
    for (i, d) in snf.diagonal.iter().enumerate().take(rank) {
        let d = d.abs();
        if d <= BigInt::from(1) {
            continue;
        }
        let order = d.to_u64().ok_or_else(|| Error::Internal("elementary divisor overflow".into()))?;
        let exponents =
            std::array::from_fn(|j| snf.right.get(j, i).mod_floor(&d).to_u64().expect("reduced below a u64 order"));
        torsion.push(order);
        generators.push(RootOfUnityScaling { order, exponents });
    }
    let induced_trivial = free_rank == 1 && torsion.is_empty();
    Ok(DiagonalSymmetryGroup { free_rank, torsion, induced_trivial, generators })
}

/// Signs `±1` per coordinate; `true` means `-1`.
pub type SignVector = [bool; NVARS];

pub fn format_signs(s: &SignVector) -> String {
    let c: Vec<&str> = s.iter().map(|&neg| if neg { "-" } else { "+" }).collect();
    format!("({})", c.join(","))
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InvolutionResult {
    pub present: bool,
    /// First admissible sign vector in lexicographic order, `+` before `-`.
    pub witness: Option<SignVector>,
}

impl Serialize for InvolutionResult {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("InvolutionResult", 2)?;
        st.serialize_field("present", &self.present)?;
        st.serialize_field("witness", &self.witness.as_ref().map(format_signs))?;
        st.end()
    }
}

/// The sign vectors that come from the weighted torus: `s = exp(iπk/g)`,
/// `g = gcd(a)`, gives `(-1)^(k a_j / g)`.
fn torus_signs(ws: &WeightSystem) -> [SignVector; 2] {
    let a = ws.weights();
    let g = gcd_tuple(&a.map(u64::from)).expect("five weights") as u32;
    [[false; NVARS], a.map(|w| (w / g) % 2 == 1)]
}

/// An element of order 2 modulo the torus can always be moved to a sign
/// vector by a torus element, so the 32 sign vectors are exhaustive.
pub fn has_diagonal_involution(support: &BTreeSet<Monomial>, ws: &WeightSystem) -> Result<InvolutionResult> {
    let rows = difference_rows(support, ws)?;
    let excluded = torus_signs(ws);
    for code in 0u32..(1 << NVARS) {
        let signs: SignVector = std::array::from_fn(|j| code & (1 << (NVARS - 1 - j)) != 0);
        if excluded.contains(&signs) {
            continue;
        }
        let fixes = rows.iter().all(|r| {
            let odd: i64 = r.iter().zip(signs.iter()).filter(|(_, &neg)| neg).map(|(d, _)| *d).sum();
            odd.is_even()
        });
        if fixes {
            return Ok(InvolutionResult { present: true, witness: Some(signs) });
        }
    }
    Ok(InvolutionResult { present: false, witness: None })
}

/// Degree-4 monomials on `P^4` even in `(t, w)` jointly: the support of
/// `h4(x,y,z) + t^2 a2 + t w b2 + w^2 c2 + g4(t,w)`.
pub fn tau_template_support() -> BTreeSet<Monomial> {
    let ws = WeightSystem::new([1; NVARS], 4).expect("P^4 quartic");
    enumerate_monomials(&ws, 4).into_iter().filter(|m| (m.degree_in(3) + m.degree_in(4)) % 2 == 0).collect()
}

/// Character test: does the scaling fix every difference vector?
pub fn scaling_preserves(support: &BTreeSet<Monomial>, ws: &WeightSystem, g: &RootOfUnityScaling) -> Result<bool> {
    let rows = difference_rows(support, ws)?;
    let order = i128::from(g.order);
    Ok(rows.iter().all(|r| {
        let s: i128 = r.iter().zip(g.exponents.iter()).map(|(d, e)| i128::from(*d) * i128::from(*e)).sum();
        s.rem_euclid(order).is_zero()
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p4() -> WeightSystem {
        WeightSystem::new([1; NVARS], 4).unwrap()
    }

    fn set(ms: &[&str]) -> BTreeSet<Monomial> {
        ms.iter().map(|s| s.parse().unwrap()).collect()
    }

    #[test]
    fn full_quartic_support_is_trivial() {
        let s: BTreeSet<Monomial> = enumerate_monomials(&p4(), 4).into_iter().collect();
        let g = diagonal_symmetry_group(&s, &p4()).unwrap();
        assert_eq!((g.free_rank, g.torsion.clone(), g.induced_trivial), (1, vec![], true));
        assert!(!has_diagonal_involution(&s, &p4()).unwrap().present);
    }

    #[test]
    fn fermat_quartic_torsion() {
        // Differences 4(e_i - e_0): SNF diag(4,4,4,4), cokernel Z + (Z/4)^4.
        let s = set(&["x^4", "y^4", "z^4", "t^4", "w^4"]);
        let g = diagonal_symmetry_group(&s, &p4()).unwrap();
        assert_eq!(g.free_rank, 1);
        assert_eq!(g.torsion, vec![4, 4, 4, 4]);
        assert!(!g.induced_trivial);
        for gen in &g.generators {
            assert!(scaling_preserves(&s, &p4(), gen).unwrap());
        }
    }

    #[test]
    fn tau_template_has_the_tau_witness() {
        let r = has_diagonal_involution(&tau_template_support(), &p4()).unwrap();
        assert!(r.present);
        assert_eq!(format_signs(&r.witness.unwrap()), "(+,+,+,-,-)");
    }

    #[test]
    fn single_monomial_has_involution() {
        let s = set(&["x^2*y*z"]);
        let r = has_diagonal_involution(&s, &p4()).unwrap();
        assert!(r.present);
        assert_eq!(format_signs(&r.witness.unwrap()), "(+,+,+,+,-)");
        assert_eq!(diagonal_symmetry_group(&s, &p4()).unwrap().free_rank, 5);
    }

    #[test]
    fn torus_sign_is_not_an_involution() {
        // x^4 + ... + x*y*z*t: a 2-torsion element must not be the global -1.
        let s = set(&["x^4", "y^4", "z^4", "t^4", "w^4", "x*y*z*t", "x*y*z*w", "x*y*t*w", "x^2*y*z", "x^3*y"]);
        let r = has_diagonal_involution(&s, &p4()).unwrap();
        if let Some(w) = r.witness {
            assert_ne!(w, [true; NVARS]);
        }
    }

    #[test]
    fn mixed_grades_rejected() {
        assert!(matches!(diagonal_symmetry_group(&set(&["x^4", "x^3"]), &p4()), Err(Error::Precondition(_))));
        assert!(diagonal_symmetry_group(&BTreeSet::new(), &p4()).is_err());
    }

    #[test]
    fn weighted_torus_uses_reduced_weights() {
        // Weights (2,2,2,2,2): g = 2 and a/g = 1, so the torus sign is (-,-,-,-,-).
        let ws = WeightSystem::new([2; NVARS], 8).unwrap();
        assert_eq!(torus_signs(&ws)[1], [true; NVARS]);
    }
}
